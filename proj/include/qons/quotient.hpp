#pragma once

#include <chrono>
#include <deque>
#include <queue>

#include "presentations.hpp"
#include "universe.hpp"
#include "zpoly.hpp"

namespace qons {

/* Degree-truncated quotient of the free algebra by one of the presentations.
 *
 * The build saturates the relation instances under single-letter products up
 * to degree D+H and keeps a row echelon of the resulting span, fraction-free
 * over Z[q, q^-1] with content stripping.  Pivots are maximal monomials in
 * the canonical order; since that order is degree compatible and monotone
 * under one-sided multiplication by letters, a single upward sweep reaches
 * the full truncated ideal.  Rows whose pivot degree exceeds D are only
 * scaffolding and are dropped after the build; the retained rows are
 * back-substituted against each other, so each stored tail is supported on
 * basis monomials only. */
class TruncatedQuotient {
public:
	struct Stats {
		long candidates = 0;
		long inserted = 0;
		long retained = 0;
		long elim_ms = 0;
	};

	static TruncatedQuotient build(const Presentation& p, int D, int H) {
		if (D < 0 || H < 0) throw UsageError("negative degree bound");
		TruncatedQuotient tq(p, D, H);
		tq.run_build();
		return tq;
	}

	const Presentation& presentation() const { return pres_; }
	int degree_bound() const { return D_; }
	int headroom() const { return H_; }
	const Stats& stats() const { return stats_; }

	/* dims()[d] = dimension of the degree <= d slice, d = 0..D */
	const std::vector<long>& dims() const { return dims_; }
	long dim_at(int d) const {
		if (d < 0 || d > D_) throw UsageError("degree out of range");
		return dims_[d];
	}

	/* basis monomials (non-pivot words) of degree <= dmax, canonical order */
	std::vector<Word> basis_words(int dmax) const {
		if (dmax > D_) throw UsageError("degree out of range");
		std::vector<Word> out;
		for (size_t id = 0; id < uni_.words.size(); ++id) {
			if (uni_.deg[id] > dmax) break;
			if (piv2row_[id] < 0) out.push_back(uni_.words[id]);
		}
		return out;
	}

	bool is_pivot_word(const Word& w) const {
		int id = uni_.id_of(w);
		return id >= 0 && piv2row_[id] >= 0;
	}

	NcPoly normal_form(const NcPoly& x) const {
		if (!x.is_scalar() && x.alphabet() != pres_.alphabet())
			throw UsageError("normal_form: wrong alphabet for " + pres_.name());
		if (x.degree(pres_.scheme()) > D_)
			throw UsageError("normal_form: degree exceeds the build bound");
		Work w;
		w.init(uni_.words.size());
		detail::LaurentZ den = load_poly(w, x);
		reduce(w, [&](int m) { return row_at(m); }, true, true);
		NcPoly out(pres_.alphabet());
		detail::LaurentZ dtot = detail::lz_mul(den, w.mult_den);
		for (int id : w.out) {
			const detail::LaurentZ& v = w.val[id];
			detail::LaurentZ num = detail::lz_mul(v, w.mult_num);
			RatFunc c = RatFunc::make(num.lo - dtot.lo, Rat(1), num.p, dtot.p);
			out += NcPoly::word(pres_.alphabet(), uni_.words[id], c);
		}
		return out;
	}

	/* Incremental rank of a span over the quotient.  insert() reports whether
	 * the element enlarged the span so far, which lets spanning certificates
	 * stop feeding candidates once a target rank is reached. */
	class RankAccumulator;

	/* rank of the span of the normal forms of xs */
	size_t rank_of(const std::vector<NcPoly>& xs) const;

private:
	using LZ = detail::LaurentZ;

	struct Row {
		std::vector<std::pair<int, LZ>> t;  // descending ids; t[0] is the pivot
		int prod_done = 0;                  // letter degrees already saturated
	};

	struct Work {
		std::vector<LZ> val;
		std::vector<uint8_t> live;  // id was touched for this candidate
		std::vector<uint8_t> inheap;
		std::priority_queue<int> heap;
		std::vector<int> active;  // touched ids, any order
		std::vector<int> out;     // irreducible ids, descending
		LZ mult_num{1}, mult_den{1};
		long steps = 0;

		void init(size_t n) {
			val.assign(n, LZ{});
			live.assign(n, 0);
			inheap.assign(n, 0);
			reset();
		}
		void reset() {
			for (int id : active) {
				val[id] = LZ{};
				live[id] = 0;
				inheap[id] = 0;
			}
			active.clear();
			out.clear();
			heap = {};
			mult_num = LZ{1};
			mult_den = LZ{1};
		}
		void touch(int id) {
			if (!live[id]) {
				live[id] = 1;
				active.push_back(id);
			}
			if (!inheap[id]) {
				inheap[id] = 1;
				heap.push(id);
			}
		}
	};

	TruncatedQuotient(const Presentation& p, int D, int H)
	    : pres_(p), D_(D), H_(H), uni_(p.alphabet(), p.scheme(), D + H) {}

	const Row* row_at(int m) const {
		int r = piv2row_[m];
		return r < 0 ? nullptr : &rows_[r];
	}

	/* clear denominators of x and load it into the workspace; returns the
	 * common denominator (as a Laurent unit times polynomial) */
	LZ load_poly(Work& w, const NcPoly& x) const {
		detail::ZPoly dpoly(1L);
		Int dint = 1;
		for (const auto& [word, c] : x.terms()) {
			const detail::ZPoly& dp = c.den_poly();
			detail::ZPoly g = detail::zp_gcd(dpoly, dp);
			dpoly = detail::zp_mul(detail::zp_divexact(dp, g), dpoly);
			Int r = c.scale().get_den();
			mpz_lcm(dint.get_mpz_t(), dint.get_mpz_t(), r.get_mpz_t());
		}
		for (const auto& [word, c] : x.terms()) {
			int id = uni_.id_of(word);
			assert(id >= 0);
			detail::ZPoly n = detail::zp_mul(c.num_poly(), detail::zp_divexact(dpoly, c.den_poly()));
			Int m = c.scale().get_num() * (dint / c.scale().get_den());
			for (auto& x2 : n.c) x2 *= m;
			w.val[id] = detail::lz_make(c.shift(), std::move(n));
			if (!w.val[id].is_zero()) w.touch(id);
		}
		detail::ZPoly d = dpoly;
		for (auto& x2 : d.c) x2 *= dint;
		return detail::lz_make(0, std::move(d));
	}

	/* Max-heap elimination of the workspace against the echelon.  With full
	 * set, runs to the complete normal form (tails supported on basis words
	 * only); otherwise stops reducing once the pivot is settled and keeps the
	 * rest of the tail raw, which keeps stored rows short during the build.
	 * Pops come out strictly descending: eliminations only ever touch ids
	 * below the current top, so out stays sorted and settled entries are
	 * never revisited, only rescaled through the active list. */
	template <class Lookup>
	void reduce(Work& w, Lookup&& rowAt, bool track, bool full) const {
		while (!w.heap.empty()) {
			int m = w.heap.top();
			w.heap.pop();
			w.inheap[m] = 0;
			if (w.val[m].is_zero()) continue;
			if (!full && !w.out.empty()) {
				w.out.push_back(m);
				continue;
			}
			const Row* r = rowAt(m);
			if (!r) {
				w.out.push_back(m);
				continue;
			}
			LZ c = std::move(w.val[m]);
			w.val[m] = LZ{};
			const LZ& pc = r->t[0].second;
			detail::ZPoly g = detail::lz_gcd_poly(c, pc);
			LZ a = detail::lz_divexact(pc, g);
			LZ b = detail::lz_divexact(c, g);
			if (a.is_unit()) {
				// fold a^{-1} into b instead of scaling the whole row
				b.lo -= a.lo;
				if (a.p.c[0] < 0) detail::zp_negate(b.p);
			} else {
				for (int id : w.active)
					if (!w.val[id].is_zero()) w.val[id] = detail::lz_mul(w.val[id], a);
				if (track) w.mult_den = detail::lz_mul(w.mult_den, a);
			}
			for (size_t i = 1; i < r->t.size(); ++i) {
				int id2 = r->t[i].first;
				detail::lz_submul(w.val[id2], b, r->t[i].second);
				if (!w.val[id2].is_zero()) w.touch(id2);
			}
			if (++w.steps % 64 == 0) strip_scratch(w, track);
		}
	}

	/* divide the whole scratch by its integer content */
	static void strip_scratch(Work& w, bool track) {
		Int g = 0;
		for (int id : w.active) {
			if (w.val[id].is_zero()) continue;
			Int c = detail::zp_int_content(w.val[id].p);
			mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
			if (g == 1) return;
		}
		if (g <= 1) return;
		for (int id : w.active)
			if (!w.val[id].is_zero()) detail::zp_divexact_int(w.val[id].p, g);
		if (track) w.mult_num = detail::lz_mul(w.mult_num, detail::lz_make(0, detail::ZPoly(g)));
	}

	/* move the irreducible part of the workspace out as a content-free row */
	Row collect_row(Work& w) const {
		Row r;
		r.t.reserve(w.out.size());
		for (int id : w.out) {
			if (w.val[id].is_zero()) continue;
			r.t.emplace_back(id, std::move(w.val[id]));
			w.val[id] = LZ{};
		}
		// strip q powers, integer content, then polynomial content
		int lo = r.t[0].second.lo;
		Int ic = 0;
		for (auto& [id, v] : r.t) {
			lo = std::min(lo, v.lo);
			Int c = detail::zp_int_content(v.p);
			mpz_gcd(ic.get_mpz_t(), ic.get_mpz_t(), c.get_mpz_t());
		}
		detail::ZPoly pc;
		bool first = true;
		for (auto& [id, v] : r.t) {
			v.lo -= lo;
			if (ic > 1) detail::zp_divexact_int(v.p, ic);
			if (first || pc.deg() > 0) {
				pc = first ? detail::zp_primitive(v.p) : detail::zp_gcd(pc, v.p);
				first = false;
			}
		}
		if (pc.deg() > 0)
			for (auto& [id, v] : r.t) v = detail::lz_divexact(v, pc);
		return r;
	}

	void run_build() {
		auto t0 = std::chrono::steady_clock::now();
		const int B = D_ + H_;
		piv2row_.assign(uni_.words.size(), -1);

		std::vector<std::vector<NcPoly>> rels_by_deg(B + 1);
		for (auto& rel : pres_.instantiate(B)) {
			int d = pres_.relation_degree(rel);
			rels_by_deg[d].push_back(std::move(rel));
		}

		Work w;
		w.init(uni_.words.size());
		auto insert_candidate = [&]() {
			++stats_.candidates;
			reduce(w, [&](int m) { return row_at(m); }, false, false);
			if (!w.out.empty()) {
				Row r = collect_row(w);
				piv2row_[r.t[0].first] = int(rows_.size());
				rows_.push_back(std::move(r));
				++stats_.inserted;
			}
			w.reset();
		};

		for (int e = 0; e <= B; ++e) {
			for (const auto& rel : rels_by_deg[e]) {
				load_poly(w, rel);
				insert_candidate();
			}
			// saturate products until this level is stable; rows born with a
			// pivot below e (inhomogeneous collapse) catch up immediately
			for (bool moved = true; moved;) {
				moved = false;
				for (size_t i = 0; i < rows_.size(); ++i) {
					int dp = uni_.deg[rows_[i].t[0].first];
					while (rows_[i].prod_done < e - dp) {
						int dg = ++rows_[i].prod_done;
						for (size_t j = 0; j < uni_.letters.size(); ++j) {
							if (uni_.letter_deg[j] != dg) continue;
							for (int side = 0; side < 2; ++side) {
								const auto& tab = side ? uni_.rmul[j] : uni_.lmul[j];
								// monotone letter products keep ids descending
								for (const auto& [id, c] : rows_[i].t) {
									assert(tab[id] >= 0);
									w.val[tab[id]] = c;
									w.touch(tab[id]);
								}
								insert_candidate();
							}
						}
						moved = true;
					}
				}
			}
		}

		finalize(w);
		stats_.elim_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
		                     std::chrono::steady_clock::now() - t0)
		                     .count();
	}

	/* keep rows with pivot degree <= D, back-substitute so tails are
	 * supported on basis monomials, rebuild the pivot index */
	void finalize(Work& w) {
		std::vector<Row> kept;
		for (auto& r : rows_)
			if (uni_.deg[r.t[0].first] <= D_) kept.push_back(std::move(r));
		std::sort(kept.begin(), kept.end(),
		          [](const Row& a, const Row& b) { return a.t[0].first < b.t[0].first; });
		rows_.clear();
		piv2row_.assign(uni_.words.size(), -1);
		for (auto& r : kept) {
			for (const auto& [id, c] : r.t) {
				w.val[id] = c;
				w.touch(id);
			}
			reduce(w, [&](int m) { return row_at(m); }, false, true);
			Row nr = collect_row(w);
			w.reset();
			piv2row_[nr.t[0].first] = int(rows_.size());
			rows_.push_back(std::move(nr));
		}
		stats_.retained = long(rows_.size());

		std::vector<long> piv_cum(D_ + 1, 0);
		for (const auto& r : rows_) ++piv_cum[uni_.deg[r.t[0].first]];
		dims_.assign(D_ + 1, 0);
		long run = 0;
		for (int d = 0; d <= D_; ++d) {
			run += piv_cum[d];
			dims_[d] = uni_.cum[d] - run;
		}
	}

	Presentation pres_;
	int D_, H_;
	detail::Universe uni_;
	std::vector<Row> rows_;
	std::vector<int> piv2row_;
	std::vector<long> dims_;
	Stats stats_;
};

class TruncatedQuotient::RankAccumulator {
public:
	explicit RankAccumulator(const TruncatedQuotient& tq) : tq_(tq) {
		w_.init(tq.uni_.words.size());
	}

	/* returns true when x is independent of everything inserted before */
	bool insert(const NcPoly& x) {
		if (!x.is_scalar() && x.alphabet() != tq_.pres_.alphabet())
			throw UsageError("rank_of: wrong alphabet for " + tq_.pres_.name());
		if (x.degree(tq_.pres_.scheme()) > tq_.D_)
			throw UsageError("rank_of: degree exceeds the build bound");
		auto lookup = [&](int m) -> const Row* {
			if (const Row* r = tq_.row_at(m)) return r;
			auto it = extra_.find(m);
			return it == extra_.end() ? nullptr : &it->second;
		};
		tq_.load_poly(w_, x);
		tq_.reduce(w_, lookup, false, false);
		bool grew = !w_.out.empty();
		if (grew) {
			Row r = tq_.collect_row(w_);
			extra_.emplace(r.t[0].first, std::move(r));
		}
		w_.reset();
		return grew;
	}

	size_t rank() const { return extra_.size(); }

private:
	const TruncatedQuotient& tq_;
	Work w_;
	std::unordered_map<int, Row> extra_;
};

inline size_t TruncatedQuotient::rank_of(const std::vector<NcPoly>& xs) const {
	RankAccumulator acc(*this);
	for (const auto& x : xs) acc.insert(x);
	return acc.rank();
}

/* Retry with more headroom until the computed dimensions match the expected
 * series (truncation artifacts only ever inflate dimensions).  A computed
 * value below the expected one is a genuine counterexample, not a truncation
 * artifact, and reported as such. */
inline TruncatedQuotient build_certified(const Presentation& p, int D,
                                         const std::vector<long>& expected, int* H_used = nullptr,
                                         int H0 = 0, int Hmax = 6) {
	if (int(expected.size()) < D + 1) throw UsageError("expected dims must cover 0..D");
	std::string progress;
	for (int H = H0; H <= Hmax; H += 2) {
		TruncatedQuotient tq = TruncatedQuotient::build(p, D, H);
		bool high = false;
		for (int d = 0; d <= D; ++d) {
			if (tq.dims()[d] < expected[d])
				throw ArithError(p.name() + ": dimension " + std::to_string(tq.dims()[d]) +
				                 " at degree " + std::to_string(d) + " undercuts the expected " +
				                 std::to_string(expected[d]));
			if (tq.dims()[d] > expected[d]) high = true;
		}
		if (!high) {
			if (H_used) *H_used = H;
			return tq;
		}
		progress = " (got";
		for (int d = 0; d <= D; ++d) progress += (d ? "," : " ") + std::to_string(tq.dims()[d]);
		progress += ")";
	}
	throw ResourceError(p.name() + ": dimensions still exceed the expected series at headroom " +
	                    std::to_string(Hmax) + progress);
}

}  // namespace qons
