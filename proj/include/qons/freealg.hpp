#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "base.hpp"

namespace qons {

/* Generator families, in the fixed order used by the canonical monomial
 * order and by sortedness notions: Gcal < Wminus < Wplus < Gtil. */
enum class Family : uint8_t { Gcal = 0, Wminus = 1, Wplus = 2, Gtil = 3, Z = 4 };

struct Generator {
	Family fam;
	int idx;

	uint32_t code() const { return (uint32_t(fam) << 28) | uint32_t(idx); }
	friend bool operator==(const Generator& a, const Generator& b) {
		return a.fam == b.fam && a.idx == b.idx;
	}
	friend bool operator<(const Generator& a, const Generator& b) { return a.code() < b.code(); }

	std::string render() const {
		switch (fam) {
			case Family::Gcal: return "G[" + std::to_string(idx) + "]";
			case Family::Wminus: return "W[" + std::to_string(-idx) + "]";
			case Family::Wplus: return "W[" + std::to_string(idx + 1) + "]";
			case Family::Gtil: return "Gt[" + std::to_string(idx) + "]";
			case Family::Z: return "z[" + std::to_string(idx) + "]";
		}
		return "?";
	}
};

/* W(n) covers both W families: n <= 0 is the Wminus chain, n >= 1 Wplus. */
inline Generator W(int n) {
	return n <= 0 ? Generator{Family::Wminus, -n} : Generator{Family::Wplus, n - 1};
}
inline Generator G(int k) {
	if (k < 1) throw UsageError("G[k] needs k >= 1");
	return Generator{Family::Gcal, k};
}
inline Generator Gt(int k) {
	if (k < 1) throw UsageError("Gt[k] needs k >= 1");
	return Generator{Family::Gtil, k};
}
inline Generator Zgen(int n) {
	if (n < 1) throw UsageError("z[n] needs n >= 1");
	return Generator{Family::Z, n};
}

enum class Alphabet { ALT, ESS, ESS_SIGMA, OQ, Z };

inline std::string alphabet_name(Alphabet a) {
	switch (a) {
		case Alphabet::ALT: return "ALT";
		case Alphabet::ESS: return "ESS";
		case Alphabet::ESS_SIGMA: return "ESS_SIGMA";
		case Alphabet::OQ: return "OQ";
		case Alphabet::Z: return "Z";
	}
	return "?";
}

inline bool valid_in(Alphabet a, const Generator& g) {
	switch (a) {
		case Alphabet::ALT:
			switch (g.fam) {
				case Family::Gcal:
				case Family::Gtil: return g.idx >= 1;
				case Family::Wminus:
				case Family::Wplus: return g.idx >= 0;
				default: return false;
			}
		case Alphabet::ESS:
			if (g.fam == Family::Gtil) return g.idx >= 1;
			return (g.fam == Family::Wminus || g.fam == Family::Wplus) && g.idx == 0;
		case Alphabet::ESS_SIGMA:
			if (g.fam == Family::Gcal) return g.idx >= 1;
			return (g.fam == Family::Wminus || g.fam == Family::Wplus) && g.idx == 0;
		case Alphabet::OQ:
			return (g.fam == Family::Wminus || g.fam == Family::Wplus) && g.idx == 0;
		case Alphabet::Z: return g.fam == Family::Z && g.idx >= 1;
	}
	return false;
}

enum class DegreeScheme { ALT_DEG, ESS_DEG, LEN_DEG, Z_DEG };

inline std::string scheme_name(DegreeScheme s) {
	switch (s) {
		case DegreeScheme::ALT_DEG: return "ALT_DEG";
		case DegreeScheme::ESS_DEG: return "ESS_DEG";
		case DegreeScheme::LEN_DEG: return "LEN_DEG";
		case DegreeScheme::Z_DEG: return "Z_DEG";
	}
	return "?";
}

inline int degree_of(DegreeScheme s, const Generator& g) {
	switch (s) {
		case DegreeScheme::LEN_DEG: return 1;
		case DegreeScheme::Z_DEG:
			if (g.fam != Family::Z) throw UsageError("Z_DEG outside the z alphabet");
			return g.idx;
		case DegreeScheme::ALT_DEG:
			switch (g.fam) {
				case Family::Gcal:
				case Family::Gtil: return 2 * g.idx;
				case Family::Wminus:
				case Family::Wplus: return 2 * g.idx + 1;
				default: throw UsageError("ALT_DEG outside the alternating alphabet");
			}
		case DegreeScheme::ESS_DEG:
			switch (g.fam) {
				case Family::Gcal:
				case Family::Gtil: return 2 * g.idx;
				case Family::Wminus:
				case Family::Wplus:
					if (g.idx != 0) throw UsageError("ESS_DEG is for W0, W1 and the G chains");
					return 1;
				default: throw UsageError("ESS_DEG outside the essential alphabet");
			}
	}
	throw UsageError("bad scheme");
}

using Word = std::vector<Generator>;

inline int degree_of(DegreeScheme s, const Word& w) {
	int d = 0;
	for (const auto& g : w) d += degree_of(s, g);
	return d;
}

/* storage order for polynomials: length, then lex on generator codes */
struct WordLess {
	bool operator()(const Word& a, const Word& b) const {
		if (a.size() != b.size()) return a.size() < b.size();
		for (size_t i = 0; i < a.size(); ++i)
			if (!(a[i] == b[i])) return a[i] < b[i];
		return false;
	}
};

/* The canonical monomial order: degree (under the given scheme), then
 * length, then lex on codes.  Total, degree compatible, and a well order
 * on each truncation. */
inline bool canonical_less(DegreeScheme s, const Word& a, const Word& b) {
	int da = degree_of(s, a), db = degree_of(s, b);
	if (da != db) return da < db;
	return WordLess{}(a, b);
}

/* all alphabet letters of scheme degree <= bound, ascending code order */
inline std::vector<Generator> letters_up_to(Alphabet a, DegreeScheme s, int bound) {
	std::vector<Generator> out;
	auto take = [&](Family f, int lo) {
		for (int k = lo;; ++k) {
			Generator g{f, k};
			if (!valid_in(a, g)) break;
			if (degree_of(s, g) > bound) break;
			out.push_back(g);
		}
	};
	switch (a) {
		case Alphabet::ALT:
			take(Family::Gcal, 1);
			take(Family::Wminus, 0);
			take(Family::Wplus, 0);
			take(Family::Gtil, 1);
			break;
		case Alphabet::ESS:
			take(Family::Wminus, 0);
			take(Family::Wplus, 0);
			take(Family::Gtil, 1);
			break;
		case Alphabet::ESS_SIGMA:
			take(Family::Gcal, 1);
			take(Family::Wminus, 0);
			take(Family::Wplus, 0);
			break;
		case Alphabet::OQ:
			take(Family::Wminus, 0);
			take(Family::Wplus, 0);
			break;
		case Alphabet::Z: take(Family::Z, 1); break;
	}
	std::sort(out.begin(), out.end());
	return out;
}

/* Every word of degree <= bound, listed in ascending canonical order.
 * Within a degree, each word has a unique last-letter decomposition, so the
 * level sets are generated without duplicates. */
inline std::vector<Word> enumerate_words(Alphabet a, DegreeScheme s, int bound) {
	if (bound < 0) return {};
	std::vector<Generator> gens = letters_up_to(a, s, bound);
	std::vector<std::vector<Word>> by_deg(bound + 1);
	by_deg[0].push_back(Word{});
	for (int d = 1; d <= bound; ++d) {
		for (const auto& g : gens) {
			int dg = degree_of(s, g);
			if (dg > d) continue;
			for (const auto& w : by_deg[d - dg]) {
				Word nw = w;
				nw.push_back(g);
				by_deg[d].push_back(std::move(nw));
			}
		}
		std::sort(by_deg[d].begin(), by_deg[d].end(), WordLess{});
	}
	std::vector<Word> out;
	for (auto& lvl : by_deg)
		for (auto& w : lvl) out.push_back(std::move(w));
	return out;
}

inline std::string render_word(const Word& w) {
	if (w.empty()) return "1";
	std::string out;
	size_t i = 0;
	while (i < w.size()) {
		size_t j = i;
		while (j < w.size() && w[j] == w[i]) ++j;
		if (!out.empty()) out += "*";
		out += w[i].render();
		if (j - i > 1) out += "^" + std::to_string(j - i);
		i = j;
	}
	return out;
}

}  // namespace qons
