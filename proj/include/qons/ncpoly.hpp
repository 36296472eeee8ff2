#pragma once

#include <functional>
#include <map>
#include <sstream>

#include "freealg.hpp"
#include "ratfunc.hpp"

namespace qons {

/* Element of the free algebra on one of the alphabets, with coefficients in
 * Q(q).  Scalars (multiples of the empty word) are compatible with every
 * alphabet, so constants can be combined with anything. */
class NcPoly {
public:
	using TermMap = std::map<Word, RatFunc, WordLess>;

	NcPoly() : alph_(Alphabet::ALT) {}
	explicit NcPoly(Alphabet a) : alph_(a) {}

	static NcPoly scalar(const RatFunc& c, Alphabet a = Alphabet::ALT) {
		NcPoly p(a);
		if (!c.is_zero()) p.terms_[Word{}] = c;
		return p;
	}
	static NcPoly gen(Alphabet a, const Generator& g) {
		if (!valid_in(a, g))
			throw UsageError(g.render() + " is not a generator of the " + alphabet_name(a) +
			                 " alphabet");
		NcPoly p(a);
		p.terms_[Word{g}] = RatFunc(1);
		return p;
	}
	static NcPoly word(Alphabet a, const Word& w, const RatFunc& c = RatFunc(1)) {
		for (const auto& g : w)
			if (!valid_in(a, g))
				throw UsageError(g.render() + " is not a generator of the " + alphabet_name(a) +
				                 " alphabet");
		NcPoly p(a);
		if (!c.is_zero()) p.terms_[w] = c;
		return p;
	}

	Alphabet alphabet() const { return alph_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_scalar() const {
		return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
	}
	RatFunc scalar_part() const {
		auto it = terms_.find(Word{});
		return it == terms_.end() ? RatFunc(0) : it->second;
	}
	size_t term_count() const { return terms_.size(); }
	const TermMap& terms() const { return terms_; }

	RatFunc coeff(const Word& w) const {
		auto it = terms_.find(w);
		return it == terms_.end() ? RatFunc(0) : it->second;
	}

	/* degree of the zero polynomial is -1 by convention */
	int degree(DegreeScheme s) const {
		int d = -1;
		for (const auto& [w, c] : terms_) d = std::max(d, degree_of(s, w));
		return d;
	}

	friend bool operator==(const NcPoly& a, const NcPoly& b) {
		if (a.is_scalar() && b.is_scalar()) return a.scalar_part() == b.scalar_part();
		return a.alph_ == b.alph_ && a.terms_ == b.terms_;
	}
	friend bool operator!=(const NcPoly& a, const NcPoly& b) { return !(a == b); }

	NcPoly operator-() const {
		NcPoly r = *this;
		for (auto& [w, c] : r.terms_) c = -c;
		return r;
	}

	NcPoly& operator+=(const NcPoly& o) {
		Alphabet a = join_alphabets(*this, o);
		alph_ = a;
		for (const auto& [w, c] : o.terms_) {
			auto [it, fresh] = terms_.try_emplace(w, c);
			if (!fresh) {
				it->second += c;
				if (it->second.is_zero()) terms_.erase(it);
			}
		}
		return *this;
	}
	NcPoly& operator-=(const NcPoly& o) { return *this += -o; }
	friend NcPoly operator+(NcPoly a, const NcPoly& b) { return a += b; }
	friend NcPoly operator-(NcPoly a, const NcPoly& b) { return a -= b; }

	friend NcPoly operator*(const NcPoly& a, const NcPoly& b) {
		NcPoly r(join_alphabets(a, b));
		for (const auto& [wa, ca] : a.terms_)
			for (const auto& [wb, cb] : b.terms_) {
				Word w = wa;
				w.insert(w.end(), wb.begin(), wb.end());
				RatFunc c = ca * cb;
				auto [it, fresh] = r.terms_.try_emplace(std::move(w), c);
				if (!fresh) {
					it->second += c;
					if (it->second.is_zero()) r.terms_.erase(it);
				}
			}
		return r;
	}
	NcPoly& operator*=(const NcPoly& o) { return *this = *this * o; }

	friend NcPoly operator*(const RatFunc& c, const NcPoly& p) {
		NcPoly r(p.alph_);
		if (c.is_zero()) return r;
		r.terms_ = p.terms_;
		for (auto& [w, x] : r.terms_) x *= c;
		return r;
	}
	friend NcPoly operator*(const NcPoly& p, const RatFunc& c) { return c * p; }
	friend NcPoly operator/(const NcPoly& p, const RatFunc& c) {
		return RatFunc(1) / c * p;
	}

	NcPoly pow(unsigned n) const {
		NcPoly r = scalar(RatFunc(1), alph_), base = *this;
		while (n) {
			if (n & 1) r *= base;
			base *= base;
			n >>= 1;
		}
		return r;
	}

	/* terms ascending by (length, lex); coefficients in canonical text */
	std::string render() const {
		if (terms_.empty()) return "0";
		std::ostringstream out;
		bool first = true;
		for (const auto& [w, c] : terms_) {
			RatFunc a = c;
			std::string cs = a.render();
			bool neg = cs.size() && cs[0] == '-';
			if (neg && cs.find(' ') == std::string::npos) {
				a = -a;
				cs = a.render();
			} else {
				neg = false;
			}
			out << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
			bool needs_paren = cs.find(' ') != std::string::npos;
			if (w.empty()) {
				out << cs;
			} else if (a.is_one()) {
				out << render_word(w);
			} else {
				if (needs_paren) out << "(" << cs << ")";
				else out << cs;
				out << "*" << render_word(w);
			}
			first = false;
		}
		return out.str();
	}

private:
	static Alphabet join_alphabets(const NcPoly& a, const NcPoly& b) {
		if (a.alph_ == b.alph_) return a.alph_;
		if (a.is_scalar()) return b.alph_;
		if (b.is_scalar()) return a.alph_;
		throw UsageError("alphabet mismatch: " + alphabet_name(a.alph_) + " vs " +
		                 alphabet_name(b.alph_));
	}

	Alphabet alph_;
	TermMap terms_;
};

inline NcPoly commutator(const NcPoly& a, const NcPoly& b) { return a * b - b * a; }

/* [a,b]_q = q ab - q^-1 ba; sign = -1 gives the q^-1 bracket */
inline NcPoly q_commutator(const NcPoly& a, const NcPoly& b, int sign = 1) {
	RatFunc qs = RatFunc::q_power(sign >= 0 ? 1 : -1);
	return qs * (a * b) - RatFunc(1) / qs * (b * a);
}

/* Algebra morphism or antimorphism, defined by images of generators.  The
 * image rule must cover every generator of the source alphabet. */
struct Morphism {
	std::string name;
	Alphabet src;
	Alphabet dst;
	bool anti = false;
	std::function<NcPoly(const Generator&)> image;
};

inline NcPoly apply_morphism(const Morphism& m, const NcPoly& x) {
	if (x.alphabet() != m.src && !x.is_scalar())
		throw UsageError("morphism " + m.name + " expects the " + alphabet_name(m.src) +
		                 " alphabet");
	NcPoly out(m.dst);
	for (const auto& [w, c] : x.terms()) {
		NcPoly prod = NcPoly::scalar(c, m.dst);
		if (m.anti) {
			for (auto it = w.rbegin(); it != w.rend(); ++it) prod *= m.image(*it);
		} else {
			for (const auto& g : w) prod *= m.image(g);
		}
		out += prod;
	}
	return out;
}

/* letterwise alphabet cast for polynomials whose words are valid in both */
inline NcPoly reinterpret_alphabet(const NcPoly& x, Alphabet target) {
	NcPoly out(target);
	for (const auto& [w, c] : x.terms()) out += NcPoly::word(target, w, c);
	return out;
}

}  // namespace qons
