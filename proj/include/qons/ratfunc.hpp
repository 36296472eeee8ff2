#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "laurent.hpp"
#include "zpoly.hpp"

namespace qons {

/* Element of Q(q), kept in the canonical shape
 *
 *     q^shift * scale * num(q) / den(q)
 *
 * where num and den are primitive integer polynomials with positive leading
 * coefficients and nonzero constant terms, gcd(num, den) = 1, and scale is a
 * nonzero rational (zero only for the zero function).  Two equal values always
 * have identical representations.  Equivalently: den made monic over Q has a
 * nonzero constant term, and num absorbs no powers of q; that normal form is
 * what render() prints. */
class RatFunc {
public:
	RatFunc() : scale_(0), num_(1L), den_(1L) {}
	RatFunc(long v) : shift_(0), scale_(v), num_(1L), den_(1L) { reduce_trivial(); }
	RatFunc(const Rat& v) : shift_(0), scale_(v), num_(1L), den_(1L) { reduce_trivial(); }

	static RatFunc q_power(int e) {
		RatFunc r(1);
		r.shift_ = e;
		return r;
	}

	static RatFunc from_laurent(const Laurent& l) {
		if (l.is_zero()) return RatFunc();
		Int den_lcm = 1;
		for (int e = l.lo_exp(); e <= l.hi_exp(); ++e) {
			Rat c = l.coeff(e);
			if (c == 0) continue;
			Int d = c.get_den();
			mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
		}
		detail::ZPoly n;
		n.c.assign(l.hi_exp() - l.lo_exp() + 1, Int(0));
		for (int e = l.lo_exp(); e <= l.hi_exp(); ++e) {
			Rat c = l.coeff(e) * Rat(den_lcm);
			assert(c.get_den() == 1);
			n.c[e - l.lo_exp()] = c.get_num();
		}
		return make(l.lo_exp(), Rat(1, den_lcm), std::move(n), detail::ZPoly(1L));
	}

	bool is_zero() const { return scale_ == 0; }
	bool is_laurent() const { return den_.is_one(); }
	bool is_one() const { return shift_ == 0 && scale_ == 1 && num_.is_one() && den_.is_one(); }

	Laurent to_laurent() const {
		if (!is_laurent()) throw ArithError("RatFunc: proper denominator, not a Laurent polynomial");
		Laurent r;
		for (size_t i = 0; i < num_.c.size(); ++i)
			r += Laurent::monomial(Rat(num_.c[i]) * scale_, shift_ + int(i));
		return r;
	}

	/* canonical fields: q-shift, numerator and monic denominator over Q */
	int shift() const { return shift_; }
	std::vector<Rat> num_rational() const {
		std::vector<Rat> v;
		if (is_zero()) return v;
		Rat f = scale_ / Rat(den_.c.back());
		for (const auto& x : num_.c) v.push_back(Rat(x) * f);
		return v;
	}
	std::vector<Rat> den_monic() const {
		std::vector<Rat> v;
		for (const auto& x : den_.c) v.push_back(Rat(x) / Rat(den_.c.back()));
		return v;
	}

	friend bool operator==(const RatFunc& a, const RatFunc& b) {
		return a.scale_ == b.scale_ && a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
	}
	friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

	RatFunc operator-() const {
		RatFunc r = *this;
		r.scale_ = -r.scale_;
		return r;
	}

	friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
		if (a.is_zero() || b.is_zero()) return RatFunc();
		// cross-reduce before multiplying to keep degrees down
		detail::ZPoly g1 = detail::zp_gcd(a.num_, b.den_);
		detail::ZPoly g2 = detail::zp_gcd(b.num_, a.den_);
		detail::ZPoly n = detail::zp_mul(detail::zp_divexact(a.num_, g1),
		                                 detail::zp_divexact(b.num_, g2));
		detail::ZPoly d = detail::zp_mul(detail::zp_divexact(a.den_, g2),
		                                 detail::zp_divexact(b.den_, g1));
		return make(a.shift_ + b.shift_, a.scale_ * b.scale_, std::move(n), std::move(d));
	}

	friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
		if (b.is_zero()) throw ArithError("division by zero");
		RatFunc binv;
		binv.shift_ = -b.shift_;
		binv.scale_ = 1 / b.scale_;
		binv.num_ = b.den_;
		binv.den_ = b.num_;
		return a * binv;
	}

	friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
		if (a.is_zero()) return b;
		if (b.is_zero()) return a;
		detail::ZPoly g = detail::zp_gcd(a.den_, b.den_);
		detail::ZPoly da = detail::zp_divexact(a.den_, g);  // cofactors
		detail::ZPoly db = detail::zp_divexact(b.den_, g);
		// a.scale*na*db and b.scale*nb*da over den = a.den*db, with scales p/r
		Int ra = a.scale_.get_den(), rb = b.scale_.get_den(), L;
		mpz_lcm(L.get_mpz_t(), ra.get_mpz_t(), rb.get_mpz_t());
		Int ma = a.scale_.get_num() * (L / ra), mb = b.scale_.get_num() * (L / rb);
		detail::ZPoly ta = detail::zp_mul(a.num_, db);
		detail::ZPoly tb = detail::zp_mul(b.num_, da);
		for (auto& x : ta.c) x *= ma;
		for (auto& x : tb.c) x *= mb;
		int s = std::min(a.shift_, b.shift_);
		detail::ZPoly n = zp_shift_add(ta, a.shift_ - s, tb, b.shift_ - s);
		return make(s, Rat(1, L), std::move(n), detail::zp_mul(a.den_, db));
	}

	friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

	RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
	RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
	RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
	RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

	/* the bar involution q -> q^{-1}: reverse both polynomials */
	RatFunc invert_q() const {
		if (is_zero()) return *this;
		detail::ZPoly n = num_, d = den_;
		std::reverse(n.c.begin(), n.c.end());
		std::reverse(d.c.begin(), d.c.end());
		return make(-shift_ - num_.deg() + den_.deg(), scale_, std::move(n), std::move(d));
	}

	/* parseable canonical text, e.g. "q^-3*(q^2 + 3)/(q^4 + 1)" */
	std::string render() const {
		if (is_zero()) return "0";
		std::ostringstream out;
		Rat f = scale_ / Rat(den_.c.back());
		Laurent top;
		for (size_t i = 0; i < num_.c.size(); ++i)
			top += Laurent::monomial(Rat(num_.c[i]) * f, shift_ + int(i));
		std::string ts = top.render();
		// a sum in front of "/" must be parenthesized to reparse correctly
		bool par_top = den_.c.size() > 1 && ts.find(' ') != std::string::npos;
		if (par_top) out << "(" << ts << ")";
		else out << ts;
		if (den_.c.size() > 1) {
			Laurent bot;
			for (size_t i = 0; i < den_.c.size(); ++i)
				bot += Laurent::monomial(Rat(den_.c[i]) / Rat(den_.c.back()), int(i));
			std::string bs = bot.render();
			out << "/";
			if (bs.find(' ') != std::string::npos || bs.find('*') != std::string::npos)
				out << "(" << bs << ")";
			else
				out << bs;
		}
		return out.str();
	}

	/* kernel boundary: numerator over a given polynomial denominator */
	const detail::ZPoly& num_poly() const { return num_; }
	const detail::ZPoly& den_poly() const { return den_; }
	const Rat& scale() const { return scale_; }

	static RatFunc make(int shift, Rat scale, detail::ZPoly num, detail::ZPoly den) {
		RatFunc r;
		if (den.is_zero()) throw ArithError("division by zero");
		if (scale == 0 || num.is_zero()) return r;
		// fold powers of q out of num and den into the shift
		size_t zn = 0;
		while (num.c[zn] == 0) ++zn;
		size_t zd = 0;
		while (den.c[zd] == 0) ++zd;
		if (zn) num.c.erase(num.c.begin(), num.c.begin() + zn);
		if (zd) den.c.erase(den.c.begin(), den.c.begin() + zd);
		shift += int(zn) - int(zd);
		detail::ZPoly g = detail::zp_gcd(num, den);
		if (!g.is_one()) {
			num = detail::zp_divexact(num, g);
			den = detail::zp_divexact(den, g);
		}
		Int cn = detail::zp_int_content(num), cd = detail::zp_int_content(den);
		detail::zp_divexact_int(num, cn);
		detail::zp_divexact_int(den, cd);
		if (num.c.back() < 0) {
			detail::zp_negate(num);
			mpz_neg(cn.get_mpz_t(), cn.get_mpz_t());
		}
		if (den.c.back() < 0) {
			detail::zp_negate(den);
			mpz_neg(cd.get_mpz_t(), cd.get_mpz_t());
		}
		r.shift_ = shift;
		r.scale_ = scale * Rat(cn) / Rat(cd);
		r.num_ = std::move(num);
		r.den_ = std::move(den);
		return r;
	}

private:
	void reduce_trivial() {
		if (scale_ == 0) {
			shift_ = 0;
			num_ = detail::ZPoly(1L);
			den_ = detail::ZPoly(1L);
		}
	}

	static detail::ZPoly zp_shift_add(const detail::ZPoly& a, int sa, const detail::ZPoly& b,
	                                  int sb) {
		detail::ZPoly r;
		r.c.assign(std::max(a.c.size() + sa, b.c.size() + sb), Int(0));
		for (size_t i = 0; i < a.c.size(); ++i) r.c[i + sa] += a.c[i];
		for (size_t i = 0; i < b.c.size(); ++i) r.c[i + sb] += b.c[i];
		r.trim();
		return r;
	}

	int shift_ = 0;
	Rat scale_;
	detail::ZPoly num_;
	detail::ZPoly den_;
};

inline RatFunc rf(const Laurent& l) { return RatFunc::from_laurent(l); }

}  // namespace qons
