#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "base.hpp"

namespace qons::detail {

/* Dense polynomial over Z, c[i] = coefficient of q^i, trimmed (c.back() != 0).
 * Zero is the empty vector.  This is the coefficient workhorse for the
 * fraction-free elimination kernel and for rational function normalization;
 * everything here is exact. */
struct ZPoly {
	std::vector<Int> c;

	ZPoly() = default;
	explicit ZPoly(long v) {
		if (v != 0) c.emplace_back(v);
	}
	explicit ZPoly(Int v) {
		if (v != 0) c.push_back(std::move(v));
	}

	bool is_zero() const { return c.empty(); }
	int deg() const { return int(c.size()) - 1; }  // deg(0) == -1
	bool is_one() const { return c.size() == 1 && c[0] == 1; }

	void trim() {
		while (!c.empty() && c.back() == 0) c.pop_back();
	}

	friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.c == b.c; }
};

inline ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
	ZPoly r;
	r.c.resize(std::max(a.c.size(), b.c.size()));
	for (size_t i = 0; i < r.c.size(); ++i) {
		if (i < a.c.size()) r.c[i] += a.c[i];
		if (i < b.c.size()) r.c[i] += b.c[i];
	}
	r.trim();
	return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
	ZPoly r;
	r.c.resize(std::max(a.c.size(), b.c.size()));
	for (size_t i = 0; i < r.c.size(); ++i) {
		if (i < a.c.size()) r.c[i] += a.c[i];
		if (i < b.c.size()) r.c[i] -= b.c[i];
	}
	r.trim();
	return r;
}

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
	ZPoly r;
	if (a.is_zero() || b.is_zero()) return r;
	r.c.assign(a.c.size() + b.c.size() - 1, Int(0));
	for (size_t i = 0; i < a.c.size(); ++i)
		for (size_t j = 0; j < b.c.size(); ++j)
			mpz_addmul(r.c[i + j].get_mpz_t(), a.c[i].get_mpz_t(), b.c[j].get_mpz_t());
	return r;  // leading product of nonzero leads is nonzero
}

inline void zp_negate(ZPoly& a) {
	for (auto& x : a.c) mpz_neg(x.get_mpz_t(), x.get_mpz_t());
}

inline Int zp_int_content(const ZPoly& a) {
	Int g = 0;
	for (const auto& x : a.c) {
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
		if (g == 1) break;
	}
	return g;  // 0 for the zero polynomial
}

inline void zp_divexact_int(ZPoly& a, const Int& d) {
	assert(d != 0);
	if (d == 1) return;
	for (auto& x : a.c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
}

/* quotient of exact division; throws if b does not divide a */
inline ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
	if (b.is_zero()) throw ArithError("polynomial division by zero");
	ZPoly rem = a, q;
	if (a.is_zero()) return q;
	if (a.deg() < b.deg()) throw ArithError("non-exact polynomial division");
	q.c.assign(a.deg() - b.deg() + 1, Int(0));
	for (int d = a.deg(); d >= b.deg();) {
		Int t;
		mpz_tdiv_qr(t.get_mpz_t(), q.c[0].get_mpz_t() /*scratch*/, rem.c[d].get_mpz_t(),
		            b.c.back().get_mpz_t());
		if (q.c[0] != 0) throw ArithError("non-exact polynomial division");
		int off = d - b.deg();
		q.c[off] = t;
		for (size_t i = 0; i < b.c.size(); ++i)
			mpz_submul(rem.c[off + i].get_mpz_t(), t.get_mpz_t(), b.c[i].get_mpz_t());
		rem.trim();
		d = rem.deg();
		if (d < b.deg()) break;
	}
	if (!rem.is_zero()) throw ArithError("non-exact polynomial division");
	return q;
}

/* pseudo-remainder: lc(b)^(deg a - deg b + 1) * a  mod  b */
inline ZPoly zp_prem(ZPoly a, const ZPoly& b) {
	assert(!b.is_zero());
	const Int& lb = b.c.back();
	while (!a.is_zero() && a.deg() >= b.deg()) {
		int off = a.deg() - b.deg();
		Int la = a.c.back();
		for (auto& x : a.c) x *= lb;
		for (size_t i = 0; i < b.c.size(); ++i)
			mpz_submul(a.c[off + i].get_mpz_t(), la.get_mpz_t(), b.c[i].get_mpz_t());
		a.trim();
	}
	return a;
}

inline ZPoly zp_primitive(ZPoly a) {
	Int ct = zp_int_content(a);
	if (ct > 1) zp_divexact_int(a, ct);
	if (!a.is_zero() && a.c.back() < 0) zp_negate(a);
	return a;
}

/* gcd over Z[q] via primitive PRS; result has positive leading coefficient */
inline ZPoly zp_gcd(ZPoly a, ZPoly b) {
	if (a.is_zero()) return zp_primitive(std::move(b));
	if (b.is_zero()) return zp_primitive(std::move(a));
	Int ca = zp_int_content(a), cb = zp_int_content(b);
	Int cg;
	mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
	zp_divexact_int(a, ca);
	zp_divexact_int(b, cb);
	if (a.deg() < b.deg()) std::swap(a, b);
	while (!b.is_zero()) {
		ZPoly r = zp_prem(a, b);
		a = std::move(b);
		b = zp_primitive(std::move(r));
	}
	if (a.c.back() < 0) zp_negate(a);
	for (auto& x : a.c) x *= cg;
	return a;
}

/* Integer Laurent polynomial: p * q^lo with p trimmed at both ends, so the
 * constant term of p is nonzero (any common q power lives in lo).  Zero has
 * empty p and lo == 0. */
struct LaurentZ {
	int lo = 0;
	ZPoly p;

	LaurentZ() = default;
	explicit LaurentZ(long v) : p(v) {}

	bool is_zero() const { return p.is_zero(); }
	bool is_one() const { return lo == 0 && p.is_one(); }
	/* plus or minus a power of q: the units of the Laurent ring */
	bool is_unit() const {
		return p.c.size() == 1 && (p.c[0] == 1 || p.c[0] == -1);
	}
	int hi_exp() const { return lo + p.deg(); }

	void normalize() {
		p.trim();
		size_t k = 0;
		while (k < p.c.size() && p.c[k] == 0) ++k;
		if (k == p.c.size()) {
			p.c.clear();
			lo = 0;
			return;
		}
		if (k) {
			p.c.erase(p.c.begin(), p.c.begin() + k);
			lo += int(k);
		}
	}

	friend bool operator==(const LaurentZ& a, const LaurentZ& b) {
		return a.lo == b.lo && a.p == b.p;
	}
};

inline LaurentZ lz_make(int lo, ZPoly p) {
	LaurentZ r;
	r.lo = lo;
	r.p = std::move(p);
	r.normalize();
	return r;
}

inline LaurentZ lz_mul(const LaurentZ& a, const LaurentZ& b) {
	LaurentZ r;
	if (a.is_zero() || b.is_zero()) return r;
	r.lo = a.lo + b.lo;
	r.p = zp_mul(a.p, b.p);
	return r;
}

inline LaurentZ lz_add(const LaurentZ& a, const LaurentZ& b) {
	if (a.is_zero()) return b;
	if (b.is_zero()) return a;
	int nlo = std::min(a.lo, b.lo);
	LaurentZ r;
	r.lo = nlo;
	r.p.c.assign(std::max(a.hi_exp(), b.hi_exp()) - nlo + 1, Int(0));
	for (size_t i = 0; i < a.p.c.size(); ++i) r.p.c[a.lo - nlo + i] += a.p.c[i];
	for (size_t i = 0; i < b.p.c.size(); ++i) r.p.c[b.lo - nlo + i] += b.p.c[i];
	r.normalize();
	return r;
}

inline LaurentZ lz_neg(LaurentZ a) {
	zp_negate(a.p);
	return a;
}

inline LaurentZ lz_sub(const LaurentZ& a, const LaurentZ& b) { return lz_add(a, lz_neg(b)); }

/* x -= a*b, in place */
inline void lz_submul(LaurentZ& x, const LaurentZ& a, const LaurentZ& b) {
	x = lz_sub(x, lz_mul(a, b));
}

/* gcd up to units: a primitive Z[q] polynomial with nonzero constant term */
inline ZPoly lz_gcd_poly(const LaurentZ& a, const LaurentZ& b) { return zp_gcd(a.p, b.p); }

/* exact division by a ZPoly divisor with nonzero constant term */
inline LaurentZ lz_divexact(const LaurentZ& a, const ZPoly& d) {
	if (a.is_zero()) return a;
	if (d.is_one()) return a;
	LaurentZ r;
	r.lo = a.lo;
	r.p = zp_divexact(a.p, d);
	r.normalize();
	return r;
}

}  // namespace qons::detail
