#pragma once

#include <algorithm>
#include <sstream>
#include <vector>

#include "base.hpp"

namespace qons {

/* Laurent polynomial in q with rational coefficients.
 *
 * Canonical form: dense coefficient block starting at exponent lo_, trimmed so
 * that the first and last stored coefficients are nonzero.  Zero is the empty
 * block.  Equality of values is equality of representations.
 */
class Laurent {
public:
	Laurent() = default;
	Laurent(const Rat& c) {
		if (c != 0) {
			lo_ = 0;
			c_.push_back(c);
		}
	}
	Laurent(long n) : Laurent(Rat(n)) {}

	static Laurent monomial(Rat c, int exp) {
		Laurent r;
		if (c != 0) {
			r.lo_ = exp;
			r.c_.push_back(std::move(c));
		}
		return r;
	}
	static Laurent q_power(int exp) { return monomial(Rat(1), exp); }

	bool is_zero() const { return c_.empty(); }
	int lo_exp() const { return lo_; }
	int hi_exp() const { return lo_ + int(c_.size()) - 1; }

	Rat coeff(int exp) const {
		if (c_.empty() || exp < lo_ || exp > hi_exp()) return Rat(0);
		return c_[exp - lo_];
	}

	/* true iff the value is a rational constant (exponent 0 only) */
	bool is_constant() const { return c_.empty() || (lo_ == 0 && c_.size() == 1); }
	Rat constant_value() const {
		if (c_.empty()) return Rat(0);
		if (!is_constant()) throw ArithError("Laurent: not a constant");
		return c_[0];
	}

	bool is_monomial() const { return c_.size() == 1; }

	friend bool operator==(const Laurent& a, const Laurent& b) {
		return a.lo_ == b.lo_ && a.c_ == b.c_;
	}
	friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }

	Laurent& operator+=(const Laurent& o) {
		if (o.is_zero()) return *this;
		if (is_zero()) return *this = o;
		int nlo = std::min(lo_, o.lo_);
		int nhi = std::max(hi_exp(), o.hi_exp());
		std::vector<Rat> nc(nhi - nlo + 1, Rat(0));
		for (size_t i = 0; i < c_.size(); ++i) nc[lo_ - nlo + i] = c_[i];
		for (size_t i = 0; i < o.c_.size(); ++i) nc[o.lo_ - nlo + i] += o.c_[i];
		lo_ = nlo;
		c_ = std::move(nc);
		trim();
		return *this;
	}
	Laurent& operator-=(const Laurent& o) { return *this += -o; }

	Laurent operator-() const {
		Laurent r(*this);
		for (auto& c : r.c_) c = -c;
		return r;
	}

	friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
	friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }

	friend Laurent operator*(const Laurent& a, const Laurent& b) {
		Laurent r;
		if (a.is_zero() || b.is_zero()) return r;
		r.lo_ = a.lo_ + b.lo_;
		r.c_.assign(a.c_.size() + b.c_.size() - 1, Rat(0));
		for (size_t i = 0; i < a.c_.size(); ++i)
			for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
		r.trim();
		return r;
	}
	Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

	Laurent pow(unsigned n) const {
		Laurent r(1), base(*this);
		while (n) {
			if (n & 1) r *= base;
			base *= base;
			n >>= 1;
		}
		return r;
	}

	/* the bar involution q -> q^{-1} */
	Laurent invert_q() const {
		Laurent r;
		if (is_zero()) return r;
		r.lo_ = -hi_exp();
		r.c_.assign(c_.rbegin(), c_.rend());
		return r;
	}

	/* terms in descending exponent order, canonical textual form */
	std::string render() const {
		if (is_zero()) return "0";
		std::ostringstream out;
		bool first = true;
		for (int e = hi_exp(); e >= lo_; --e) {
			Rat c = coeff(e);
			if (c == 0) continue;
			if (first) {
				if (c < 0) out << "-";
			} else {
				out << (c < 0 ? " - " : " + ");
			}
			Rat a = abs(c);
			if (a != 1 || e == 0) out << a.get_str();
			if (e != 0) {
				if (a != 1) out << "*";
				out << "q";
				if (e != 1) out << "^" << e;
			}
			first = false;
		}
		return out.str();
	}

private:
	void trim() {
		size_t b = 0, e = c_.size();
		while (b < e && c_[b] == 0) ++b;
		while (e > b && c_[e - 1] == 0) --e;
		lo_ += int(b);
		c_.erase(c_.begin() + e, c_.end());
		c_.erase(c_.begin(), c_.begin() + b);
		if (c_.empty()) lo_ = 0;
	}

	int lo_ = 0;
	std::vector<Rat> c_;  // c_[i] is the coefficient of q^(lo_+i)
};

/* [n]_q = (q^n - q^{-n}) / (q - q^{-1}); an odd function of n */
inline Laurent q_int(int n) {
	Laurent r;
	if (n == 0) return r;
	int m = n < 0 ? -n : n;
	for (int e = m - 1; e >= 1 - m; e -= 2) r += Laurent::q_power(e);
	return n < 0 ? -r : r;
}

/* rho = -(q^2 - q^{-2})^2 = -q^4 + 2 - q^{-4} */
inline Laurent rho() {
	Laurent s = Laurent::q_power(2) - Laurent::q_power(-2);
	return -(s * s);
}

}  // namespace qons
