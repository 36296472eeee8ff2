#pragma once

#include <cctype>
#include <string>

#include "elements.hpp"

namespace qons {

/* Expression language for algebra elements, one parse per target alphabet.
 *
 *   expr   := ['-'] term (('+'|'-') term)*
 *   term   := factor (('*'|'/') factor)*
 *   factor := atom ['^' int]
 *   atom   := int | 'q' | gen | named | '[' expr ',' expr ']' ['_q'['-1']]
 *           | '(' expr ')'
 *   gen    := ('W'|'G'|'Gt'|'z') '[' int ']'
 *   named  := ('B'|'tB') '[' ('a0'|'a1') ',' int ']' | ('Bd'|'tBd') '[' int ']'
 *
 * Integers are arbitrary precision.  Division needs a scalar divisor and a
 * negative power a scalar base, so every expression stays polynomial in the
 * generators.  G[0] and Gt[0] stand for their common scalar value.  Named
 * elements are built over the essential alphabet and reinterpreted into the
 * requested one.  The bracket suffixes _q and _q-1 pick the two twisted
 * commutators and attach directly to ']' without spaces; a spaced '- 1' after
 * ']_q' is ordinary subtraction.  Whitespace is free elsewhere.  Errors carry
 * the character offset they refer to.
 *
 * parse() inverts NcPoly::render() exactly: rendered text uses only integer
 * literals, q powers, '*', '/', '+', '-', parentheses, and gen atoms. */

namespace detail {

class ExprParser {
public:
	ExprParser(const std::string& s, Alphabet a) : s_(s), a_(a) {}

	NcPoly run() {
		NcPoly r = expr();
		skip();
		if (pos_ != s_.size()) fail("unexpected trailing input");
		return r;
	}

private:
	const std::string& s_;
	Alphabet a_;
	size_t pos_ = 0;

	[[noreturn]] void fail(const std::string& msg) const {
		throw UsageError("parse error at " + std::to_string(pos_) + ": " + msg);
	}

	void skip() {
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
	}
	bool eat(char c) {
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}
	void expect(char c) {
		if (!eat(c)) fail(std::string("expected '") + c + "'");
	}

	static RatFunc scalar_of(const NcPoly& p) {
		if (p.is_zero()) return RatFunc();
		return p.terms().begin()->second;
	}

	static RatFunc rf_pow(RatFunc base, long e) {
		RatFunc r(1);
		while (e) {
			if (e & 1) r = r * base;
			base = base * base;
			e >>= 1;
		}
		return r;
	}

	NcPoly expr() {
		bool neg = eat('-');
		NcPoly r = term();
		if (neg) r = RatFunc(-1) * r;
		for (;;) {
			if (eat('+'))
				r += term();
			else if (eat('-'))
				r -= term();
			else
				return r;
		}
	}

	NcPoly term() {
		NcPoly r = factor();
		for (;;) {
			if (eat('*')) {
				r *= factor();
			} else if (eat('/')) {
				size_t at = pos_;
				NcPoly d = factor();
				if (!d.is_scalar()) {
					pos_ = at;
					fail("division needs a scalar divisor");
				}
				RatFunc c = scalar_of(d);
				if (c.is_zero()) {
					pos_ = at;
					fail("division by zero");
				}
				r = r / c;
			} else {
				return r;
			}
		}
	}

	NcPoly factor() {
		NcPoly b = atom();
		skip();
		if (pos_ >= s_.size() || s_[pos_] != '^') return b;
		++pos_;
		size_t at = pos_;
		long e = read_int();
		if (e < 0) {
			if (!b.is_scalar()) {
				pos_ = at;
				fail("negative power needs a scalar base");
			}
			RatFunc c = scalar_of(b);
			if (c.is_zero()) {
				pos_ = at;
				fail("negative power of zero");
			}
			return NcPoly::scalar(rf_pow(RatFunc(1) / c, -e), b.alphabet());
		}
		if (!b.is_scalar() && e > 4096) {
			pos_ = at;
			fail("exponent too large for a word");
		}
		return b.pow(static_cast<unsigned>(e));
	}

	NcPoly atom() {
		skip();
		if (pos_ >= s_.size()) fail("unexpected end of input");
		char c = s_[pos_];
		if (std::isdigit(static_cast<unsigned char>(c)))
			return NcPoly::scalar(RatFunc(read_uint()), a_);
		if (c == '(') {
			++pos_;
			NcPoly r = expr();
			expect(')');
			return r;
		}
		if (c == '[') {
			++pos_;
			NcPoly x = expr();
			expect(',');
			NcPoly y = expr();
			expect(']');
			// twist suffixes bind only when glued to the bracket
			if (pos_ < s_.size() && s_[pos_] == '_') {
				++pos_;
				if (pos_ >= s_.size() || s_[pos_] != 'q') fail("expected 'q' after '_'");
				++pos_;
				if (pos_ + 1 < s_.size() && s_[pos_] == '-' && s_[pos_ + 1] == '1') {
					pos_ += 2;
					return q_commutator(x, y, -1);
				}
				return q_commutator(x, y);
			}
			return commutator(x, y);
		}
		if (std::isalpha(static_cast<unsigned char>(c))) return name_atom();
		fail(std::string("unexpected character '") + c + "'");
	}

	NcPoly name_atom() {
		size_t at = pos_;
		std::string id = read_ident();
		if (id == "q") return NcPoly::scalar(RatFunc::q_power(1), a_);
		if (id == "W" || id == "G" || id == "Gt" || id == "z") {
			expect('[');
			long n = read_int();
			expect(']');
			Generator g;
			if (id == "W") {
				g = W(static_cast<int>(n));
			} else if (id == "z") {
				if (n < 1) index_fail(at, "z indices start at 1");
				g = Zgen(static_cast<int>(n));
			} else {
				if (n == 0) return NcPoly::scalar(gg0(), a_);
				if (n < 0) index_fail(at, id + " indices start at 0");
				g = id == "G" ? G(static_cast<int>(n)) : Gt(static_cast<int>(n));
			}
			if (!valid_in(a_, g))
				index_fail(at, g.render() + " is not a generator of the " + alphabet_name(a_) +
				                   " alphabet");
			return NcPoly::gen(a_, g);
		}
		if (id == "B" || id == "tB") {
			expect('[');
			std::string kind = read_ident();
			if (kind != "a0" && kind != "a1") index_fail(at, "expected a0 or a1 before the index");
			expect(',');
			long n = read_int();
			expect(']');
			BKind k = kind == "a0" ? BKind::alpha0 : BKind::alpha1;
			NcPoly e = id == "B" ? b_element(k, static_cast<int>(n))
			                     : tilde_b_element(k, static_cast<int>(n));
			return to_alphabet(e, at);
		}
		if (id == "Bd" || id == "tBd") {
			expect('[');
			long n = read_int();
			expect(']');
			if (n < 1) index_fail(at, "imaginary indices start at 1");
			NcPoly e = id == "Bd" ? b_delta_element(static_cast<int>(n), BDeltaFormula::via_alpha1)
			                      : tilde_b_delta_element(static_cast<int>(n),
			                                              BDeltaFormula::via_alpha1);
			return to_alphabet(e, at);
		}
		pos_ = at;
		fail("unknown name '" + id + "'");
	}

	[[noreturn]] void index_fail(size_t at, const std::string& msg) {
		pos_ = at;
		fail(msg);
	}

	NcPoly to_alphabet(const NcPoly& e, size_t at) {
		try {
			return reinterpret_alphabet(e, a_);
		} catch (const UsageError& ex) {
			pos_ = at;
			fail(ex.what());
		}
	}

	std::string read_ident() {
		skip();
		size_t d0 = pos_;
		while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
		if (pos_ == d0) fail("expected a name");
		return s_.substr(d0, pos_ - d0);
	}

	long read_int() {
		skip();
		bool neg = eat('-');
		skip();
		size_t d0 = pos_;
		unsigned long long v = 0;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
			v = v * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
			if (v > (1ull << 31)) fail("integer out of range");
			++pos_;
		}
		if (pos_ == d0) fail("expected an integer");
		return neg ? -static_cast<long>(v) : static_cast<long>(v);
	}

	Rat read_uint() {
		size_t d0 = pos_;
		while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
		return Rat(Int(s_.substr(d0, pos_ - d0)));
	}
};

}  // namespace detail

inline NcPoly parse(const std::string& text, Alphabet a) {
	return detail::ExprParser(text, a).run();
}

}  // namespace qons
