#include <catch2/catch_amalgamated.hpp>
#include <qons/laurent.hpp>
#include <qons/ratfunc.hpp>

#include <random>

using namespace qons;

static Laurent Q(int e) { return Laurent::q_power(e); }

TEST_CASE("laurent arithmetic", "[ring]") {
	Laurent s = Q(2) - Q(-2);
	CHECK(s * s == Q(4) - Laurent(2) + Q(-4));
	CHECK((Q(1) + Q(-1)) * (Q(1) - Q(-1)) == Q(2) - Q(-2));
	CHECK(Laurent(0).is_zero());
	CHECK((s - s).is_zero());
	CHECK(s.pow(2) == s * s);
	CHECK(-(-s) == s);
}

TEST_CASE("q-integers", "[ring]") {
	CHECK(q_int(0).is_zero());
	CHECK(q_int(1) == Laurent(1));
	CHECK(q_int(2) == Q(1) + Q(-1));
	CHECK(q_int(3) == Q(2) + Laurent(1) + Q(-2));
	CHECK(q_int(-3) == -q_int(3));

	// [m+n] = q^n [m] + q^-m [n]
	for (int m = -5; m <= 5; ++m)
		for (int n = -5; n <= 5; ++n)
			CHECK(q_int(m + n) == Q(n) * q_int(m) + Q(-m) * q_int(n));
}

TEST_CASE("rho constant", "[ring]") {
	CHECK(rho() == -Q(4) + Laurent(2) - Q(-4));
	CHECK(rho().invert_q() == rho());  // bar invariant
	Laurent s = Q(2) - Q(-2);
	CHECK(rho() == -(s * s));
}

TEST_CASE("bar involution on laurent", "[ring]") {
	CHECK(Q(3).invert_q() == Q(-3));
	for (int n = 1; n <= 6; ++n) CHECK(q_int(n).invert_q() == q_int(n));
	Laurent a = Q(2) + Laurent(5) - Q(-1);
	CHECK(a.invert_q().invert_q() == a);
}

TEST_CASE("ratfunc canonical form", "[ring]") {
	RatFunc two_q = rf(q_int(2));  // q + q^-1
	RatFunc inv = RatFunc(1) / two_q;

	// 1/(q+q^-1) == q * 1/(q^2+1): shift 1, num 1, den q^2+1
	CHECK(inv.shift() == 1);
	CHECK(inv.num_rational() == std::vector<Rat>{Rat(1)});
	CHECK(inv.den_monic() == std::vector<Rat>{Rat(1), Rat(0), Rat(1)});

	CHECK(inv * two_q == RatFunc(1));
	CHECK(rf(q_int(2)) * inv == RatFunc(1));

	// quotient that happens to be polynomial collapses to a Laurent
	RatFunc g = rf(Q(2) - Q(-2)) / two_q;
	CHECK(g.is_laurent());
	CHECK(g.to_laurent() == Q(1) - Q(-1));
}

TEST_CASE("ratfunc errors", "[ring]") {
	CHECK_THROWS_AS(RatFunc(1) / RatFunc(0), ArithError);
	RatFunc proper = rf(Q(1) - Q(-1)) / rf(q_int(2));
	CHECK_FALSE(proper.is_laurent());
	CHECK_THROWS_AS(proper.to_laurent(), ArithError);
}

TEST_CASE("laurent embedding roundtrip", "[ring]") {
	std::mt19937 rng(20260822);
	std::uniform_int_distribution<int> coef(-6, 6), expo(-5, 5);
	for (int t = 0; t < 200; ++t) {
		Laurent l;
		for (int k = 0; k < 4; ++k) l += Laurent::monomial(rat_of(coef(rng), 1 + k), expo(rng));
		CHECK(rf(l).to_laurent() == l);
		CHECK(rf(l).invert_q() == rf(l.invert_q()));
	}
}

TEST_CASE("ratfunc field axioms, randomized", "[ring]") {
	std::mt19937 rng(7);
	std::uniform_int_distribution<int> coef(-4, 4), expo(-3, 3);
	auto rand_rf = [&]() {
		Laurent n, d;
		for (int k = 0; k < 3; ++k) {
			n += Laurent::monomial(Rat(coef(rng)), expo(rng));
			d += Laurent::monomial(Rat(coef(rng)), expo(rng));
		}
		if (d.is_zero()) d = Laurent(1);
		return rf(n) / rf(d);
	};
	for (int t = 0; t < 300; ++t) {
		RatFunc a = rand_rf(), b = rand_rf(), c = rand_rf();
		CHECK((a + b) + c == a + (b + c));
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
		CHECK(a + b == b + a);
		CHECK(a * b == b * a);
		CHECK(a - a == RatFunc(0));
		if (!a.is_zero()) CHECK(a / a == RatFunc(1));
		CHECK(a + RatFunc(0) == a);
		CHECK(a * RatFunc(1) == a);
	}
}

TEST_CASE("render is parseable text", "[ring]") {
	CHECK(rf(q_int(2)).render() == "q + q^-1");
	CHECK((RatFunc(1) / rf(q_int(2))).render() == "q/(q^2 + 1)");
	CHECK(RatFunc(0).render() == "0");
	CHECK(RatFunc(Rat(-3, 2)).render() == "-3/2");
	CHECK(rf(rho()).render() == "-q^4 + 2 - q^-4");
}
