#include <catch2/catch_amalgamated.hpp>
#include <qons/ncpoly.hpp>

using namespace qons;

namespace {
NcPoly g(Alphabet a, Generator x) { return NcPoly::gen(a, x); }
const Alphabet OQ = Alphabet::OQ;
const Alphabet ALT = Alphabet::ALT;
const Alphabet ESS = Alphabet::ESS;
}  // namespace

TEST_CASE("generator codes order families", "[freealg]") {
	CHECK(G(1) < W(0));
	CHECK(W(0) < W(1));
	CHECK(W(1) < Gt(1));
	CHECK(W(-1) < W(2));  // Wminus(1) < Wplus(1)
	CHECK(G(2).render() == "G[2]");
	CHECK(W(-3).render() == "W[-3]");
	CHECK(W(4).render() == "W[4]");
	CHECK(Gt(7).render() == "Gt[7]");
}

TEST_CASE("degree schemes", "[freealg]") {
	CHECK(degree_of(DegreeScheme::ALT_DEG, W(-2)) == 5);
	CHECK(degree_of(DegreeScheme::ALT_DEG, W(3)) == 5);
	CHECK(degree_of(DegreeScheme::ALT_DEG, G(3)) == 6);
	CHECK(degree_of(DegreeScheme::ALT_DEG, Gt(1)) == 2);
	CHECK(degree_of(DegreeScheme::ESS_DEG, Word{Gt(3), W(0)}) == 7);
	CHECK(degree_of(DegreeScheme::LEN_DEG, Word{W(0), W(1), W(0)}) == 3);
	CHECK(degree_of(DegreeScheme::Z_DEG, Zgen(5)) == 5);
	CHECK_THROWS_AS(degree_of(DegreeScheme::Z_DEG, W(0)), UsageError);
	CHECK_THROWS_AS(degree_of(DegreeScheme::ESS_DEG, W(-1)), UsageError);
}

TEST_CASE("free algebra arithmetic", "[freealg]") {
	NcPoly x = g(OQ, W(0)), y = g(OQ, W(1));
	CHECK((x + y) * (x + y) == x * x + x * y + y * x + y * y);
	CHECK(x * (y + y) == RatFunc(2) * (x * y));
	CHECK((x - x).is_zero());
	CHECK(x.pow(3) == x * x * x);
	CHECK(commutator(x, x).is_zero());
	CHECK(commutator(x, y) == x * y - y * x);
	CHECK(q_commutator(x, y) == RatFunc::q_power(1) * (x * y) - RatFunc::q_power(-1) * (y * x));

	// scalars mix across alphabets, proper words do not
	NcPoly c = NcPoly::scalar(RatFunc(5), Alphabet::Z);
	CHECK((x + c).coeff(Word{}) == RatFunc(5));
	CHECK_THROWS_AS(x + g(ALT, Gt(1)), UsageError);
	CHECK_THROWS_AS(NcPoly::gen(OQ, Gt(1)), UsageError);
}

TEST_CASE("triple q-bracket expands to the Dolan-Grady shape", "[freealg]") {
	NcPoly x = g(OQ, W(0)), y = g(OQ, W(1));
	NcPoly lhs = commutator(x, q_commutator(x, q_commutator(x, y, +1), -1));
	RatFunc three = rf(q_int(3));
	NcPoly rhs = x.pow(3) * y - three * (x * x * y * x) + three * (x * y * x * x) - y * x.pow(3);
	CHECK(lhs == rhs);
}

TEST_CASE("word enumeration in canonical order", "[freealg]") {
	auto w1 = enumerate_words(ALT, DegreeScheme::ALT_DEG, 1);
	REQUIRE(w1.size() == 3);
	CHECK(w1[0] == Word{});
	CHECK(w1[1] == Word{W(0)});
	CHECK(w1[2] == Word{W(1)});

	auto w2 = enumerate_words(ALT, DegreeScheme::ALT_DEG, 2);
	REQUIRE(w2.size() == 9);
	CHECK(w2[3] == Word{G(1)});
	CHECK(w2[4] == Word{Gt(1)});
	CHECK(w2[5] == Word{W(0), W(0)});
	CHECK(w2[6] == Word{W(0), W(1)});
	CHECK(w2[7] == Word{W(1), W(0)});
	CHECK(w2[8] == Word{W(1), W(1)});

	// arbitrary levels: exactly two generators in each positive degree, so
	// the level counts satisfy a_n = 2 * sum_{j<n} a_j with a_0 = 1
	std::vector<long> expect{1};
	long total = 1;
	for (int n = 1; n <= 7; ++n) {
		expect.push_back(2 * total);
		total += expect.back();
	}
	auto all = enumerate_words(ALT, DegreeScheme::ALT_DEG, 7);
	std::vector<long> got(8, 0);
	for (const auto& w : all) ++got[degree_of(DegreeScheme::ALT_DEG, w)];
	CHECK(got == expect);

	// canonical order is strictly increasing along the enumeration
	auto less = [](const Word& a, const Word& b) {
		return canonical_less(DegreeScheme::ALT_DEG, a, b);
	};
	for (size_t i = 0; i + 1 < w2.size(); ++i) CHECK(less(w2[i], w2[i + 1]));
}

TEST_CASE("essential word counts", "[freealg]") {
	auto all = enumerate_words(ESS, DegreeScheme::ESS_DEG, 5);
	std::vector<long> got(6, 0);
	for (const auto& w : all) ++got[degree_of(DegreeScheme::ESS_DEG, w)];
	CHECK(got == std::vector<long>{1, 2, 5, 12, 30, 74});
}

TEST_CASE("morphism application", "[freealg]") {
	Morphism swap_auto{"swap", OQ, OQ, false, [&](const Generator& x) {
		                   return g(OQ, x.fam == Family::Wminus ? W(1) : W(0));
	                   }};
	Morphism swap_anti = swap_auto;
	swap_anti.anti = true;

	NcPoly x = g(OQ, W(0)), y = g(OQ, W(1));
	NcPoly p = x * y * y;  // W0 W1 W1
	CHECK(apply_morphism(swap_auto, p) == y * x * x);
	CHECK(apply_morphism(swap_anti, p) == x * x * y);
	CHECK(apply_morphism(swap_anti, commutator(x, y)) == commutator(x, y));

	// (anti)morphisms are linear over the coefficient field
	NcPoly mix = rf(q_int(2)) * (x * y) - RatFunc::q_power(-3) * y;
	CHECK(apply_morphism(swap_auto, mix) == rf(q_int(2)) * (y * x) - RatFunc::q_power(-3) * x);
}

TEST_CASE("alphabet reinterpretation", "[freealg]") {
	NcPoly p = g(OQ, W(0)) * g(OQ, W(1));
	NcPoly q = reinterpret_alphabet(p, ESS);
	CHECK(q.alphabet() == ESS);
	CHECK(q.term_count() == 1);
	CHECK_THROWS_AS(reinterpret_alphabet(g(ALT, Gt(2)), Alphabet::OQ), UsageError);
}

TEST_CASE("ncpoly rendering", "[freealg]") {
	NcPoly x = g(OQ, W(0)), y = g(OQ, W(1));
	CHECK((x * y * y).render() == "W[0]*W[1]^2");
	CHECK((x - y).render() == "W[0] - W[1]");
	CHECK((rf(q_int(2)) * x).render() == "(q + q^-1)*W[0]");
	CHECK((-x).render() == "-W[0]");
	CHECK(NcPoly(OQ).render() == "0");
	CHECK((RatFunc::q_power(-2) * x * y).render() == "q^-2*W[0]*W[1]");
}
