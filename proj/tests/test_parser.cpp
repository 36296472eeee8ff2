#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qons/parser.hpp"

using namespace qons;

namespace {

NcPoly random_poly(std::mt19937& rng, Alphabet a, const std::vector<Generator>& gens) {
	std::uniform_int_distribution<int> nterms(0, 4), len(0, 3), pick(0, int(gens.size()) - 1),
	    co(-5, 5), sh(-3, 3), flip(0, 1);
	NcPoly p(a);
	int t = nterms(rng);
	for (int i = 0; i < t; ++i) {
		Word w;
		int L = len(rng);
		for (int j = 0; j < L; ++j) w.push_back(gens[size_t(pick(rng))]);
		int c = co(rng);
		if (!c) c = 7;
		RatFunc r = RatFunc(c) * RatFunc::q_power(sh(rng));
		if (flip(rng)) r = r / rf(Laurent::q_power(2) + Laurent::q_power(0));
		if (flip(rng)) r = r * (RatFunc(1) / RatFunc(3)) + RatFunc::q_power(sh(rng));
		p += NcPoly::word(a, w, r);
	}
	return p;
}

NcPoly scal(const RatFunc& c) { return NcPoly::scalar(c, Alphabet::ALT); }

}  // namespace

TEST_CASE("parsing inverts rendering on random elements", "[parser]") {
	std::mt19937 rng(41);
	struct Case {
		Alphabet a;
		DegreeScheme s;
	};
	for (Case cs : {Case{Alphabet::ALT, DegreeScheme::ALT_DEG},
	                Case{Alphabet::ESS, DegreeScheme::ESS_DEG},
	                Case{Alphabet::ESS_SIGMA, DegreeScheme::ESS_DEG},
	                Case{Alphabet::OQ, DegreeScheme::LEN_DEG},
	                Case{Alphabet::Z, DegreeScheme::Z_DEG}}) {
		auto gens = letters_up_to(cs.a, cs.s, 6);
		for (int i = 0; i < 250; ++i) {
			NcPoly p = random_poly(rng, cs.a, gens);
			std::string txt = p.render();
			INFO(alphabet_name(cs.a) << ": " << txt);
			NcPoly back = parse(txt, cs.a);
			CHECK(back == p);
			// rendering a parse is already canonical
			CHECK(parse(back.render(), cs.a).render() == back.render());
		}
	}
}

TEST_CASE("bracket atoms expand to commutators", "[parser]") {
	NcPoly w0 = NcPoly::gen(Alphabet::ALT, W(0)), w1 = NcPoly::gen(Alphabet::ALT, W(1));
	CHECK(parse("[W[0], W[1]]_q", Alphabet::ALT) ==
	      RatFunc::q_power(1) * (w0 * w1) - RatFunc::q_power(-1) * (w1 * w0));
	CHECK(parse("[W[0],W[1]]", Alphabet::ALT) == commutator(w0, w1));
	CHECK(parse("[W[0],W[1]]_q-1", Alphabet::ALT) == q_commutator(w0, w1, -1));
	// a spaced minus after the suffix is subtraction, not a twist
	CHECK(parse("[W[0],W[1]]_q - 1", Alphabet::ALT) ==
	      q_commutator(w0, w1) - scal(RatFunc(1)));
	CHECK(parse("[[W[0],Gt[2]]_q, G[1]]", Alphabet::ALT) ==
	      commutator(q_commutator(w0, NcPoly::gen(Alphabet::ALT, Gt(2))),
	                 NcPoly::gen(Alphabet::ALT, G(1))));
}

TEST_CASE("scalar sugar and powers", "[parser]") {
	CHECK(parse("Gt[0]", Alphabet::ALT) == scal(gg0()));
	CHECK(parse("G[0]", Alphabet::ESS) == NcPoly::scalar(gg0(), Alphabet::ESS));
	CHECK(parse("W[0]*W[0] - W[0]^2", Alphabet::ALT).is_zero());
	CHECK(parse("q^-3*(q^2 + 3)/(q^4 + 1)", Alphabet::ALT) ==
	      scal(RatFunc::q_power(-3) * rf(Laurent::q_power(2) + Laurent::monomial(3, 0)) /
	           rf(Laurent::q_power(4) + Laurent::monomial(1, 0))));
	CHECK(parse("(q + q^-1)^-2", Alphabet::ALT) ==
	      scal(RatFunc(1) / (rf(q_int(2)) * rf(q_int(2)))));
	CHECK(parse("2^10", Alphabet::ALT) == scal(RatFunc(1024)));
	CHECK(parse("123456789012345678901234567890", Alphabet::ALT) ==
	      scal(RatFunc(Rat(Int("123456789012345678901234567890")))));
	CHECK(parse("0", Alphabet::Z).is_zero());
	CHECK(parse("-W[0]^2 + 3", Alphabet::ALT) ==
	      scal(RatFunc(3)) - NcPoly::gen(Alphabet::ALT, W(0)).pow(2));
}

TEST_CASE("named elements land in the requested alphabet", "[parser]") {
	CHECK(parse("B[a0,-2]", Alphabet::OQ) ==
	      reinterpret_alphabet(b_element(BKind::alpha0, -2), Alphabet::OQ));
	CHECK(parse("tB[a1,3]", Alphabet::ESS) == tilde_b_element(BKind::alpha1, 3));
	CHECK(parse("Bd[2]", Alphabet::ESS) == b_delta_element(2, BDeltaFormula::via_alpha1));
	CHECK(parse("tBd[1]", Alphabet::ESS_SIGMA) ==
	      reinterpret_alphabet(tilde_b_delta_element(1, BDeltaFormula::via_alpha1),
	                           Alphabet::ESS_SIGMA));
}

TEST_CASE("parse errors carry positions and stay in bounds", "[parser]") {
	auto pos_of = [](const char* text, Alphabet a) -> long {
		try {
			parse(text, a);
		} catch (const UsageError& e) {
			std::string m = e.what();
			auto p = m.find("parse error at ");
			REQUIRE(p == 0);
			return std::stol(m.substr(15));
		}
		return -1;
	};
	CHECK(pos_of("W[0]*", Alphabet::ALT) == 5);
	CHECK(pos_of("W[2]", Alphabet::ESS) == 0);
	CHECK(pos_of("G[-1]", Alphabet::ALT) == 0);
	CHECK(pos_of("Q[1]", Alphabet::ALT) == 0);
	CHECK(pos_of("W[0]/W[1]", Alphabet::ALT) == 5);
	CHECK(pos_of("(W[0]+W[1]", Alphabet::ALT) == 10);
	CHECK(pos_of("W[0]^-2", Alphabet::ALT) == 5);
	CHECK(pos_of("1/0", Alphabet::ALT) == 2);
	CHECK(pos_of("W[0] W[1]", Alphabet::ALT) == 5);
	CHECK(pos_of("[W[0],W[1]]_p", Alphabet::ALT) == 12);
	CHECK(pos_of("B[a2,1]", Alphabet::ESS) == 0);
	CHECK(pos_of("z[1]", Alphabet::ALT) == 0);
	CHECK(pos_of("Bd[0]", Alphabet::ESS) == 0);
	CHECK(pos_of("", Alphabet::ALT) == 0);
	CHECK(pos_of("W[99999999999]", Alphabet::ALT) >= 0);
}
