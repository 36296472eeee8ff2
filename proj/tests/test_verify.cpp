#include <catch2/catch_amalgamated.hpp>
#include <set>
#include <string>

#include "qons/verify.hpp"

using namespace qons;

namespace {

/* everything but the timing, for determinism comparisons */
std::string stable_fields(const CheckReport& r) {
	CheckReport c = r;
	c.millis = 0;
	return check_report_json(c);
}

}  // namespace

TEST_CASE("the registry lists each certification check once", "[verify]") {
	const auto& names = Verifier::check_names();
	CHECK(names.size() == 18);
	std::set<std::string> uniq(names.begin(), names.end());
	CHECK(uniq.size() == names.size());
	// public names are stable strings; spot check a few
	CHECK(uniq.count("pbw_dims") == 1);
	CHECK(uniq.count("morphisms") == 1);
	CHECK(uniq.count("bchain_recurrence") == 1);
	CHECK(uniq.count("sigma_presentation") == 1);
}

TEST_CASE("every check passes at a moderate shared bound", "[verify]") {
	Verifier v;
	auto reports = v.run_all(5);
	REQUIRE(reports.size() == Verifier::check_names().size());
	for (const auto& r : reports) {
		INFO(r.check);
		CHECK(r.status == "pass");
		CHECK(r.witnesses.empty());
		CHECK(r.D == 5);
		CHECK(r.H >= 0);
		CHECK(!r.presentation.empty());
	}
}

TEST_CASE("omitting the bound selects the per-check default", "[verify]") {
	Verifier v;
	CheckReport r = v.run_check("root_vector_independence");
	CHECK(r.D == 6);
	CHECK(r.status == "pass");
}

TEST_CASE("perturbing any check makes it fail with nonzero witnesses", "[verify]") {
	Verifier v;
	for (const auto& name : Verifier::check_names()) {
		CheckReport r = v.run_check(name, 5, true);
		INFO(name);
		CHECK(r.status == "fail");
		REQUIRE(!r.witnesses.empty());
		for (const auto& [desc, poly] : r.witnesses) {
			CHECK(!desc.empty());
			CHECK(!poly.is_zero());
		}
	}
}

TEST_CASE("perturbed runs refuse to pass when no instance exists at the bound", "[verify]") {
	Verifier v;
	// the smallest trade identity in this family has degree 5
	CheckReport r = v.run_check("higher_bracket_trades", 4, true);
	CHECK(r.status == "fail");
	REQUIRE(!r.witnesses.empty());
	CHECK(r.witnesses[0].first.find("perturbation") != std::string::npos);
}

TEST_CASE("failure witnesses reproduce through an independent build", "[verify]") {
	Verifier v;
	CheckReport r = v.run_check("g1_bracket_trade", 5, true);
	REQUIRE(r.status == "fail");
	REQUIRE(!r.witnesses.empty());
	REQUIRE(r.presentation == pres_name(PresId::ALT_FULL));
	TruncatedQuotient tq =
	    build_certified(Presentation(PresId::ALT_FULL), 5, pbw_series(DegreeScheme::ALT_DEG, 5));
	for (const auto& [desc, poly] : r.witnesses) {
		INFO(desc);
		NcPoly nf = tq.normal_form(poly);
		CHECK(!nf.is_zero());
		// witnesses arrive already in normal form
		CHECK(nf == poly);
	}
}

TEST_CASE("reports serialize with sorted keys and deterministic bytes", "[verify]") {
	Verifier v;
	CheckReport a = v.run_check("g1_bracket_trade", 4);
	CheckReport b = v.run_check("g1_bracket_trade", 4);
	CHECK(stable_fields(a) == stable_fields(b));

	std::string j = check_report_json(a);
	size_t pD = j.find("\"D\":"), pH = j.find("\"H\":"), pc = j.find("\"check\":"),
	       pm = j.find("\"millis\":"), pp = j.find("\"presentation\":"),
	       ps = j.find("\"status\":"), pw = j.find("\"witnesses\":");
	REQUIRE(pD != std::string::npos);
	REQUIRE(pw != std::string::npos);
	CHECK(pD < pH);
	CHECK(pH < pc);
	CHECK(pc < pm);
	CHECK(pm < pp);
	CHECK(pp < ps);
	CHECK(ps < pw);

	CheckReport f = v.run_check("central_element", 4, true);
	REQUIRE(f.status == "fail");
	std::string jf = check_report_json(f);
	CHECK(jf.find("\"description\":") != std::string::npos);
	CHECK(jf.find("\"element\":") != std::string::npos);

	CHECK(check_reports_json({}) == "[]");
	CHECK(check_reports_json({a, f}) ==
	      "[" + check_report_json(a) + "," + check_report_json(f) + "]");
}

TEST_CASE("unknown check names are rejected before any work runs", "[verify]") {
	Verifier v;
	CHECK_THROWS_AS(v.run_check("not_a_check"), UsageError);
	CHECK_THROWS_AS(v.run_suite({"pbw_dims", "not_a_check"}, 4), UsageError);
	CHECK(v.run_suite({}, 4).empty());
}

TEST_CASE("a two-thread suite matches the sequential run", "[verify]") {
	Verifier v;
	std::vector<std::string> subset{"g1_bracket_trade", "qdg_embedding", "tensor_dims",
	                                "central_element", "higher_bracket_trades"};
	auto seq = v.run_suite(subset, 5, 1);
	auto par = v.run_suite(subset, 5, 2);
	REQUIRE(seq.size() == par.size());
	for (size_t i = 0; i < seq.size(); ++i) {
		INFO(subset[i]);
		CHECK(stable_fields(seq[i]) == stable_fields(par[i]));
	}
}
