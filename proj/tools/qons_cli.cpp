#include <CLI11.hpp>
#include <iostream>
#include <json.hpp>
#include <string>
#include <vector>

#include "qons/parser.hpp"
#include "qons/quotient.hpp"
#include "qons/verify.hpp"

using nlohmann::json;
using namespace qons;

namespace {

/* exit codes: 0 success or pass, 1 fail, 2 usage, 3 resource limit */
enum { EXIT_PASS = 0, EXIT_FAIL = 1, EXIT_USAGE = 2, EXIT_RESOURCE = 3 };

struct QuotientArgs {
	std::string presentation = "ALT_FULL";
	int degree = 6;
	int headroom = 0;

	TruncatedQuotient build(int* H_used) const {
		Presentation p(pres_from_name(presentation));
		if (degree < 0) throw UsageError("degree must be >= 0");
		if (headroom < 0 || headroom % 2) throw UsageError("headroom must be even and >= 0");
		return build_certified(p, degree, pbw_series(p.scheme(), degree), H_used, headroom);
	}

	void attach(CLI::App* cmd) {
		cmd->add_option("--presentation,-p", presentation,
		                "presentation: OQ_DG, ALT_FULL, ALT_REDUCED, ESS_COMPACT, "
		                "ESS_COMPACT_SIGMA, POLY_Z")
		    ->capture_default_str();
		cmd->add_option("--degree,-d", degree, "degree bound of the truncated quotient")
		    ->capture_default_str();
		cmd->add_option("--headroom", headroom,
		                "initial truncation headroom (escalates automatically)")
		    ->capture_default_str();
	}
};

void attach_format(CLI::App* cmd, std::string& format) {
	cmd->add_option("--format", format, "output format")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();
}

int cmd_normalize(const QuotientArgs& qa, const std::string& expr, const std::string& format) {
	int H = 0;
	TruncatedQuotient tq = qa.build(&H);
	NcPoly x = parse(expr, tq.presentation().alphabet());
	NcPoly nf = tq.normal_form(x);
	if (format == "json") {
		json out{{"degree", qa.degree},
		         {"headroom", H},
		         {"input", expr},
		         {"normal_form", nf.render()},
		         {"presentation", qa.presentation}};
		std::cout << out.dump() << "\n";
	} else {
		std::cout << nf.render() << "\n";
	}
	return EXIT_PASS;
}

int cmd_equal(const QuotientArgs& qa, const std::string& lhs, const std::string& rhs,
              const std::string& format) {
	int H = 0;
	TruncatedQuotient tq = qa.build(&H);
	Alphabet a = tq.presentation().alphabet();
	NcPoly diff = tq.normal_form(parse(lhs, a) - parse(rhs, a));
	bool equal = diff.is_zero();
	if (format == "json") {
		json out{{"degree", qa.degree},
		         {"difference", diff.render()},
		         {"equal", equal},
		         {"headroom", H},
		         {"left", lhs},
		         {"presentation", qa.presentation},
		         {"right", rhs}};
		std::cout << out.dump() << "\n";
	} else if (equal) {
		std::cout << "equal\n";
	} else {
		std::cout << "distinct: " << diff.render() << "\n";
	}
	return equal ? EXIT_PASS : EXIT_FAIL;
}

int cmd_dims(const QuotientArgs& qa, const std::string& format) {
	int H = 0;
	TruncatedQuotient tq = qa.build(&H);
	if (format == "json") {
		json out{{"degree", qa.degree},
		         {"dims", tq.dims()},
		         {"headroom", H},
		         {"presentation", qa.presentation}};
		std::cout << out.dump() << "\n";
	} else {
		std::string line;
		for (long d : tq.dims()) line += (line.empty() ? "" : " ") + std::to_string(d);
		std::cout << line << "\n";
	}
	return EXIT_PASS;
}

/* catalog of derived elements: W[n] and G[k] essential expansions, the B
 * chains and their sigma twins, the imaginary elements with an optional
 * formula tag, and the closed-form W sums */
NcPoly catalog_element(const std::string& name) {
	size_t lb = name.find('[');
	if (lb == std::string::npos || name.back() != ']')
		throw UsageError("element names look like W[-2], B[a0,3], Bd[2,a0], "
		                 "Wsum[b_left_minus,2]");
	std::string head = name.substr(0, lb);
	std::vector<std::string> args;
	for (size_t at = lb + 1; at < name.size();) {
		size_t comma = name.find(',', at);
		size_t end = comma == std::string::npos ? name.size() - 1 : comma;
		std::string piece = name.substr(at, end - at);
		size_t b = piece.find_first_not_of(" \t");
		size_t e = piece.find_last_not_of(" \t");
		args.push_back(b == std::string::npos ? "" : piece.substr(b, e - b + 1));
		at = end + 1;
	}
	auto int_arg = [&](size_t i) {
		try {
			size_t used = 0;
			int v = std::stoi(args.at(i), &used);
			if (used != args.at(i).size()) throw std::invalid_argument("");
			return v;
		} catch (const std::exception&) {
			throw UsageError(name + ": argument " + std::to_string(i + 1) +
			                 " must be an integer");
		}
	};
	auto kind_arg = [&](size_t i) {
		if (args.at(i) == "a0") return BKind::alpha0;
		if (args.at(i) == "a1") return BKind::alpha1;
		throw UsageError(name + ": expected a0 or a1");
	};
	auto formula_arg = [&](size_t i) {
		if (args.size() <= i || args[i] == "a1") return BDeltaFormula::via_alpha1;
		if (args[i] == "a0") return BDeltaFormula::via_alpha0;
		throw UsageError(name + ": formula tag must be a0 or a1");
	};
	auto arity = [&](size_t lo, size_t hi) {
		if (args.size() < lo || args.size() > hi)
			throw UsageError(name + ": wrong number of arguments");
	};
	if (head == "W") {
		arity(1, 1);
		return essential_W(int_arg(0));
	}
	if (head == "G") {
		arity(1, 1);
		return essential_G(int_arg(0));
	}
	if (head == "Gt") {
		arity(1, 1);
		int k = int_arg(0);
		if (k == 0) return NcPoly::scalar(gg0(), Alphabet::ESS);
		return NcPoly::gen(Alphabet::ESS, Gt(k));
	}
	if (head == "B") {
		arity(2, 2);
		return b_element(kind_arg(0), int_arg(1));
	}
	if (head == "tB") {
		arity(2, 2);
		return tilde_b_element(kind_arg(0), int_arg(1));
	}
	if (head == "Bd") {
		arity(1, 2);
		return b_delta_element(int_arg(0), formula_arg(1));
	}
	if (head == "tBd") {
		arity(1, 2);
		return tilde_b_delta_element(int_arg(0), formula_arg(1));
	}
	if (head == "Wsum") {
		arity(2, 2);
		static const std::pair<const char*, WSumVariant> variants[] = {
		    {"b_left_minus", WSumVariant::b_left_minus},
		    {"b_left_plus", WSumVariant::b_left_plus},
		    {"b_right_minus", WSumVariant::b_right_minus},
		    {"b_right_plus", WSumVariant::b_right_plus},
		    {"sigma_b_left_minus", WSumVariant::sigma_b_left_minus},
		    {"sigma_b_left_plus", WSumVariant::sigma_b_left_plus},
		    {"sigma_b_right_minus", WSumVariant::sigma_b_right_minus},
		    {"sigma_b_right_plus", WSumVariant::sigma_b_right_plus},
		};
		for (const auto& [vn, v] : variants)
			if (args[0] == vn) return w_closed_form(int_arg(1), v);
		throw UsageError(name + ": unknown sum variant '" + args[0] + "'");
	}
	throw UsageError("unknown element family '" + head + "'");
}

int cmd_element(const std::string& name, const std::string& format) {
	NcPoly e = catalog_element(name);
	if (format == "json") {
		json out{{"alphabet", alphabet_name(e.alphabet())},
		         {"element", e.render()},
		         {"name", name}};
		std::cout << out.dump() << "\n";
	} else {
		std::cout << e.render() << "\n";
	}
	return EXIT_PASS;
}

int cmd_verify(std::vector<std::string> checks, int degree, int threads,
               const std::string& format) {
	Verifier v;
	if (checks.empty()) checks = Verifier::check_names();
	auto reports = v.run_suite(checks, degree, threads);
	size_t failed = 0, skipped = 0;
	for (const auto& r : reports) {
		if (r.status == "fail") ++failed;
		if (r.status == "skipped-resource") ++skipped;
	}
	if (format == "json") {
		std::cout << check_reports_json(reports) << "\n";
	} else {
		for (const auto& r : reports) {
			std::cout << r.check << ": " << r.status << " (" << r.presentation << ", D=" << r.D
			          << ", H=" << r.H << ", " << r.millis << "ms)\n";
			for (const auto& [what, poly] : r.witnesses)
				std::cout << "    " << what << ": " << poly.render() << "\n";
		}
		if (failed)
			std::cout << failed << " of " << reports.size() << " checks failed\n";
		else if (skipped)
			std::cout << skipped << " of " << reports.size()
			          << " checks skipped on resource limits\n";
		else
			std::cout << "all " << reports.size() << " checks passed\n";
	}
	if (failed) return EXIT_FAIL;
	if (skipped) return EXIT_RESOURCE;
	return EXIT_PASS;
}

}  // namespace

int main(int argc, char** argv) {
	CLI::App app{"exact truncated quotients of the alternating central extension "
	             "of the q-Onsager algebra"};
	app.require_subcommand(1);

	QuotientArgs norm_qa, eq_qa, dims_qa;
	std::string norm_expr, eq_lhs, eq_rhs, elem_name;
	std::string norm_fmt = "text", eq_fmt = "text", dims_fmt = "text", elem_fmt = "text",
	            ver_fmt = "text";
	std::vector<std::string> ver_checks;
	int ver_degree = 0, ver_threads = 1;

	CLI::App* norm = app.add_subcommand("normalize", "canonical normal form of an expression");
	norm->add_option("expr", norm_expr, "expression to normalize")->required();
	norm_qa.attach(norm);
	attach_format(norm, norm_fmt);

	CLI::App* eq = app.add_subcommand("equal", "decide equality modulo the defining relations");
	eq->add_option("left", eq_lhs, "left expression")->required();
	eq->add_option("right", eq_rhs, "right expression")->required();
	eq_qa.attach(eq);
	attach_format(eq, eq_fmt);

	CLI::App* dims = app.add_subcommand("dims", "cumulative dimension table of the quotient");
	dims_qa.attach(dims);
	attach_format(dims, dims_fmt);

	CLI::App* elem = app.add_subcommand("element", "print a derived element from the catalog");
	elem->add_option("name", elem_name,
	                 "W[n], G[k], Gt[k], B[a0|a1,n], tB[a0|a1,n], Bd[n(,a0|a1)], "
	                 "tBd[n(,a0|a1)], Wsum[variant,n]")
	    ->required();
	attach_format(elem, elem_fmt);

	CLI::App* ver = app.add_subcommand("verify", "run the certification checks");
	ver->add_option("--checks", ver_checks, "subset of checks (default: all)")
	    ->delimiter(',');
	ver->add_option("--degree,-d", ver_degree,
	                "degree bound for every check (default: per-check defaults)");
	ver->add_option("--threads", ver_threads, "number of worker threads")
	    ->envname("QONS_THREADS");
	attach_format(ver, ver_fmt);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		int code = app.exit(e);
		return code == 0 ? EXIT_PASS : EXIT_USAGE;
	}

	try {
		if (norm->parsed()) return cmd_normalize(norm_qa, norm_expr, norm_fmt);
		if (eq->parsed()) return cmd_equal(eq_qa, eq_lhs, eq_rhs, eq_fmt);
		if (dims->parsed()) return cmd_dims(dims_qa, dims_fmt);
		if (elem->parsed()) return cmd_element(elem_name, elem_fmt);
		if (ver->parsed()) return cmd_verify(ver_checks, ver_degree, ver_threads, ver_fmt);
	} catch (const UsageError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return EXIT_USAGE;
	} catch (const ResourceError& e) {
		std::cerr << "resource limit: " << e.what() << "\n";
		return EXIT_RESOURCE;
	} catch (const std::exception& e) {
		std::cerr << "error: " << e.what() << "\n";
		return EXIT_FAIL;
	}
	return EXIT_USAGE;
}
