// Command-line front-end: expansions, verification suites, Hermite and gamma
// tables. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ncbinom/binomial.hpp"
#include "ncbinom/diffop.hpp"
#include "ncbinom/rewrite.hpp"
#include "ncbinom/verify.hpp"

using namespace ncbinom;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

RelationSystem load_relation(std::string const &source)
{
	if (auto family = parse_family(source))
		return make_family(*family);
	std::ifstream in(source);
	if (!in)
		throw UsageError("relation '" + source + "' is neither a family (commutative, hsq, weyl) nor a readable file");
	nlohmann::json j;
	try
	{
		in >> j;
		RelationSystem sys = RelationSystem::from_json(j, source);
		auto report = sys.validate();
		if (!report.ok)
		{
			std::string msg = "relation system '" + source + "' is not admissible:";
			for (auto const &v : report.violations)
				msg += "\n  " + v;
			throw UsageError(msg);
		}
		for (auto const &w : report.warnings)
			std::cerr << "warning: " << w << "\n";
		return sys;
	}
	catch (nlohmann::json::exception const &e)
	{
		throw UsageError("cannot read relation file '" + source + "': " + e.what());
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError("cannot read relation file '" + source + "': " + e.what());
	}
}

int cmd_expand(unsigned n, std::string const &method_name, std::string const &relation, std::string const &format)
{
	auto method = parse_method(method_name);
	if (!method)
		throw UsageError("unknown method '" + method_name + "'");
	std::optional<RelationSystem> sys;
	if (!relation.empty())
		sys = load_relation(relation);

	ExpansionReport report;
	try
	{
		report = expand(n, *method, sys);
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}

	if (format == "json")
		std::cout << report.to_json().dump() << "\n";
	else
	{
		std::string body = *method == Method::closed_weyl ? "M-basis: " + weyl_m_basis_string(n) : report.result.to_string();
		std::cout << body << " | oracle_match: " << (report.oracle_match ? "true" : "false") << "\n";
	}
	return report.oracle_match ? exit_ok : exit_failure;
}

int cmd_verify(std::string const &suite, unsigned max_n, std::uint64_t seed)
{
	SuiteReport report;
	try
	{
		report = run_suite(suite, max_n, seed);
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}
	std::cout << report.to_text();
	return report.passed() ? exit_ok : exit_failure;
}

int cmd_hermite(unsigned n, std::string const &format)
{
	int status = exit_ok;
	for (unsigned m = 0; m <= n; ++m)
	{
		Poly1 const op = hermite_he(m, HermiteRoute::operator_power);
		bool const agree =
		    op == hermite_he(m, HermiteRoute::explicit_sum) && op == hermite_he(m, HermiteRoute::recurrence);
		if (!agree)
		{
			std::cerr << "error: Hermite routes disagree at n = " << m << "\n";
			status = exit_failure;
		}
		if (format == "json")
			std::cout << op.to_json().dump() << "\n";
		else
			std::cout << "He_" << m << "(x) = " << op.to_string() << "\n";
	}
	return status;
}

int cmd_gamma(unsigned n, std::string const &format)
{
	for (unsigned m = 0; m <= n; ++m)
	{
		ParamPoly const g = gamma(m).value;
		std::string const at0 = g.eval({{"h", Rational(0)}}).to_string();
		std::string const at1 = g.eval({{"h", Rational(1)}}).to_string();
		if (format == "json")
		{
			nlohmann::ordered_json j;
			j["n"] = m;
			j["gamma"] = g.to_string();
			j["at_h0"] = at0;
			j["at_h1"] = at1;
			std::cout << j.dump() << "\n";
		}
		else
			std::cout << "gamma_" << m << "(h) = " << g.to_string() << " | h=0: " << at0 << " | h=1: " << at1 << "\n";
	}
	return exit_ok;
}

int cmd_exp_check(unsigned order)
{
	int status = exit_ok;
	for (auto [which, name] : {std::pair{ExpIdentity::corollary2, "corollary2"}, {ExpIdentity::corollary3, "corollary3"}})
	{
		NCPoly const defect = exp_identity_defect(which, order);
		bool const ok = defect.is_zero();
		std::cout << (ok ? "PASS " : "FAIL ") << name << " through degree " << order;
		if (!ok)
		{
			std::cout << ": defect " << defect.to_json().dump();
			status = exit_failure;
		}
		std::cout << "\n";
	}
	return status;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"Exact non-commutative binomial expansions"};
	app.require_subcommand(1);

	unsigned n = 0;
	std::string method = "theorem1";
	std::string relation;
	std::string format = "text";
	auto *expand_cmd = app.add_subcommand("expand", "Expand (A+B)^n and compare with the brute-force power");
	expand_cmd->add_option("--n", n, "Expansion order")->required();
	expand_cmd->add_option("--method", method, "brute|theorem1|corollary1|theorem2|closed_hsq|closed_weyl")
	    ->capture_default_str();
	expand_cmd->add_option("--relation", relation, "commutative|hsq|weyl or a relation-system JSON file");
	expand_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

	std::string suite = "all";
	unsigned max_n = 8;
	std::uint64_t seed = 0;
	auto *verify_cmd = app.add_subcommand("verify", "Run identity and property suites");
	verify_cmd->add_option("--suite", suite)
	    ->check(CLI::IsMember(suite_names()))
	    ->capture_default_str();
	verify_cmd->add_option("--max-n", max_n)->capture_default_str();
	verify_cmd->add_option("--seed", seed)->capture_default_str();

	auto *hermite_cmd = app.add_subcommand("hermite", "Print He_0 .. He_n");
	hermite_cmd->add_option("--n", n)->required();
	hermite_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

	auto *gamma_cmd = app.add_subcommand("gamma", "Print gamma_0(h) .. gamma_n(h) with h=0 and h=1 values");
	gamma_cmd->add_option("--n", n)->required();
	gamma_cmd->add_option("--format", format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

	unsigned order = 6;
	auto *exp_cmd = app.add_subcommand("exp-check", "Check truncated exponential identities");
	exp_cmd->add_option("--order", order)->capture_default_str();

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int code = app.exit(e);
		return code == 0 ? exit_ok : exit_usage;
	}

	try
	{
		if (*expand_cmd)
			return cmd_expand(n, method, relation, format);
		if (*verify_cmd)
			return cmd_verify(suite, max_n, seed);
		if (*hermite_cmd)
			return cmd_hermite(n, format);
		if (*gamma_cmd)
			return cmd_gamma(n, format);
		if (*exp_cmd)
			return cmd_exp_check(order);
	}
	catch (UsageError const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return exit_usage;
	}
	catch (std::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return exit_failure;
	}
	return exit_usage;
}
