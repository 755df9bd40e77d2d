#include "ncbinom/verify.hpp"

#include <functional>
#include <optional>
#include <stdexcept>

#include "ncbinom/binomial.hpp"
#include "ncbinom/rewrite.hpp"

namespace ncbinom {

NCPoly random_ncpoly(Rng &rng, Alphabet const &alpha, unsigned max_degree, unsigned max_terms, bool with_params)
{
	NCPoly p(alpha);
	unsigned const terms = 1 + static_cast<unsigned>(rng.below(max_terms));
	for (unsigned t = 0; t < terms; ++t)
	{
		Word w(rng.below(max_degree + 1));
		for (auto &l : w)
			l = static_cast<Letter>(rng.below(alpha.size()));
		long c = rng.between(1, 3) * (rng.below(2) ? 1 : -1);
		ParamPoly coeff(c);
		if (with_params)
			switch (rng.below(3))
			{
			case 1:
				coeff *= ParamPoly::var("h");
				break;
			case 2:
				coeff *= ParamPoly(1) + ParamPoly::var("h");
				break;
			default:
				break;
			}
		p.add_term(w, coeff);
	}
	return p;
}

DiffOp random_diffop(Rng &rng, unsigned max_terms, unsigned max_power)
{
	DiffOp op;
	unsigned const terms = 1 + static_cast<unsigned>(rng.below(max_terms));
	for (unsigned t = 0; t < terms; ++t)
	{
		ParamPoly c(rng.between(-3, 3));
		if (rng.below(3) == 0)
			c *= ParamPoly::var("lambda");
		op.add_term(static_cast<unsigned>(rng.below(max_power + 1)), static_cast<unsigned>(rng.below(max_power + 1)),
		            c);
	}
	return op;
}

Poly1 random_poly1(Rng &rng, unsigned max_degree)
{
	Poly1 p;
	for (unsigned d = 0; d <= max_degree; ++d)
		if (rng.below(2))
			p.add_term(d, ParamPoly(rng.between(-4, 4)));
	return p;
}

bool SuiteReport::passed() const
{
	for (auto const &c : checks)
		if (!c.passed)
			return false;
	return true;
}

std::string SuiteReport::to_text() const
{
	std::string out;
	CheckResult const *first_failure = nullptr;
	size_t passed_count = 0;
	for (auto const &c : checks)
	{
		out += (c.passed ? "PASS " : "FAIL ") + c.name + "\n";
		if (c.passed)
			++passed_count;
		else if (!first_failure)
			first_failure = &c;
	}
	if (first_failure)
		out += "counterexample (" + first_failure->name + "): " + first_failure->counterexample + "\n";
	out += std::to_string(passed_count) + "/" + std::to_string(checks.size()) + " checks passed\n";
	return out;
}

std::vector<std::string> const &suite_names()
{
	static std::vector<std::string> const names{"statements", "theorem1", "theorem2", "hsq",
	                                            "weyl",       "exp",      "hermite",  "all"};
	return names;
}

namespace {

class Checker
{
  public:
	Checker(SuiteReport &report, std::string prefix) : report_(report), prefix_(std::move(prefix)) {}

	// `body` returns the offending value's JSON, or nullopt when the case holds.
	void run(std::string const &name, unsigned cases, std::function<std::optional<std::string>(unsigned)> const &body)
	{
		CheckResult r{prefix_ + "/" + name, true, {}};
		for (unsigned i = 0; i < cases; ++i)
			if (auto bad = body(i))
			{
				r.passed = false;
				r.counterexample = std::move(*bad);
				break;
			}
		report_.checks.push_back(std::move(r));
	}

  private:
	SuiteReport &report_;
	std::string prefix_;
};

std::optional<std::string> zero_or(NCPoly const &defect)
{
	if (defect.is_zero())
		return std::nullopt;
	return defect.to_json().dump();
}

std::optional<std::string> equal_or(NCPoly const &got, NCPoly const &want) { return zero_or(got - want); }

std::optional<std::string> equal_or(Poly1 const &got, Poly1 const &want)
{
	if (got == want)
		return std::nullopt;
	return (got - want).to_json().dump();
}

NCPoly gen_power(Alphabet const &alpha, std::string_view name, unsigned k, ParamPoly coeff = ParamPoly(1))
{
	return NCPoly::monomial(alpha, Word(k, alpha.index_of(name)), std::move(coeff));
}

void rewrite_robustness(Checker &check, RelationSystem const &sys, Rng &rng, unsigned cases)
{
	Alphabet const &alpha = sys.alphabet();
	check.run("strategies agree", cases, [&](unsigned) {
		NCPoly p = random_ncpoly(rng, alpha, 6, 4, true);
		NCPoly left = sys.normal_form(p, Strategy::leftmost);
		NCPoly right = sys.normal_form(p, Strategy::rightmost);
		return left == right ? std::nullopt : std::optional(p.to_json().dump());
	});
	check.run("normal form idempotent and ordered", cases, [&](unsigned) -> std::optional<std::string> {
		NCPoly p = random_ncpoly(rng, alpha, 6, 4, true);
		NCPoly nf = sys.normal_form(p);
		for (auto const &[w, c] : nf.terms())
			if (!std::is_sorted(w.begin(), w.end()))
				return p.to_json().dump();
		return sys.normal_form(nf) == nf ? std::nullopt : std::optional(p.to_json().dump());
	});
	check.run("congruence", cases, [&](unsigned) {
		NCPoly p = random_ncpoly(rng, alpha, 3, 3, true);
		NCPoly q = random_ncpoly(rng, alpha, 3, 3, true);
		return equal_or(sys.normal_form(p * q), sys.normal_form(sys.normal_form(p) * sys.normal_form(q)));
	});
}

void suite_statements(SuiteReport &report, Rng &rng, unsigned cases)
{
	Checker check(report, "statements");
	Alphabet const abc({{"A", false}, {"B", false}, {"C", false}});
	auto rand = [&] { return random_ncpoly(rng, abc, 3, 4, true); };

	check.run("left multiplication commutes with d_A", cases, [&](unsigned) {
		NCPoly a = rand(), x = rand();
		return equal_or(a * nc_derivation(a, x), nc_derivation(a, a * x));
	});
	check.run("d_A is a derivation", cases, [&](unsigned) {
		NCPoly a = rand(), x = rand(), y = rand();
		return equal_or(nc_derivation(a, x * y), nc_derivation(a, x) * y + x * nc_derivation(a, y));
	});
	check.run("(A - d_A)X = XA", cases, [&](unsigned) {
		NCPoly a = rand(), x = rand();
		return equal_or(a * x - nc_derivation(a, x), x * a);
	});
	check.run("jacobi identity", cases, [&](unsigned) {
		NCPoly a = rand(), b = rand(), c = rand();
		return zero_or(nc_derivation(a, nc_derivation(b, c)) + nc_derivation(b, nc_derivation(c, a)) +
		               nc_derivation(c, nc_derivation(a, b)));
	});
	check.run("multiplication associative", cases, [&](unsigned) {
		NCPoly a = rand(), b = rand(), c = rand();
		return equal_or((a * b) * c, a * (b * c));
	});
}

void suite_theorem1(SuiteReport &report, unsigned max_n, Rng &rng, unsigned cases)
{
	Checker check(report, "theorem1");
	Alphabet const &ab = ab_alphabet();
	check.run("theorem1 = (A+B)^n", max_n + 1,
	          [&](unsigned n) { return equal_or(theorem1_expand(ab, n), brute_expand(ab, n)); });
	check.run("D_k recurrence = difference", max_n + 1, [&](unsigned k) {
		return equal_or(essential_d(ab, k, DRoute::recurrence), essential_d(ab, k, DRoute::difference));
	});
	check.run("corollary1 = (A+B)^n", max_n + 1,
	          [&](unsigned n) { return equal_or(corollary1_expand(ab, n), brute_expand(ab, n)); });

	Checker comm(report, "commutative");
	RelationSystem const sys = make_family(Family::commutative);
	comm.run("D_k vanishes", max_n + 1,
	         [&](unsigned k) { return zero_or(sys.normal_form(essential_d(ab, k, DRoute::recurrence))); });
	comm.run("M_n = (A+B)^n", max_n + 1,
	         [&](unsigned n) { return equal_or(sys.normal_form(brute_expand(ab, n)), m_n(ab, n)); });
	rewrite_robustness(comm, sys, rng, cases);
}

void suite_theorem2(SuiteReport &report, unsigned max_n)
{
	Checker check(report, "theorem2");
	Alphabet const &ab = ab_alphabet();
	check.run("theorem2 = (A+B)^n", max_n + 1,
	          [&](unsigned n) { return equal_or(theorem2_expand(ab, n), brute_expand(ab, n)); });
	check.run("lemma3 defect vanishes", max_n + 1, [&](unsigned n) { return zero_or(lemma3_defect(ab, n)); });
	check.run("lemma4 defect vanishes", max_n + 1, [&](unsigned n) { return zero_or(lemma4_defect(ab, n)); });
}

void suite_hsq(SuiteReport &report, unsigned max_n, Rng &rng, unsigned cases)
{
	Checker check(report, "hsq");
	Alphabet const &ab = ab_alphabet();
	RelationSystem const sys = make_family(Family::hsq);

	check.run("closed form = (A+B)^n", max_n + 1, [&](unsigned n) {
		return equal_or(sys.normal_form(closed_form_hsq(ab, n)), sys.normal_form(brute_expand(ab, n)));
	});
	check.run("coefficients are C(n,k) gamma_k", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		NCPoly const nf = sys.normal_form(brute_expand(ab, n));
		NCPoly expected(ab);
		for (unsigned k = 0; k <= n; ++k)
			expected += gen_power(ab, "A", k, gamma(k).value.scale(binom_coeff(n, k))) * gen_power(ab, "B", n - k);
		return equal_or(nf, expected);
	});
	check.run("h = 1 coefficients are n!/(n-k)!", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		NCPoly const nf = sys.normal_form(brute_expand(ab, n));
		NCPoly bound(ab), expected(ab);
		for (auto const &[w, c] : nf.terms())
			bound.add_term(w, ParamPoly(c.eval({{"h", Rational(1)}})));
		for (unsigned k = 0; k <= n; ++k)
			expected += gen_power(ab, "A", k, Rational(factorial(n).numerator(), factorial(n - k).numerator())) *
			            gen_power(ab, "B", n - k);
		return equal_or(bound, expected);
	});
	check.run("gamma_n(0) = 1 and gamma_n(1) = n!", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		ParamPoly const g = gamma(n).value;
		if (g.eval({{"h", Rational(0)}}) == Rational(1) && g.eval({{"h", Rational(1)}}) == factorial(n))
			return std::nullopt;
		return "\"" + g.to_string() + "\"";
	});
	check.run("D_k = (gamma_k - 1) A^k", max_n + 1, [&](unsigned k) {
		return equal_or(sys.normal_form(essential_d(ab, k, DRoute::recurrence)),
		                gen_power(ab, "A", k, gamma(k).value - ParamPoly(1)));
	});
	check.run("d_B A^k = k h A^(k+1)", max_n, [&](unsigned i) {
		unsigned k = i + 1;
		return equal_or(sys.normal_form(nc_derivation(NCPoly::gen(ab, "B"), gen_power(ab, "A", k))),
		                gen_power(ab, "A", k + 1, ParamPoly::var("h").scale(Rational(static_cast<long>(k)))));
	});
	rewrite_robustness(check, sys, rng, cases);
}

void suite_weyl(SuiteReport &report, unsigned max_n, Rng &rng, unsigned cases)
{
	Checker check(report, "weyl");
	RelationSystem const sys = make_family(Family::weyl);
	Alphabet const &cab = sys.alphabet();
	NCPoly const b = NCPoly::gen(cab, "B");
	NCPoly const c = NCPoly::gen(cab, "C");

	check.run("closed form = (A+B)^n", max_n + 1, [&](unsigned n) {
		return equal_or(sys.normal_form(closed_form_weyl(cab, n)), sys.normal_form(brute_expand(cab, n)));
	});
	check.run("A_{n,k} recurrence = closed form", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		for (unsigned k = 0; k <= n / 2; ++k)
		{
			auto rec = weyl_coeff(cab, n, k, WeylRoute::recurrence).value;
			auto closed = weyl_coeff(cab, n, k, WeylRoute::closed).value;
			if (rec != closed)
				return (rec - closed).to_json().dump();
		}
		return std::nullopt;
	});
	check.run("d_B M_n = n C M_(n-1)", max_n + 1, [&](unsigned n) {
		NCPoly expected = n == 0 ? NCPoly(cab) : (c * m_n(cab, n - 1)).scale(Rational(static_cast<long>(n)));
		return equal_or(sys.normal_form(nc_derivation(b, m_n(cab, n))), sys.normal_form(expected));
	});
	check.run("d_B A^k = k C A^(k-1)", max_n, [&](unsigned i) {
		unsigned k = i + 1;
		return equal_or(sys.normal_form(nc_derivation(b, gen_power(cab, "A", k))),
		                (c * gen_power(cab, "A", k - 1)).scale(Rational(static_cast<long>(k))));
	});
	check.run("C is central", cases, [&](unsigned) {
		NCPoly x = random_ncpoly(rng, cab, 5, 4, true);
		return zero_or(sys.normal_form(nc_derivation(c, x)));
	});
	check.run("realization A=x, B=lambda*D, C=lambda", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		DiffOp const lambda = DiffOp::scalar(ParamPoly::var("lambda"));
		std::map<std::string, DiffOp> const images{{"A", DiffOp::x()}, {"B", DiffOp::d() * lambda}, {"C", lambda}};
		Poly1 const one = Poly1::constant(1);
		Poly1 const expected = lambda_expansion(n);
		if (auto bad = equal_or(op_apply(realize(sys.normal_form(closed_form_weyl(cab, n)), images), one), expected))
			return bad;
		return equal_or(op_apply(realize(brute_expand(cab, n), images), one), expected);
	});
	rewrite_robustness(check, sys, rng, cases);
}

void suite_exp(SuiteReport &report, unsigned max_n)
{
	Checker check(report, "exp");
	check.run("corollary2 truncations vanish", max_n + 1,
	          [&](unsigned order) { return zero_or(exp_identity_defect(ExpIdentity::corollary2, order)); });
	check.run("corollary3 truncations vanish", max_n + 1,
	          [&](unsigned order) { return zero_or(exp_identity_defect(ExpIdentity::corollary3, order)); });
}

void suite_hermite(SuiteReport &report, unsigned max_n, Rng &rng, unsigned cases)
{
	Checker check(report, "hermite");
	check.run("operator = explicit sum = recurrence", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		Poly1 const oracle = hermite_he(n, HermiteRoute::recurrence);
		if (auto bad = equal_or(hermite_he(n, HermiteRoute::operator_power), oracle))
			return bad;
		return equal_or(hermite_he(n, HermiteRoute::explicit_sum), oracle);
	});
	check.run("lambda = -1 gives He_n", max_n + 1, [&](unsigned n) {
		return equal_or(lambda_expansion(n).bind({{"lambda", Rational(-1)}}), hermite_he(n, HermiteRoute::recurrence));
	});
	DiffOp const lambda_d = DiffOp::d().scale(ParamPoly::var("lambda"));
	check.run("M_n 1 = x^n", max_n + 1, [&](unsigned n) {
		DiffOp mn;
		for (unsigned r = 0; r <= n; ++r)
			mn += (op_pow(DiffOp::x(), r) * op_pow(lambda_d, n - r)).scale(binom_coeff(n, r));
		return equal_or(op_apply(mn, Poly1::constant(1)), Poly1::monomial(n));
	});
	check.run("(x + lambda*D)^n 1 = lambda expansion", max_n + 1, [&](unsigned n) {
		return equal_or(op_apply(op_pow(DiffOp::x() + lambda_d, n), Poly1::constant(1)), lambda_expansion(n));
	});
	check.run("x, x^2*D realization of the h = 1 expansion", max_n + 1, [&](unsigned n) -> std::optional<std::string> {
		for (unsigned seed = 0; seed <= 3; ++seed)
			if (!x2d_check(n, seed))
				return Poly1::monomial(seed).to_json().dump();
		return std::nullopt;
	});
	check.run("composition matches successive application", cases, [&](unsigned) {
		DiffOp f = random_diffop(rng, 5, 4), g = random_diffop(rng, 5, 4);
		Poly1 p = random_poly1(rng, 6);
		return equal_or(op_apply(op_compose(f, g), p), op_apply(f, op_apply(g, p)));
	});
}

} // namespace

SuiteReport run_suite(std::string_view suite, unsigned max_n, std::uint64_t seed, unsigned random_cases)
{
	bool const all = suite == "all";
	bool known = false;
	for (auto const &name : suite_names())
		known = known || name == suite;
	if (!known)
		throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");

	SuiteReport report;
	Rng rng(seed);
	if (all || suite == "statements")
		suite_statements(report, rng, random_cases);
	if (all || suite == "theorem1")
		suite_theorem1(report, max_n, rng, random_cases);
	if (all || suite == "theorem2")
		suite_theorem2(report, max_n);
	if (all || suite == "hsq")
		suite_hsq(report, max_n, rng, random_cases);
	if (all || suite == "weyl")
		suite_weyl(report, max_n, rng, random_cases);
	if (all || suite == "exp")
		suite_exp(report, max_n);
	if (all || suite == "hermite")
		suite_hermite(report, max_n, rng, random_cases);
	return report;
}

} // namespace ncbinom
