#include "ncbinom/binomial.hpp"

#include <stdexcept>
#include <vector>

namespace ncbinom {

std::string to_string(Method m)
{
	switch (m)
	{
	case Method::brute:
		return "brute";
	case Method::theorem1:
		return "theorem1";
	case Method::corollary1:
		return "corollary1";
	case Method::theorem2:
		return "theorem2";
	case Method::closed_hsq:
		return "closed_hsq";
	case Method::closed_weyl:
		return "closed_weyl";
	}
	return "?";
}

std::optional<Method> parse_method(std::string_view name)
{
	for (Method m : {Method::brute, Method::theorem1, Method::corollary1, Method::theorem2, Method::closed_hsq,
	                 Method::closed_weyl})
		if (to_string(m) == name)
			return m;
	return std::nullopt;
}

namespace {

NCPoly gen_power(Alphabet const &alpha, std::string_view name, unsigned k, ParamPoly coeff = ParamPoly(1))
{
	return NCPoly::monomial(alpha, Word(k, alpha.index_of(name)), std::move(coeff));
}

NCPoly a_plus_b(Alphabet const &alpha) { return NCPoly::gen(alpha, "A") + NCPoly::gen(alpha, "B"); }

// (1/k!) * x
NCPoly over_factorial(NCPoly const &x, unsigned k) { return x.scale(ParamPoly(Rational(1, factorial(k).numerator()))); }

} // namespace

NCPoly m_n(Alphabet const &alpha, unsigned n)
{
	NCPoly r(alpha);
	for (unsigned k = 0; k <= n; ++k)
		r += gen_power(alpha, "A", k) * gen_power(alpha, "B", n - k, binom_coeff(n, k));
	return r;
}

NCPoly brute_expand(Alphabet const &alpha, unsigned n) { return nc_pow(a_plus_b(alpha), n); }

NCPoly theorem1_expand(Alphabet const &alpha, unsigned n)
{
	NCPoly const a = NCPoly::gen(alpha, "A");
	NCPoly const b = NCPoly::gen(alpha, "B");
	NCPoly r(alpha);
	NCPoly x = NCPoly::one(alpha); // {(A + d_B)^k 1}
	for (unsigned k = 0; k <= n; ++k)
	{
		r += (x * gen_power(alpha, "B", n - k)).scale(binom_coeff(n, k));
		x = a * x + nc_derivation(b, x);
	}
	return r;
}

NCPoly essential_d(Alphabet const &alpha, unsigned k, DRoute via)
{
	NCPoly const a = NCPoly::gen(alpha, "A");
	NCPoly const b = NCPoly::gen(alpha, "B");
	if (via == DRoute::difference)
		return nc_a_plus_db_pow_one(a, b, k) - gen_power(alpha, "A", k);

	NCPoly d(alpha);
	for (unsigned j = 0; j < k; ++j)
		d = nc_derivation(b, gen_power(alpha, "A", j)) + a * d + nc_derivation(b, d);
	return d;
}

NCPoly corollary1_expand(Alphabet const &alpha, unsigned n)
{
	NCPoly const a = NCPoly::gen(alpha, "A");
	NCPoly const b = NCPoly::gen(alpha, "B");
	NCPoly r = m_n(alpha, n);
	NCPoly d(alpha); // D_k via the recurrence
	for (unsigned k = 0; k <= n; ++k)
	{
		r += (d * gen_power(alpha, "B", n - k)).scale(binom_coeff(n, k));
		d = nc_derivation(b, gen_power(alpha, "A", k)) + a * d + nc_derivation(b, d);
	}
	return r;
}

NCPoly theorem2_expand(Alphabet const &alpha, unsigned n)
{
	NCPoly const b = NCPoly::gen(alpha, "B");
	NCPoly const s = a_plus_b(alpha);
	NCPoly r = m_n(alpha, n);
	NCPoly s_pow = NCPoly::one(alpha);
	for (unsigned k = 0; k + 2 <= n; ++k)
	{
		r += s_pow * nc_derivation(b, m_n(alpha, n - 1 - k));
		s_pow = s_pow * s;
	}
	return r;
}

NCPoly lemma3_defect(Alphabet const &alpha, unsigned n)
{
	NCPoly const b = NCPoly::gen(alpha, "B");
	NCPoly const mn = m_n(alpha, n);
	return m_n(alpha, 1) * mn - m_n(alpha, n + 1) - nc_derivation(b, mn);
}

NCPoly lemma4_defect(Alphabet const &alpha, unsigned n)
{
	NCPoly const b = NCPoly::gen(alpha, "B");
	NCPoly const m1 = m_n(alpha, 1);
	NCPoly r = nc_pow(m1, n) - m_n(alpha, n);
	for (unsigned k = 0; k + 2 <= n; ++k)
		r -= nc_pow(m1, k) * nc_derivation(b, m_n(alpha, n - 1 - k));
	return r;
}

GammaFactor gamma(unsigned n)
{
	ParamPoly g(1);
	for (unsigned k = 1; k < n; ++k)
		g *= ParamPoly(1) + ParamPoly::var("h").scale(Rational(static_cast<long>(k)));
	return {n, g};
}

NCPoly closed_form_hsq(Alphabet const &alpha, unsigned n)
{
	NCPoly r(alpha);
	for (unsigned k = 0; k <= n; ++k)
	{
		ParamPoly c = gamma(k).value.scale(binom_coeff(n, k));
		r += gen_power(alpha, "A", k, c) * gen_power(alpha, "B", n - k);
	}
	return r;
}

WeylCoeff weyl_coeff(Alphabet const &alpha, unsigned n, unsigned k, WeylRoute via)
{
	if (k > n / 2)
		throw std::out_of_range("weyl_coeff: k = " + std::to_string(k) + " exceeds floor(n/2) for n = " +
		                        std::to_string(n));
	if (via == WeylRoute::closed)
	{
		mpz_class den = factorial(n - 2 * k).numerator() * factorial(k).numerator();
		den <<= k;
		return {n, k, gen_power(alpha, "C", k, Rational(factorial(n).numerator(), den))};
	}

	// row[j] = A_{m,j}; A_{m,j} = 0 for j > floor(m/2).
	NCPoly const c = NCPoly::gen(alpha, "C");
	std::vector<NCPoly> row{NCPoly::one(alpha)};
	for (unsigned m = 0; m < n; ++m)
	{
		std::vector<NCPoly> next;
		for (unsigned j = 0; j <= (m + 1) / 2; ++j)
		{
			NCPoly v = j < row.size() ? row[j] : NCPoly(alpha);
			if (j >= 1)
				v += (c * row[j - 1]).scale(Rational(static_cast<long>(m + 2) - 2 * static_cast<long>(j)));
			next.push_back(std::move(v));
		}
		row = std::move(next);
	}
	return {n, k, row[k]};
}

NCPoly closed_form_weyl(Alphabet const &alpha, unsigned n)
{
	NCPoly r(alpha);
	for (unsigned k = 0; k <= n / 2; ++k)
		r += m_n(alpha, n - 2 * k) * weyl_coeff(alpha, n, k, WeylRoute::closed).value;
	return r;
}

std::string weyl_m_basis_string(unsigned n)
{
	std::string r;
	for (unsigned k = 0; k <= n / 2; ++k)
	{
		mpz_class den = factorial(n - 2 * k).numerator() * factorial(k).numerator();
		den <<= k;
		Rational coeff(factorial(n).numerator(), den);
		std::vector<std::string> factors;
		if (!coeff.is_one())
			factors.push_back(coeff.to_string());
		if (k == 1)
			factors.push_back("C");
		else if (k > 1)
			factors.push_back("C^" + std::to_string(k));
		if (n - 2 * k > 0)
			factors.push_back("M_" + std::to_string(n - 2 * k));
		if (!r.empty())
			r += " + ";
		if (factors.empty())
			r += "1";
		for (size_t i = 0; i < factors.size(); ++i)
			r += (i ? "*" : "") + factors[i];
	}
	return r;
}

NCPoly exp_identity_defect(ExpIdentity which, unsigned order)
{
	Alphabet const &ab = ab_alphabet();
	NCPoly const a = NCPoly::gen(ab, "A");
	NCPoly const b = NCPoly::gen(ab, "B");

	// Series terms are homogeneous: (A+B)^n, (A+d_B)^k 1, D_k and B^m all
	// have degree equal to their index.
	NCPoly lhs(ab), exp_b(ab);
	for (unsigned n = 0; n <= order; ++n)
	{
		lhs += over_factorial(brute_expand(ab, n), n);
		exp_b += over_factorial(gen_power(ab, "B", n), n);
	}

	NCPoly rhs(ab);
	if (which == ExpIdentity::corollary2)
	{
		NCPoly left(ab);
		for (unsigned k = 0; k <= order; ++k)
			left += over_factorial(nc_a_plus_db_pow_one(a, b, k), k);
		rhs = left * exp_b;
	}
	else
	{
		NCPoly exp_a(ab), d_sum(ab);
		for (unsigned k = 0; k <= order; ++k)
			exp_a += over_factorial(gen_power(ab, "A", k), k);
		for (unsigned k = 2; k <= order; ++k)
			d_sum += over_factorial(essential_d(ab, k, DRoute::recurrence), k);
		rhs = exp_a * exp_b + d_sum * exp_b;
	}
	return (lhs - rhs).truncate(order);
}

nlohmann::ordered_json ExpansionReport::to_json() const
{
	nlohmann::ordered_json j;
	j["n"] = n;
	j["method"] = ncbinom::to_string(method);
	j["relation"] = relation;
	j["oracle_match"] = oracle_match;
	j["result"] = result.to_json();
	return j;
}

ExpansionReport expand(unsigned n, Method method, std::optional<RelationSystem> const &relation)
{
	std::optional<RelationSystem> sys = relation;
	auto require = [&](Family family) {
		if (!sys)
			sys = make_family(family);
		else if (!sys->builtin() || sys->name() != to_string(family))
			throw std::invalid_argument("method " + to_string(method) + " requires the " + to_string(family) +
			                            " relation, got '" + sys->name() + "'");
	};
	if (method == Method::closed_hsq)
		require(Family::hsq);
	if (method == Method::closed_weyl)
		require(Family::weyl);

	Alphabet const alpha = sys ? sys->alphabet() : ab_alphabet();
	if (!alpha.contains("A") || !alpha.contains("B"))
		throw std::invalid_argument("relation alphabet must contain generators A and B");

	ExpansionReport report{n, method, NCPoly(alpha), sys ? sys->name() : std::string(), false};
	switch (method)
	{
	case Method::brute:
		report.result = brute_expand(alpha, n);
		break;
	case Method::theorem1:
		report.result = theorem1_expand(alpha, n);
		break;
	case Method::corollary1:
		report.result = corollary1_expand(alpha, n);
		break;
	case Method::theorem2:
		report.result = theorem2_expand(alpha, n);
		break;
	case Method::closed_hsq:
		report.result = closed_form_hsq(alpha, n);
		break;
	case Method::closed_weyl:
		report.result = closed_form_weyl(alpha, n);
		break;
	}

	NCPoly const oracle = brute_expand(alpha, n);
	report.oracle_match = sys ? sys->quotient_eq(report.result, oracle) : report.result == oracle;
	return report;
}

} // namespace ncbinom
