#include <doctest.h>

#include "ncbinom/scalars.hpp"
#include "ncbinom/verify.hpp"

using namespace ncbinom;

namespace {

ParamPoly random_param_poly(Rng &rng)
{
	static char const *const names[] = {"h", "lambda"};
	ParamPoly p;
	unsigned terms = static_cast<unsigned>(rng.below(4));
	for (unsigned t = 0; t < terms; ++t)
	{
		std::vector<Monomial::Entry> vars;
		unsigned budget = static_cast<unsigned>(rng.below(7));
		for (auto const *name : names)
		{
			unsigned e = static_cast<unsigned>(rng.below(budget + 1));
			budget -= e;
			vars.emplace_back(name, e);
		}
		p += ParamPoly::term(Rational(rng.between(-5, 5)) * Rational(1, rng.between(1, 3)),
		                     Monomial(std::move(vars)));
	}
	return p;
}

} // namespace

TEST_CASE("rational arithmetic")
{
	CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
	CHECK(Rational(2, 3) * Rational(3, 2) == Rational(1));
	CHECK(Rational(2, 4) == Rational(1, 2));
	CHECK(Rational(2, 4).to_string() == "1/2");
	CHECK(Rational(3, -6).to_string() == "-1/2");
	CHECK(Rational::parse("-10/4") == Rational(-5, 2));
	CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
	CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
}

TEST_CASE("factorials and binomials")
{
	CHECK(factorial(0) == Rational(1));
	CHECK(factorial(5) == Rational(120));
	CHECK(Rational(factorial(4).numerator(), factorial(2).numerator()) == Rational(12));
	CHECK(binom_coeff(5, 2) == Rational(10));
	for (unsigned n = 0; n < 10; ++n)
		CHECK(binom_coeff(n, 0) == Rational(1));
	CHECK(binom_coeff(2, 3) == Rational(0));

	for (unsigned n = 1; n <= 30; ++n)
		for (unsigned k = 1; k <= n; ++k)
			CHECK(binom_coeff(n, k) + binom_coeff(n, k - 1) == binom_coeff(n + 1, k));
}

TEST_CASE("param poly arithmetic")
{
	ParamPoly const h = ParamPoly::var("h");
	ParamPoly const p = (ParamPoly(1) + h) * (ParamPoly(1) + h.scale(Rational(2)));
	CHECK(p == ParamPoly(1) + h.scale(Rational(3)) + ParamPoly::var("h", 2).scale(Rational(2)));
	CHECK(p.to_string() == "1 + 3*h + 2*h^2");
	CHECK(p + ParamPoly() == p);
	CHECK((ParamPoly(1) + h).scale(Rational(2)).to_string() == "2 + 2*h");
	CHECK((h - h).is_zero());
	CHECK((h - h).to_string() == "0");

	CHECK((ParamPoly(1) + h.scale(Rational(2))).eval({{"h", Rational(1)}}) == Rational(3));
	CHECK(p.eval({{"h", Rational(0)}}) == Rational(1));
	CHECK(p.eval({{"h", Rational(1)}}) == Rational(6));
	CHECK_THROWS_WITH_AS(p.eval({{"lambda", Rational(1)}}), doctest::Contains("'h'"), std::invalid_argument);
}

TEST_CASE("param poly rendering order and parsing")
{
	ParamPoly const p = ParamPoly::parse("2*h^2 - lambda + 1/2*h*lambda + 3 - h");
	CHECK(p.to_string() == "3 - h - lambda + 1/2*h*lambda + 2*h^2");
	CHECK(ParamPoly::parse(p.to_string()) == p);
	CHECK(ParamPoly::parse("-1") == ParamPoly(-1));
	CHECK(ParamPoly::parse("0").is_zero());
	CHECK_THROWS_AS(ParamPoly::parse("2*+h"), std::invalid_argument);
	CHECK_THROWS_AS(ParamPoly::parse("h ^"), std::invalid_argument);
}

TEST_CASE("param poly ring axioms on random inputs")
{
	Rng rng(7);
	std::map<std::string, Rational> const at{{"h", Rational(3, 2)}, {"lambda", Rational(-2)}};
	for (int i = 0; i < 1000; ++i)
	{
		ParamPoly a = random_param_poly(rng), b = random_param_poly(rng), c = random_param_poly(rng);
		REQUIRE((a + b) + c == a + (b + c));
		REQUIRE((a * b) * c == a * (b * c));
		REQUIRE(a + b == b + a);
		REQUIRE(a * b == b * a);
		REQUIRE(a * (b + c) == a * b + a * c);
		REQUIRE((a * b).eval(at) == a.eval(at) * b.eval(at));
		REQUIRE((a + b).eval(at) == a.eval(at) + b.eval(at));
		REQUIRE(ParamPoly::parse(a.to_string()) == a);
		for (auto const &[m, coeff] : a.terms())
			REQUIRE(!coeff.is_zero());
	}
}
