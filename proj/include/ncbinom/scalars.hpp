#pragma once

// Exact coefficient arithmetic: arbitrary-precision rationals and sparse
// multivariate polynomials in named central parameters (h, lambda, ...).

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ncbinom {

/// Exact rational number, always stored in lowest terms with a positive
/// denominator. Only ring operations are provided.
class Rational
{
  public:
	Rational() = default;
	Rational(long value) : value_(value) {}
	/// num/den, reduced. Throws std::invalid_argument when den == 0.
	Rational(mpz_class const &num, mpz_class const &den);
	explicit Rational(mpz_class const &integer) : value_(integer) {}

	/// Parses "p" or "p/q" with an optional sign.
	static Rational parse(std::string_view text);

	bool is_zero() const { return sgn(value_) == 0; }
	bool is_one() const { return value_ == 1; }
	int sign() const { return sgn(value_); }

	mpz_class numerator() const { return value_.get_num(); }
	mpz_class denominator() const { return value_.get_den(); }

	Rational operator-() const;
	Rational abs() const;
	Rational &operator+=(Rational const &other);
	Rational &operator-=(Rational const &other);
	Rational &operator*=(Rational const &other);

	friend Rational operator+(Rational a, Rational const &b) { return a += b; }
	friend Rational operator-(Rational a, Rational const &b) { return a -= b; }
	friend Rational operator*(Rational a, Rational const &b) { return a *= b; }

	friend bool operator==(Rational const &a, Rational const &b) { return a.value_ == b.value_; }
	friend std::strong_ordering operator<=>(Rational const &a, Rational const &b)
	{
		int c = cmp(a.value_, b.value_);
		return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
	}

	/// "p" for integers, "p/q" otherwise.
	std::string to_string() const;

  private:
	mpq_class value_{0};
};

Rational factorial(unsigned n);

/// C(n, k); zero when k > n.
Rational binom_coeff(unsigned n, unsigned k);

/// Power product of named parameters. Entries are sorted by name and never
/// carry a zero exponent.
class Monomial
{
  public:
	using Entry = std::pair<std::string, unsigned>;

	Monomial() = default;
	explicit Monomial(std::vector<Entry> entries);
	static Monomial var(std::string name, unsigned power = 1);

	std::vector<Entry> const &entries() const { return entries_; }
	unsigned degree() const;
	bool is_one() const { return entries_.empty(); }

	Monomial operator*(Monomial const &other) const;

	friend bool operator==(Monomial const &, Monomial const &) = default;
	/// Total degree first, then lexicographic on the (name, power) list.
	friend std::strong_ordering operator<=>(Monomial const &a, Monomial const &b);

	/// "h^2*lambda"; empty string for the unit monomial.
	std::string to_string() const;

  private:
	std::vector<Entry> entries_;
};

/// Sparse polynomial over the rationals in commuting named parameters.
/// Zero coefficients are never stored, so structural equality is semantic.
class ParamPoly
{
  public:
	using TermMap = std::map<Monomial, Rational>;

	ParamPoly() = default;
	ParamPoly(Rational constant);
	ParamPoly(long constant) : ParamPoly(Rational(constant)) {}
	static ParamPoly var(std::string name, unsigned power = 1);
	static ParamPoly term(Rational coeff, Monomial mono);

	/// Inverse of to_string(); accepts e.g. "1 + 3*h - 1/2*h^2*lambda".
	static ParamPoly parse(std::string_view text);

	TermMap const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	bool is_one() const;
	/// True when the polynomial has no parameters (including zero).
	bool is_constant() const;
	/// Constant term (zero if absent).
	Rational constant_term() const;
	/// Coefficient of a given monomial (zero if absent).
	Rational coeff(Monomial const &mono) const;

	ParamPoly operator-() const;
	ParamPoly &operator+=(ParamPoly const &other);
	ParamPoly &operator-=(ParamPoly const &other);
	ParamPoly &operator*=(ParamPoly const &other);
	ParamPoly scale(Rational const &factor) const;

	friend ParamPoly operator+(ParamPoly a, ParamPoly const &b) { return a += b; }
	friend ParamPoly operator-(ParamPoly a, ParamPoly const &b) { return a -= b; }
	friend ParamPoly operator*(ParamPoly const &a, ParamPoly const &b);
	friend bool operator==(ParamPoly const &, ParamPoly const &) = default;

	/// Substitutes every parameter. Throws std::invalid_argument naming the
	/// first unbound parameter.
	Rational eval(std::map<std::string, Rational> const &bindings) const;

	/// Canonical rendering, e.g. "1 + 3*h + 2*h^2"; "0" for zero.
	std::string to_string() const;

  private:
	void add_term(Monomial const &mono, Rational const &coeff);

	TermMap terms_;
};

} // namespace ncbinom
