#pragma once

// Polynomial differential operators sum c x^a D^b acting on polynomials in x,
// kept normal-ordered (powers of x to the left of derivatives).

#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "ncbinom/freealg.hpp"
#include "ncbinom/scalars.hpp"

namespace ncbinom {

/// Univariate polynomial in x with ParamPoly coefficients.
class Poly1
{
  public:
	using CoeffMap = std::map<unsigned, ParamPoly>;

	Poly1() = default;
	static Poly1 constant(ParamPoly c) { return monomial(0, std::move(c)); }
	static Poly1 monomial(unsigned degree, ParamPoly c = ParamPoly(1));

	CoeffMap const &coeffs() const { return coeffs_; }
	ParamPoly coeff(unsigned degree) const;
	bool is_zero() const { return coeffs_.empty(); }
	/// Highest degree; 0 for the zero polynomial.
	unsigned degree() const;

	void add_term(unsigned degree, ParamPoly const &c);

	Poly1 &operator+=(Poly1 const &other);
	Poly1 &operator-=(Poly1 const &other);
	friend Poly1 operator+(Poly1 a, Poly1 const &b) { return a += b; }
	friend Poly1 operator-(Poly1 a, Poly1 const &b) { return a -= b; }
	Poly1 scale(ParamPoly const &c) const;
	friend bool operator==(Poly1 const &, Poly1 const &) = default;

	/// Substitutes values for the parameters in every coefficient.
	Poly1 bind(std::map<std::string, Rational> const &bindings) const;

	/// Descending degree, e.g. "x^3 - 3*x"; "0" for zero.
	std::string to_string() const;
	/// {"coeffs":{"3":"1","1":"-3"}} in descending degree.
	nlohmann::ordered_json to_json() const;
	static Poly1 from_json(nlohmann::json const &j);

  private:
	CoeffMap coeffs_;
};

/// sum c_(a,b) x^a D^b with D = d/dx.
class DiffOp
{
  public:
	using Key = std::pair<unsigned, unsigned>; // (power of x, order of D)
	using TermMap = std::map<Key, ParamPoly>;

	DiffOp() = default;
	static DiffOp identity() { return term(0, 0); }
	static DiffOp x() { return term(1, 0); }
	static DiffOp d() { return term(0, 1); }
	static DiffOp scalar(ParamPoly c) { return term(0, 0, std::move(c)); }
	static DiffOp term(unsigned x_power, unsigned d_order, ParamPoly c = ParamPoly(1));

	TermMap const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }

	void add_term(unsigned x_power, unsigned d_order, ParamPoly const &c);

	DiffOp &operator+=(DiffOp const &other);
	DiffOp &operator-=(DiffOp const &other);
	friend DiffOp operator+(DiffOp a, DiffOp const &b) { return a += b; }
	friend DiffOp operator-(DiffOp a, DiffOp const &b) { return a -= b; }
	/// Composition: (f * g)(p) = f(g(p)).
	friend DiffOp operator*(DiffOp const &f, DiffOp const &g);
	DiffOp scale(ParamPoly const &c) const;
	friend bool operator==(DiffOp const &, DiffOp const &) = default;

	/// e.g. "x^2*D + lambda".
	std::string to_string() const;

  private:
	TermMap terms_;
};

Poly1 op_apply(DiffOp const &op, Poly1 const &p);
DiffOp op_compose(DiffOp const &f, DiffOp const &g);
DiffOp op_pow(DiffOp const &op, unsigned n);

/// The algebra homomorphism from the free algebra fixed by generator images
/// (e.g. A -> x, B -> lambda*D, C -> lambda). Every generator occurring in
/// `p` must have an image; throws std::invalid_argument otherwise.
DiffOp realize(NCPoly const &p, std::map<std::string, DiffOp> const &images);

enum class HermiteRoute
{
	operator_power, ///< (x - D)^n 1
	explicit_sum,   ///< n! sum_k (-1)^k x^(n-2k) / ((n-2k)! k! 2^k)
	recurrence,     ///< He_(n+1) = x He_n - n He_(n-1)
};

/// Probabilists' Hermite polynomial He_n.
Poly1 hermite_he(unsigned n, HermiteRoute via);

/// sum_{k=0}^{floor(n/2)} n! / ((n-2k)! k! 2^k) lambda^k x^(n-2k), the
/// action of (x + lambda D)^n on 1.
Poly1 lambda_expansion(unsigned n);

/// Compares (x + x^2 D)^n x^seed_degree with sum_k n!/(n-k)! x^k (x^2 D)^(n-k)
/// applied to the same seed.
bool x2d_check(unsigned n, unsigned seed_degree);

} // namespace ncbinom
