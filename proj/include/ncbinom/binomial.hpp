#pragma once

// Expansion engines for (A+B)^n in a non-commutative algebra.
//
// All engines take an alphabet that contains generators named "A" and "B"
// (and "C" for the Weyl engines). They return free-algebra elements; the
// relation-specific closed forms are only equal to (A+B)^n after
// normal-ordering under the matching RelationSystem.

#include <optional>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "ncbinom/freealg.hpp"
#include "ncbinom/rewrite.hpp"
#include "ncbinom/scalars.hpp"

namespace ncbinom {

enum class Method
{
	brute,
	theorem1,
	corollary1,
	theorem2,
	closed_hsq,
	closed_weyl,
};

std::string to_string(Method m);
std::optional<Method> parse_method(std::string_view name);

/// The binomial sum M_n = sum_k C(n,k) A^k B^(n-k).
NCPoly m_n(Alphabet const &alpha, unsigned n);

/// (A+B)^n by repeated multiplication; the reference oracle.
NCPoly brute_expand(Alphabet const &alpha, unsigned n);

/// sum_k C(n,k) {(A + d_B)^k 1} B^(n-k).
NCPoly theorem1_expand(Alphabet const &alpha, unsigned n);

enum class DRoute
{
	recurrence,
	difference,
};

/// Essential non-commutative part D_k = (A + d_B)^k 1 - A^k, either as that
/// difference or through D_(k+1) = d_B A^k + (A + d_B) D_k, D_0 = 0.
NCPoly essential_d(Alphabet const &alpha, unsigned k, DRoute via);

/// M_n + sum_k C(n,k) D_k B^(n-k).
NCPoly corollary1_expand(Alphabet const &alpha, unsigned n);

/// M_n + sum_{k=0}^{n-2} (A+B)^k d_B(M_(n-1-k)); powers of A+B are taken by
/// brute multiplication.
NCPoly theorem2_expand(Alphabet const &alpha, unsigned n);

/// M_1 M_n - M_(n+1) - d_B(M_n); identically zero.
NCPoly lemma3_defect(Alphabet const &alpha, unsigned n);

/// M_1^n - M_n - sum_{k=0}^{n-2} M_1^k d_B(M_(n-1-k)); identically zero.
NCPoly lemma4_defect(Alphabet const &alpha, unsigned n);

struct GammaFactor
{
	unsigned n = 0;
	/// prod_{j=1}^{n-1} (1 + j h)
	ParamPoly value;
};

/// Built from gamma_0 = 1 and gamma_(k+1) = (1 + k h) gamma_k. gamma_0 and
/// gamma_1 are both 1.
GammaFactor gamma(unsigned n);

/// sum_k C(n,k) gamma_k(h) A^k B^(n-k).
NCPoly closed_form_hsq(Alphabet const &alpha, unsigned n);

enum class WeylRoute
{
	recurrence,
	closed,
};

struct WeylCoeff
{
	unsigned n = 0;
	unsigned k = 0;
	/// n! / ((n-2k)! k! 2^k) C^k
	NCPoly value;
};

/// A_{n,k} for 0 <= k <= floor(n/2); throws std::out_of_range otherwise.
/// The recurrence route uses A_{n,0} = 1 and
/// A_{n+1,k} = A_{n,k} + (n+2-2k) C A_{n,k-1}.
WeylCoeff weyl_coeff(Alphabet const &alpha, unsigned n, unsigned k, WeylRoute via);

/// sum_{k=0}^{floor(n/2)} M_(n-2k) A_{n,k}.
NCPoly closed_form_weyl(Alphabet const &alpha, unsigned n);

/// Renders closed_form_weyl(n) in the M basis, e.g. "M_4 + 6*C*M_2 + 3*C^2".
std::string weyl_m_basis_string(unsigned n);

enum class ExpIdentity
{
	corollary2,
	corollary3,
};

/// Both sides of the exponential identity as free-algebra series truncated
/// to total degree <= order, subtracted. Identically zero.
///   corollary2: e^(A+B) - [e^(A + d_B) 1] e^B
///   corollary3: e^(A+B) - e^A e^B - sum_{k>=2} D_k e^B / k!
NCPoly exp_identity_defect(ExpIdentity which, unsigned order);

struct ExpansionReport
{
	unsigned n = 0;
	Method method = Method::brute;
	NCPoly result{ab_alphabet()};
	/// Name of the relation system used for the oracle comparison; empty
	/// for free-algebra equality.
	std::string relation;
	bool oracle_match = false;

	nlohmann::ordered_json to_json() const;
};

/// Runs `method` and compares its result with brute_expand, either
/// structurally (no relation) or via quotient_eq. closed_hsq and
/// closed_weyl require the hsq and weyl families respectively and throw
/// std::invalid_argument otherwise; with no relation they default to it.
ExpansionReport expand(unsigned n, Method method, std::optional<RelationSystem> const &relation);

} // namespace ncbinom
