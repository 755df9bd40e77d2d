#pragma once

// Randomized and exhaustive identity checks, grouped into named suites.
// Everything is deterministic for a given seed.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "ncbinom/diffop.hpp"
#include "ncbinom/freealg.hpp"

namespace ncbinom {

/// Portable bounded draws on top of mt19937_64 (the standard distributions
/// are implementation-defined).
class Rng
{
  public:
	explicit Rng(std::uint64_t seed) : engine_(seed) {}
	std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
	long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

  private:
	std::mt19937_64 engine_;
};

/// Random element with 1..max_terms words of length <= max_degree and small
/// nonzero integer coefficients, optionally times h or (1 + h).
NCPoly random_ncpoly(Rng &rng, Alphabet const &alpha, unsigned max_degree, unsigned max_terms, bool with_params);
DiffOp random_diffop(Rng &rng, unsigned max_terms, unsigned max_power);
Poly1 random_poly1(Rng &rng, unsigned max_degree);

struct CheckResult
{
	std::string name;
	bool passed = true;
	/// JSON of the first failing value (an NCPoly or Poly1), if any.
	std::string counterexample;
};

struct SuiteReport
{
	std::vector<CheckResult> checks;

	bool passed() const;
	/// One "PASS name" / "FAIL name" line per check, then the first
	/// counterexample, then a count line.
	std::string to_text() const;
};

/// statements, theorem1, theorem2, hsq, weyl, exp, hermite, all.
std::vector<std::string> const &suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view suite, unsigned max_n, std::uint64_t seed, unsigned random_cases = 500);

} // namespace ncbinom
