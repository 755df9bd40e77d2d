#pragma once

// Normal-ordering rewrite systems: quotients of the free algebra by
// adjacent-swap commutation rules, with an ordered-monomial canonical basis.
//
// Canonical generator order is central generators first, then the
// non-central ones in declared order. A word is in normal form when no
// adjacent pair is out of order, except for non-central pairs that have no
// rule (those are left free).
//
// Termination measure for a word: (non-central degree, non-central
// projection compared lexicographically, central inversions). Central
// swaps lower the last component; a rule g_j g_i -> sum c_w w is admissible
// when each w either has fewer non-central letters or has the same count
// with a lexicographically smaller non-central projection than g_j g_i.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncbinom/freealg.hpp"

namespace ncbinom {

enum class Family
{
	commutative,
	hsq,
	weyl,
};

std::string to_string(Family f);
/// Accepts "commutative", "hsq", "weyl".
std::optional<Family> parse_family(std::string_view name);

enum class Strategy
{
	leftmost,
	rightmost,
};

class RewriteError : public std::runtime_error
{
  public:
	using std::runtime_error::runtime_error;
};

struct ValidationReport
{
	bool ok = true;
	std::vector<std::string> violations;
	/// Non-fatal: missing rules, unproven confluence of user systems.
	std::vector<std::string> warnings;
};

class RelationSystem
{
  public:
	/// Pair (later, earlier) in canonical order, i.e. a word "later earlier".
	using Pair = std::pair<Letter, Letter>;

	/// `alphabet` must already be in canonical order (see canonical_alphabet).
	/// Replacements must be elements of that alphabet.
	RelationSystem(std::string name, Alphabet alphabet, std::vector<std::pair<Pair, NCPoly>> rules,
	               bool builtin = false);

	/// Stable reordering with central generators first.
	static Alphabet canonical_alphabet(std::vector<Generator> generators);
	static RelationSystem make_family(Family family);
	/// {"alphabet":[{"name":"C","central":true},...],
	///  "rules":[{"pair":["B","A"],"replacement":<NCPoly JSON>}]}
	static RelationSystem from_json(nlohmann::json const &j, std::string name = "custom");

	std::string const &name() const { return name_; }
	Alphabet const &alphabet() const { return alphabet_; }
	std::map<Pair, NCPoly> const &rules() const { return rules_; }
	bool builtin() const { return builtin_; }

	ValidationReport validate() const;

	/// Normal form; throws RewriteError when more than `budget` rule
	/// applications are needed.
	NCPoly normal_form(NCPoly const &p, Strategy strategy = Strategy::leftmost, std::uint64_t budget = 1'000'000) const;
	bool quotient_eq(NCPoly const &p, NCPoly const &q) const;

	/// True when no reducible adjacent pair occurs in `w`.
	bool is_normal(Word const &w) const;

	nlohmann::ordered_json to_json() const;

  private:
	enum class Step
	{
		none,
		swap,
		rule,
	};
	Step classify(Letter left, Letter right) const;

	std::string name_;
	Alphabet alphabet_;
	std::map<Pair, NCPoly> rules_;
	std::vector<std::string> construction_errors_;
	bool builtin_ = false;
};

/// Convenience forms of the member functions.
RelationSystem make_family(Family family);
ValidationReport validate(RelationSystem const &sys);
NCPoly normal_form(RelationSystem const &sys, NCPoly const &p);
bool quotient_eq(RelationSystem const &sys, NCPoly const &p, NCPoly const &q);

} // namespace ncbinom
