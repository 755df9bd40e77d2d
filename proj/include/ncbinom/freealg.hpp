#pragma once

// The free associative algebra with identity over ParamPoly coefficients.
// No relations are ever applied here; quotients live in rewrite.hpp.

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "ncbinom/scalars.hpp"

namespace ncbinom {

struct Generator
{
	std::string name;
	bool central = false;

	friend bool operator==(Generator const &, Generator const &) = default;
};

using Letter = std::uint32_t;

/// A monomial of the free algebra: letters index into an Alphabet. The
/// empty word is the identity.
using Word = std::vector<Letter>;

/// Shorter words first, then lexicographic by letter index (declaration order).
struct WordLess
{
	bool operator()(Word const &a, Word const &b) const
	{
		if (a.size() != b.size())
			return a.size() < b.size();
		return a < b;
	}
};

/// Ordered generator list shared by all elements of one algebra. Two
/// alphabets are equal iff their generator lists are equal.
class Alphabet
{
  public:
	explicit Alphabet(std::vector<Generator> gens);

	std::vector<Generator> const &generators() const { return *gens_; }
	size_t size() const { return gens_->size(); }
	Generator const &operator[](Letter i) const { return (*gens_)[i]; }

	/// Throws std::invalid_argument for an unknown name.
	Letter index_of(std::string_view name) const;
	bool contains(std::string_view name) const;

	friend bool operator==(Alphabet const &a, Alphabet const &b)
	{
		return a.gens_ == b.gens_ || *a.gens_ == *b.gens_;
	}

  private:
	std::shared_ptr<std::vector<Generator> const> gens_;
};

/// {A, B}: the context of both binomial theorems.
Alphabet const &ab_alphabet();

/// Finite ParamPoly-weighted sum of words. Zero coefficients are pruned, so
/// structural equality of term maps is equality in the free algebra.
class NCPoly
{
  public:
	using TermMap = std::map<Word, ParamPoly, WordLess>;

	explicit NCPoly(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

	static NCPoly one(Alphabet const &alphabet) { return scalar(alphabet, ParamPoly(1)); }
	static NCPoly scalar(Alphabet const &alphabet, ParamPoly coeff);
	static NCPoly gen(Alphabet const &alphabet, std::string_view name);
	static NCPoly monomial(Alphabet const &alphabet, Word word, ParamPoly coeff = ParamPoly(1));
	/// Word from generator names, e.g. {"B", "A", "A"}.
	static NCPoly word(Alphabet const &alphabet, std::vector<std::string> const &letters,
	                   ParamPoly coeff = ParamPoly(1));

	Alphabet const &alphabet() const { return alphabet_; }
	TermMap const &terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	/// Coefficient of a word (zero if absent).
	ParamPoly coeff(Word const &w) const;
	/// Length of the longest word; 0 for zero and scalars.
	size_t degree() const;

	void add_term(Word const &w, ParamPoly const &c);

	NCPoly operator-() const;
	NCPoly &operator+=(NCPoly const &other);
	NCPoly &operator-=(NCPoly const &other);

	friend NCPoly operator+(NCPoly a, NCPoly const &b) { return a += b; }
	friend NCPoly operator-(NCPoly a, NCPoly const &b) { return a -= b; }
	friend NCPoly operator*(NCPoly const &a, NCPoly const &b);
	friend NCPoly operator*(ParamPoly const &c, NCPoly const &p) { return p.scale(c); }
	friend NCPoly operator*(NCPoly const &p, ParamPoly const &c) { return p.scale(c); }

	NCPoly scale(ParamPoly const &c) const;
	/// Drops all words longer than max_degree.
	NCPoly truncate(size_t max_degree) const;
	/// Keeps only words of exactly the given length.
	NCPoly homogeneous_part(size_t degree) const;

	friend bool operator==(NCPoly const &a, NCPoly const &b)
	{
		return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
	}

	/// Human-readable form, e.g. "A^2 + A*B - 2*h*B*A".
	std::string to_string() const;
	/// {"terms":[{"coeff":"...","word":["A","B"]}]} in canonical order.
	nlohmann::ordered_json to_json() const;
	static NCPoly from_json(Alphabet const &alphabet, nlohmann::json const &j);

  private:
	void check_same(NCPoly const &other) const;

	Alphabet alphabet_;
	TermMap terms_;
};

std::string word_to_string(Alphabet const &alphabet, Word const &w);

NCPoly nc_add(NCPoly const &p, NCPoly const &q);
NCPoly nc_mul(NCPoly const &p, NCPoly const &q);
/// p^0 = 1, p^n = p * p^(n-1).
NCPoly nc_pow(NCPoly const &p, unsigned n);
/// d_x(p) = x p - p x.
NCPoly nc_derivation(NCPoly const &x, NCPoly const &p);

/// {(a + d_b)^k 1}: iterate X_0 = 1, X_{j+1} = a X_j + d_b(X_j).
NCPoly nc_a_plus_db_pow_one(NCPoly const &a, NCPoly const &b, unsigned k);

} // namespace ncbinom
