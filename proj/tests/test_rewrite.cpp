#include <doctest.h>

#include <functional>

#include "ncbinom/rewrite.hpp"
#include "ncbinom/verify.hpp"

using namespace ncbinom;

namespace {

// Independent oracle for the Weyl family: the reordering formula
//   B^m A^n = sum_k C(m,k) C(n,k) k! C^k A^(n-k) B^(m-k)
// applied to an already-separated word C^c A^a B^b, then threaded through a
// general word left to right.
NCPoly weyl_oracle_nf(Alphabet const &cab, Word const &word)
{
	Letter const C = cab.index_of("C"), A = cab.index_of("A"), B = cab.index_of("B");
	// state: map (c, a, b) -> coefficient for C^c A^a B^b
	std::map<std::tuple<unsigned, unsigned, unsigned>, Rational> state{{{0, 0, 0}, Rational(1)}};
	for (Letter l : word)
	{
		std::map<std::tuple<unsigned, unsigned, unsigned>, Rational> next;
		for (auto const &[key, coeff] : state)
		{
			auto [c, a, b] = key;
			if (l == C)
				next[{c + 1, a, b}] += coeff;
			else if (l == B)
				next[{c, a, b + 1}] += coeff;
			else
			{
				// C^c A^a (B^b A) = C^c A^a (A B^b + b C B^(b-1))
				next[{c, a + 1, b}] += coeff;
				if (b > 0)
					next[{c + 1, a, b - 1}] += coeff * Rational(static_cast<long>(b));
			}
		}
		state = std::move(next);
	}
	NCPoly r(cab);
	for (auto const &[key, coeff] : state)
	{
		auto [c, a, b] = key;
		Word w(c, C);
		w.insert(w.end(), a, A);
		w.insert(w.end(), b, B);
		r.add_term(w, ParamPoly(coeff));
	}
	return r;
}

// Independent oracle for hsq: naive recursive rewriting of the first BA
// occurrence, no merging, no ordering tricks.
NCPoly hsq_oracle_nf(Word const &word)
{
	Alphabet const &ab = ab_alphabet();
	for (size_t i = 0; i + 1 < word.size(); ++i)
		if (word[i] == 1 && word[i + 1] == 0)
		{
			Word swapped = word;
			std::swap(swapped[i], swapped[i + 1]);
			Word squared = word;
			squared[i] = 0;
			return hsq_oracle_nf(swapped) + hsq_oracle_nf(squared).scale(ParamPoly::var("h"));
		}
	return NCPoly::monomial(ab, word);
}

NCPoly words(Alphabet const &alpha, std::vector<std::pair<std::vector<std::string>, ParamPoly>> const &terms)
{
	NCPoly r(alpha);
	for (auto const &[letters, c] : terms)
		r += NCPoly::word(alpha, letters, c);
	return r;
}

} // namespace

TEST_CASE("built-in families")
{
	RelationSystem const comm = make_family(Family::commutative);
	REQUIRE(comm.rules().size() == 1);
	CHECK(comm.rules().begin()->second == NCPoly::word(ab_alphabet(), {"A", "B"}));

	RelationSystem const hsq = make_family(Family::hsq);
	CHECK(hsq.rules().begin()->second.to_string() == "h*A^2 + A*B");

	RelationSystem const weyl = make_family(Family::weyl);
	CHECK(weyl.rules().begin()->second.to_string() == "C + A*B");
	CHECK(weyl.alphabet()[0].name == "C");
	CHECK(weyl.alphabet()[0].central);

	CHECK(parse_family("weyl") == Family::weyl);
	CHECK_FALSE(parse_family("free").has_value());
}

TEST_CASE("validation")
{
	for (Family f : {Family::commutative, Family::hsq, Family::weyl})
	{
		auto report = make_family(f).validate();
		CHECK(report.ok);
		CHECK(report.violations.empty());
		CHECK(report.warnings.empty());
	}

	Alphabet const &ab = ab_alphabet();
	RelationSystem const bad("bad", ab, {{{1, 0}, NCPoly::word(ab, {"B", "B"})}});
	auto report = bad.validate();
	CHECK_FALSE(report.ok);
	REQUIRE(report.violations.size() == 1);
	CHECK(report.violations[0].find("BA") != std::string::npos);

	RelationSystem const ordered("ordered", ab, {{{0, 1}, NCPoly::word(ab, {"A", "B"})}});
	CHECK_FALSE(ordered.validate().ok);

	RelationSystem const unsorted_rhs("rhs", ab, {{{1, 0}, NCPoly::word(ab, {"A"}) + NCPoly::word(ab, {"B", "A"}, 0)}});
	CHECK(unsorted_rhs.validate().ok); // zero-coefficient term is pruned

	RelationSystem const empty("empty", ab, {});
	auto er = empty.validate();
	CHECK(er.ok);
	CHECK(er.warnings.size() == 2); // free pair, unproven confluence

	Alphabet const cab = RelationSystem::canonical_alphabet({{"A", false}, {"B", false}, {"C", true}});
	CHECK(cab[0].name == "C");
	RelationSystem const central_rule("central", cab, {{{1, 0}, NCPoly::word(cab, {"C", "A"})}});
	CHECK_FALSE(central_rule.validate().ok);

	CHECK_THROWS_AS(RelationSystem("x", Alphabet({{"A", false}, {"C", true}}), {}), std::invalid_argument);
}

TEST_CASE("normal form examples")
{
	RelationSystem const weyl = make_family(Family::weyl);
	Alphabet const &cab = weyl.alphabet();
	CHECK(weyl.normal_form(NCPoly::word(cab, {"B", "A"})) == words(cab, {{{"A", "B"}, 1}, {{"C"}, 1}}));
	CHECK(weyl.normal_form(NCPoly::word(cab, {"B", "B", "A"})) == words(cab, {{{"A", "B", "B"}, 1}, {{"C", "B"}, 2}}));
	CHECK(weyl.normal_form(NCPoly::word(cab, {"A", "C", "B", "C"})) == NCPoly::word(cab, {"C", "C", "A", "B"}));

	RelationSystem const hsq = make_family(Family::hsq);
	Alphabet const &ab = ab_alphabet();
	CHECK(hsq.normal_form(NCPoly::word(ab, {"B", "A", "A"})) ==
	      words(ab, {{{"A", "A", "B"}, 1}, {{"A", "A", "A"}, ParamPoly::var("h").scale(Rational(2))}}));

	RelationSystem const comm = make_family(Family::commutative);
	CHECK(comm.normal_form(NCPoly::word(ab, {"B", "A", "B", "A"})) == NCPoly::word(ab, {"A", "A", "B", "B"}));
}

TEST_CASE("quotient equality")
{
	Alphabet const &ab = ab_alphabet();
	RelationSystem const comm = make_family(Family::commutative);
	CHECK(comm.quotient_eq(NCPoly::word(ab, {"A", "B"}), NCPoly::word(ab, {"B", "A"})));

	RelationSystem const weyl = make_family(Family::weyl);
	Alphabet const &cab = weyl.alphabet();
	NCPoly const s = NCPoly::gen(cab, "A") + NCPoly::gen(cab, "B");
	CHECK(weyl.quotient_eq(s * s, words(cab, {{{"A", "A"}, 1}, {{"A", "B"}, 2}, {{"B", "B"}, 1}, {{"C"}, 1}})));

	RelationSystem const empty("empty", ab, {});
	CHECK_FALSE(empty.quotient_eq(NCPoly::word(ab, {"A", "B"}), NCPoly::word(ab, {"B", "A"})));
	CHECK(empty.normal_form(NCPoly::word(ab, {"B", "A"})) == NCPoly::word(ab, {"B", "A"}));

	CHECK_THROWS_AS(weyl.normal_form(NCPoly::gen(ab, "A")), std::invalid_argument);
}

TEST_CASE("weyl normal forms match the reordering formula")
{
	RelationSystem const weyl = make_family(Family::weyl);
	Alphabet const &cab = weyl.alphabet();
	Rng rng(11);
	for (int i = 0; i < 300; ++i)
	{
		Word w(rng.below(9));
		for (auto &l : w)
			l = static_cast<Letter>(rng.below(3));
		REQUIRE(weyl.normal_form(NCPoly::monomial(cab, w)) == weyl_oracle_nf(cab, w));
	}
}

TEST_CASE("hsq normal forms match naive rewriting")
{
	RelationSystem const hsq = make_family(Family::hsq);
	for (unsigned len = 0; len <= 7; ++len)
		for (unsigned bits = 0; bits < (1u << len); ++bits)
		{
			Word w(len);
			for (unsigned i = 0; i < len; ++i)
				w[i] = (bits >> i) & 1u;
			REQUIRE(hsq.normal_form(NCPoly::monomial(ab_alphabet(), w)) == hsq_oracle_nf(w));
		}
}

TEST_CASE("derivation transport")
{
	Alphabet const &ab = ab_alphabet();
	RelationSystem const hsq = make_family(Family::hsq);
	RelationSystem const weyl = make_family(Family::weyl);
	Alphabet const &cab = weyl.alphabet();
	for (unsigned k = 1; k <= 8; ++k)
	{
		NCPoly const ak = NCPoly::monomial(ab, Word(k, 0));
		CHECK(hsq.normal_form(nc_derivation(NCPoly::gen(ab, "B"), ak)) ==
		      NCPoly::monomial(ab, Word(k + 1, 0), ParamPoly::var("h").scale(Rational(static_cast<long>(k)))));

		NCPoly const cak = NCPoly::monomial(cab, Word(k, cab.index_of("A")));
		Word expected(1, cab.index_of("C"));
		expected.insert(expected.end(), k - 1, cab.index_of("A"));
		CHECK(weyl.normal_form(nc_derivation(NCPoly::gen(cab, "B"), cak)) ==
		      NCPoly::monomial(cab, expected, ParamPoly(static_cast<long>(k))));
	}
}

TEST_CASE("termination on degree 10 inputs")
{
	for (Family f : {Family::commutative, Family::hsq, Family::weyl})
	{
		RelationSystem const sys = make_family(f);
		Alphabet const &alpha = sys.alphabet();
		Letter const a = alpha.index_of("A"), b = alpha.index_of("B");
		// Worst case: every B in front of every A.
		Word worst(5, b);
		worst.insert(worst.end(), 5, a);
		NCPoly nf = sys.normal_form(NCPoly::monomial(alpha, worst));
		for (auto const &[w, c] : nf.terms())
			CHECK(std::is_sorted(w.begin(), w.end()));

		Rng rng(99);
		for (int i = 0; i < 200; ++i)
			REQUIRE_NOTHROW(sys.normal_form(random_ncpoly(rng, alpha, 10, 3, true)));
	}
}

TEST_CASE("strategies agree, idempotence, congruence")
{
	for (Family f : {Family::commutative, Family::hsq, Family::weyl})
	{
		RelationSystem const sys = make_family(f);
		Rng rng(2024);
		for (int i = 0; i < 200; ++i)
		{
			NCPoly p = random_ncpoly(rng, sys.alphabet(), 6, 4, true);
			NCPoly q = random_ncpoly(rng, sys.alphabet(), 3, 3, true);
			NCPoly nf = sys.normal_form(p, Strategy::leftmost);
			REQUIRE(nf == sys.normal_form(p, Strategy::rightmost));
			REQUIRE(sys.normal_form(nf) == nf);
			REQUIRE(sys.normal_form(p * q) == sys.normal_form(nf * sys.normal_form(q)));
		}
	}
}

TEST_CASE("budget exhaustion")
{
	Alphabet const &ab = ab_alphabet();
	// BA -> 2 BA never makes progress; validate flags it and normal_form gives up.
	RelationSystem const loop("loop", ab, {{{1, 0}, NCPoly::word(ab, {"B", "A"}, 2)}});
	CHECK_FALSE(loop.validate().ok);
	CHECK_THROWS_AS(loop.normal_form(NCPoly::word(ab, {"B", "A"}), Strategy::leftmost, 1000), RewriteError);

	RelationSystem const hsq = make_family(Family::hsq);
	Word worst(5, 1);
	worst.insert(worst.end(), 5, 0);
	CHECK_THROWS_AS(hsq.normal_form(NCPoly::monomial(ab, worst), Strategy::leftmost, 3), RewriteError);
}

TEST_CASE("JSON relation systems")
{
	auto j = nlohmann::json::parse(R"({
		"alphabet": [{"name": "A"}, {"name": "B"}, {"name": "C", "central": true}],
		"rules": [{"pair": ["B", "A"],
		           "replacement": {"terms": [{"coeff": "1", "word": ["A", "B"]},
		                                     {"coeff": "1", "word": ["C"]}]}}]
	})");
	RelationSystem const sys = RelationSystem::from_json(j, "my-weyl");
	CHECK(sys.alphabet() == make_family(Family::weyl).alphabet());
	auto report = sys.validate();
	CHECK(report.ok);
	CHECK(report.warnings.size() == 1);
	CHECK_FALSE(sys.builtin());

	RelationSystem const weyl = make_family(Family::weyl);
	Rng rng(8);
	for (int i = 0; i < 50; ++i)
	{
		NCPoly p = random_ncpoly(rng, weyl.alphabet(), 5, 3, false);
		REQUIRE(sys.normal_form(p) == weyl.normal_form(p));
	}

	auto round = RelationSystem::from_json(nlohmann::json::parse(weyl.to_json().dump()));
	CHECK(round.rules() == weyl.rules());

	CHECK_THROWS_AS(RelationSystem::from_json(nlohmann::json::parse(R"({"rules": []})")), std::invalid_argument);
	CHECK_THROWS_AS(RelationSystem::from_json(nlohmann::json::parse(
	                    R"({"alphabet": [{"name": "A"}], "rules": [{"pair": ["B", "A"], "replacement": {"terms": []}}]})")),
	                std::invalid_argument);
}
