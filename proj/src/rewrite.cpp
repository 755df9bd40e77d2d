#include "ncbinom/rewrite.hpp"

#include <algorithm>

namespace ncbinom {

std::string to_string(Family f)
{
	switch (f)
	{
	case Family::commutative:
		return "commutative";
	case Family::hsq:
		return "hsq";
	case Family::weyl:
		return "weyl";
	}
	return "?";
}

std::optional<Family> parse_family(std::string_view name)
{
	if (name == "commutative")
		return Family::commutative;
	if (name == "hsq")
		return Family::hsq;
	if (name == "weyl")
		return Family::weyl;
	return std::nullopt;
}

namespace {

struct Measure
{
	size_t noncentral_degree = 0;
	Word projection;
	size_t central_inversions = 0;
	Word word;

	friend auto operator<=>(Measure const &, Measure const &) = default;
};

Measure measure_of(Alphabet const &alpha, Word const &w)
{
	Measure m;
	for (Letter l : w)
		if (!alpha[l].central)
			m.projection.push_back(l);
	m.noncentral_degree = m.projection.size();
	for (size_t i = 0; i < w.size(); ++i)
		for (size_t j = i + 1; j < w.size(); ++j)
			if (w[i] > w[j] && (alpha[w[i]].central || alpha[w[j]].central))
				++m.central_inversions;
	m.word = w;
	return m;
}

} // namespace

Alphabet RelationSystem::canonical_alphabet(std::vector<Generator> generators)
{
	std::stable_partition(generators.begin(), generators.end(), [](Generator const &g) { return g.central; });
	return Alphabet(std::move(generators));
}

RelationSystem::RelationSystem(std::string name, Alphabet alphabet, std::vector<std::pair<Pair, NCPoly>> rules,
                               bool builtin) :
    name_(std::move(name)), alphabet_(std::move(alphabet)), builtin_(builtin)
{
	if (!(canonical_alphabet(alphabet_.generators()) == alphabet_))
		throw std::invalid_argument("relation system alphabet must list central generators first");
	for (auto &[pair, replacement] : rules)
	{
		if (pair.first >= alphabet_.size() || pair.second >= alphabet_.size())
			throw std::out_of_range("rule pair outside alphabet");
		if (!(replacement.alphabet() == alphabet_))
			throw std::invalid_argument("rule replacement uses a different alphabet");
		auto [it, inserted] = rules_.emplace(pair, replacement);
		if (!inserted)
			construction_errors_.push_back("duplicate rule for pair " + alphabet_[pair.first].name + " " +
			                               alphabet_[pair.second].name);
	}
}

RelationSystem RelationSystem::make_family(Family family)
{
	switch (family)
	{
	case Family::commutative:
	{
		Alphabet const &ab = ab_alphabet();
		// BA -> AB
		return RelationSystem("commutative", ab, {{{1, 0}, NCPoly::word(ab, {"A", "B"})}}, true);
	}
	case Family::hsq:
	{
		Alphabet const &ab = ab_alphabet();
		// d_B A = BA - AB = h A^2
		auto rhs = NCPoly::word(ab, {"A", "B"}) + NCPoly::word(ab, {"A", "A"}, ParamPoly::var("h"));
		return RelationSystem("hsq", ab, {{{1, 0}, rhs}}, true);
	}
	case Family::weyl:
	{
		Alphabet cab({{"C", true}, {"A", false}, {"B", false}});
		// d_B A = C, C central
		auto rhs = NCPoly::word(cab, {"A", "B"}) + NCPoly::gen(cab, "C");
		return RelationSystem("weyl", cab, {{{2, 1}, rhs}}, true);
	}
	}
	throw std::invalid_argument("unknown relation family");
}

RelationSystem RelationSystem::from_json(nlohmann::json const &j, std::string name)
{
	if (!j.is_object() || !j.contains("alphabet") || !j.at("alphabet").is_array())
		throw std::invalid_argument("relation system JSON: missing \"alphabet\" array");
	std::vector<Generator> gens;
	for (auto const &g : j.at("alphabet"))
		gens.push_back({g.at("name").get<std::string>(), g.value("central", false)});
	Alphabet alpha = canonical_alphabet(std::move(gens));

	std::vector<std::pair<Pair, NCPoly>> rules;
	if (j.contains("rules"))
		for (auto const &r : j.at("rules"))
		{
			auto const &pair = r.at("pair");
			if (!pair.is_array() || pair.size() != 2)
				throw std::invalid_argument("relation system JSON: rule pair must have two names");
			Pair key{alpha.index_of(pair[0].get<std::string>()), alpha.index_of(pair[1].get<std::string>())};
			rules.emplace_back(key, NCPoly::from_json(alpha, r.at("replacement")));
		}
	return RelationSystem(std::move(name), std::move(alpha), std::move(rules));
}

nlohmann::ordered_json RelationSystem::to_json() const
{
	nlohmann::ordered_json j;
	j["alphabet"] = nlohmann::ordered_json::array();
	for (auto const &g : alphabet_.generators())
		j["alphabet"].push_back({{"name", g.name}, {"central", g.central}});
	j["rules"] = nlohmann::ordered_json::array();
	for (auto const &[pair, rhs] : rules_)
	{
		nlohmann::ordered_json r;
		r["pair"] = {alphabet_[pair.first].name, alphabet_[pair.second].name};
		r["replacement"] = rhs.to_json();
		j["rules"].push_back(std::move(r));
	}
	return j;
}

RelationSystem::Step RelationSystem::classify(Letter left, Letter right) const
{
	if (left <= right)
		return Step::none;
	if (alphabet_[left].central || alphabet_[right].central)
		return Step::swap;
	return rules_.contains({left, right}) ? Step::rule : Step::none;
}

bool RelationSystem::is_normal(Word const &w) const
{
	for (size_t i = 0; i + 1 < w.size(); ++i)
		if (classify(w[i], w[i + 1]) != Step::none)
			return false;
	return true;
}

ValidationReport RelationSystem::validate() const
{
	ValidationReport report;
	report.violations = construction_errors_;
	auto pair_name = [&](Pair p) { return alphabet_[p.first].name + alphabet_[p.second].name; };

	for (auto const &[pair, rhs] : rules_)
	{
		auto [later, earlier] = pair;
		if (later <= earlier)
		{
			report.violations.push_back("rule " + pair_name(pair) + ": pair is already in canonical order");
			continue;
		}
		if (alphabet_[later].central || alphabet_[earlier].central)
		{
			report.violations.push_back("rule " + pair_name(pair) + ": central generators commute implicitly");
			continue;
		}
		Word const lhs{later, earlier};
		for (auto const &[w, c] : rhs.terms())
		{
			Measure m = measure_of(alphabet_, w);
			bool decreasing = m.noncentral_degree < 2 || (m.noncentral_degree == 2 && m.projection < lhs);
			if (!decreasing)
				report.violations.push_back("rule " + pair_name(pair) + " -> ... " + word_to_string(alphabet_, w) +
				                            ": neither non-central degree nor order decreases");
			else if (!is_normal(w))
				report.violations.push_back("rule " + pair_name(pair) + ": replacement word " +
				                            word_to_string(alphabet_, w) + " is not in normal form");
		}
	}

	for (Letter later = 0; later < alphabet_.size(); ++later)
		for (Letter earlier = 0; earlier < later; ++earlier)
			if (!alphabet_[later].central && !alphabet_[earlier].central && !rules_.contains({later, earlier}))
				report.warnings.push_back("no rule for " + pair_name({later, earlier}) + "; pair is left free");
	if (!builtin_)
		report.warnings.push_back("confluence is not established for user-defined systems");

	report.ok = report.violations.empty();
	return report;
}

NCPoly RelationSystem::normal_form(NCPoly const &p, Strategy strategy, std::uint64_t budget) const
{
	if (!(p.alphabet() == alphabet_))
		throw std::invalid_argument("normal_form: polynomial alphabet does not match the relation system");

	// Largest measure first: every rewrite produces strictly smaller words, so
	// all contributions to a word are merged before it is processed.
	std::map<Measure, ParamPoly, std::greater<>> pending;
	auto push = [&](Word const &w, ParamPoly const &c) {
		if (c.is_zero())
			return;
		auto [it, inserted] = pending.try_emplace(measure_of(alphabet_, w), c);
		if (!inserted)
		{
			it->second += c;
			if (it->second.is_zero())
				pending.erase(it);
		}
	};
	for (auto const &[w, c] : p.terms())
		push(w, c);

	NCPoly result(alphabet_);
	std::uint64_t applications = 0;
	while (!pending.empty())
	{
		auto node = pending.extract(pending.begin());
		Word const &w = node.key().word;
		ParamPoly const &coeff = node.mapped();

		std::optional<size_t> at;
		size_t const n = w.size();
		for (size_t k = 0; k + 1 < n; ++k)
		{
			size_t i = strategy == Strategy::leftmost ? k : n - 2 - k;
			if (classify(w[i], w[i + 1]) != Step::none)
			{
				at = i;
				break;
			}
		}
		if (!at)
		{
			result.add_term(w, coeff);
			continue;
		}
		if (++applications > budget)
			throw RewriteError("normal_form: rewrite budget of " + std::to_string(budget) +
			                   " rule applications exhausted in system '" + name_ + "'");

		size_t i = *at;
		if (classify(w[i], w[i + 1]) == Step::swap)
		{
			Word swapped = w;
			std::swap(swapped[i], swapped[i + 1]);
			push(swapped, coeff);
			continue;
		}
		for (auto const &[rw, rc] : rules_.at({w[i], w[i + 1]}).terms())
		{
			Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
			next.insert(next.end(), rw.begin(), rw.end());
			next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
			push(next, coeff * rc);
		}
	}
	return result;
}

bool RelationSystem::quotient_eq(NCPoly const &p, NCPoly const &q) const
{
	return normal_form(p) == normal_form(q);
}

RelationSystem make_family(Family family) { return RelationSystem::make_family(family); }

ValidationReport validate(RelationSystem const &sys) { return sys.validate(); }

NCPoly normal_form(RelationSystem const &sys, NCPoly const &p) { return sys.normal_form(p); }

bool quotient_eq(RelationSystem const &sys, NCPoly const &p, NCPoly const &q) { return sys.quotient_eq(p, q); }

} // namespace ncbinom
