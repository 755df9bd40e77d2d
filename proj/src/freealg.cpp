#include "ncbinom/freealg.hpp"

#include <stdexcept>

namespace ncbinom {

Alphabet::Alphabet(std::vector<Generator> gens)
{
	for (size_t i = 0; i < gens.size(); ++i)
	{
		if (gens[i].name.empty())
			throw std::invalid_argument("generator with empty name");
		for (size_t j = 0; j < i; ++j)
			if (gens[j].name == gens[i].name)
				throw std::invalid_argument("duplicate generator '" + gens[i].name + "'");
	}
	gens_ = std::make_shared<std::vector<Generator> const>(std::move(gens));
}

Letter Alphabet::index_of(std::string_view name) const
{
	for (Letter i = 0; i < gens_->size(); ++i)
		if ((*gens_)[i].name == name)
			return i;
	throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

bool Alphabet::contains(std::string_view name) const
{
	for (auto const &g : *gens_)
		if (g.name == name)
			return true;
	return false;
}

Alphabet const &ab_alphabet()
{
	static Alphabet const alpha({{"A", false}, {"B", false}});
	return alpha;
}

// ---------------------------------------------------------------------------

NCPoly NCPoly::scalar(Alphabet const &alphabet, ParamPoly coeff) { return monomial(alphabet, {}, std::move(coeff)); }

NCPoly NCPoly::gen(Alphabet const &alphabet, std::string_view name)
{
	return monomial(alphabet, {alphabet.index_of(name)});
}

NCPoly NCPoly::monomial(Alphabet const &alphabet, Word word, ParamPoly coeff)
{
	for (Letter l : word)
		if (l >= alphabet.size())
			throw std::out_of_range("letter index outside alphabet");
	NCPoly p(alphabet);
	p.add_term(word, coeff);
	return p;
}

NCPoly NCPoly::word(Alphabet const &alphabet, std::vector<std::string> const &letters, ParamPoly coeff)
{
	Word w;
	w.reserve(letters.size());
	for (auto const &name : letters)
		w.push_back(alphabet.index_of(name));
	return monomial(alphabet, std::move(w), std::move(coeff));
}

ParamPoly NCPoly::coeff(Word const &w) const
{
	auto it = terms_.find(w);
	return it == terms_.end() ? ParamPoly() : it->second;
}

size_t NCPoly::degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

void NCPoly::add_term(Word const &w, ParamPoly const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(w, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

void NCPoly::check_same(NCPoly const &other) const
{
	if (!(alphabet_ == other.alphabet_))
		throw std::invalid_argument("NCPoly operands belong to different alphabets");
}

NCPoly NCPoly::operator-() const
{
	NCPoly r = *this;
	for (auto &[w, c] : r.terms_)
		c = -c;
	return r;
}

NCPoly &NCPoly::operator+=(NCPoly const &other)
{
	check_same(other);
	for (auto const &[w, c] : other.terms_)
		add_term(w, c);
	return *this;
}

NCPoly &NCPoly::operator-=(NCPoly const &other)
{
	check_same(other);
	for (auto const &[w, c] : other.terms_)
		add_term(w, -c);
	return *this;
}

NCPoly operator*(NCPoly const &a, NCPoly const &b)
{
	a.check_same(b);
	NCPoly r(a.alphabet_);
	Word w;
	for (auto const &[wa, ca] : a.terms_)
		for (auto const &[wb, cb] : b.terms_)
		{
			w.assign(wa.begin(), wa.end());
			w.insert(w.end(), wb.begin(), wb.end());
			r.add_term(w, ca * cb);
		}
	return r;
}

NCPoly NCPoly::scale(ParamPoly const &c) const
{
	NCPoly r(alphabet_);
	for (auto const &[w, coeff] : terms_)
		r.add_term(w, coeff * c);
	return r;
}

NCPoly NCPoly::truncate(size_t max_degree) const
{
	NCPoly r(alphabet_);
	for (auto const &[w, c] : terms_)
		if (w.size() <= max_degree)
			r.terms_.emplace(w, c);
	return r;
}

NCPoly NCPoly::homogeneous_part(size_t degree) const
{
	NCPoly r(alphabet_);
	for (auto const &[w, c] : terms_)
		if (w.size() == degree)
			r.terms_.emplace(w, c);
	return r;
}

std::string word_to_string(Alphabet const &alphabet, Word const &w)
{
	std::string r;
	for (size_t i = 0; i < w.size();)
	{
		size_t j = i;
		while (j < w.size() && w[j] == w[i])
			++j;
		if (!r.empty())
			r += '*';
		r += alphabet[w[i]].name;
		if (j - i > 1)
			r += '^' + std::to_string(j - i);
		i = j;
	}
	return r;
}

std::string NCPoly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string r;
	for (auto const &[w, c] : terms_)
	{
		std::string ws = word_to_string(alphabet_, w);
		bool single = c.terms().size() == 1;
		bool negative = single && c.terms().begin()->second.sign() < 0;
		ParamPoly mag = negative ? -c : c;
		if (r.empty())
			r += negative ? "-" : "";
		else
			r += negative ? " - " : " + ";
		if (ws.empty())
			r += single ? mag.to_string() : "(" + mag.to_string() + ")";
		else if (mag.is_one())
			r += ws;
		else if (single)
			r += mag.to_string() + "*" + ws;
		else
			r += "(" + mag.to_string() + ")*" + ws;
	}
	return r;
}

nlohmann::ordered_json NCPoly::to_json() const
{
	auto terms = nlohmann::ordered_json::array();
	for (auto const &[w, c] : terms_)
	{
		auto letters = nlohmann::ordered_json::array();
		for (Letter l : w)
			letters.push_back(alphabet_[l].name);
		nlohmann::ordered_json t;
		t["coeff"] = c.to_string();
		t["word"] = std::move(letters);
		terms.push_back(std::move(t));
	}
	nlohmann::ordered_json j;
	j["terms"] = std::move(terms);
	return j;
}

NCPoly NCPoly::from_json(Alphabet const &alphabet, nlohmann::json const &j)
{
	if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
		throw std::invalid_argument("NCPoly JSON: expected {\"terms\": [...]}");
	NCPoly p(alphabet);
	for (auto const &t : j.at("terms"))
	{
		Word w;
		for (auto const &name : t.at("word"))
			w.push_back(alphabet.index_of(name.get<std::string>()));
		p.add_term(w, ParamPoly::parse(t.at("coeff").get<std::string>()));
	}
	return p;
}

// ---------------------------------------------------------------------------

NCPoly nc_add(NCPoly const &p, NCPoly const &q) { return p + q; }

NCPoly nc_mul(NCPoly const &p, NCPoly const &q) { return p * q; }

NCPoly nc_pow(NCPoly const &p, unsigned n)
{
	NCPoly r = NCPoly::one(p.alphabet());
	for (unsigned i = 0; i < n; ++i)
		r = p * r;
	return r;
}

NCPoly nc_derivation(NCPoly const &x, NCPoly const &p) { return x * p - p * x; }

NCPoly nc_a_plus_db_pow_one(NCPoly const &a, NCPoly const &b, unsigned k)
{
	NCPoly x = NCPoly::one(a.alphabet());
	for (unsigned j = 0; j < k; ++j)
		x = a * x + nc_derivation(b, x);
	return x;
}

} // namespace ncbinom
