#include "ncbinom/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace ncbinom {

Rational::Rational(mpz_class const &num, mpz_class const &den)
{
	if (den == 0)
		throw std::invalid_argument("Rational: zero denominator");
	value_ = mpq_class(num, den);
	value_.canonicalize();
}

Rational Rational::parse(std::string_view text)
{
	std::string s;
	for (char c : text)
		if (!std::isspace(static_cast<unsigned char>(c)))
			s.push_back(c);
	auto slash = s.find('/');
	mpz_class num, den = 1;
	try
	{
		num = mpz_class(s.substr(0, slash), 10);
		if (slash != std::string::npos)
			den = mpz_class(s.substr(slash + 1), 10);
	}
	catch (std::invalid_argument const &)
	{
		throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
	}
	return Rational(num, den);
}

Rational Rational::operator-() const
{
	Rational r;
	r.value_ = -value_;
	return r;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational &Rational::operator+=(Rational const &other)
{
	value_ += other.value_;
	return *this;
}

Rational &Rational::operator-=(Rational const &other)
{
	value_ -= other.value_;
	return *this;
}

Rational &Rational::operator*=(Rational const &other)
{
	value_ *= other.value_;
	return *this;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational factorial(unsigned n)
{
	mpz_class r;
	mpz_fac_ui(r.get_mpz_t(), n);
	return Rational(r);
}

Rational binom_coeff(unsigned n, unsigned k)
{
	if (k > n)
		return Rational(0);
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return Rational(r);
}

// ---------------------------------------------------------------------------

Monomial::Monomial(std::vector<Entry> entries)
{
	std::sort(entries.begin(), entries.end());
	for (auto &[name, power] : entries)
	{
		if (power == 0)
			continue;
		if (!entries_.empty() && entries_.back().first == name)
			entries_.back().second += power;
		else
			entries_.emplace_back(std::move(name), power);
	}
}

Monomial Monomial::var(std::string name, unsigned power) { return Monomial({{std::move(name), power}}); }

unsigned Monomial::degree() const
{
	unsigned d = 0;
	for (auto const &e : entries_)
		d += e.second;
	return d;
}

Monomial Monomial::operator*(Monomial const &other) const
{
	auto all = entries_;
	all.insert(all.end(), other.entries_.begin(), other.entries_.end());
	return Monomial(std::move(all));
}

std::strong_ordering operator<=>(Monomial const &a, Monomial const &b)
{
	if (auto c = a.degree() <=> b.degree(); c != 0)
		return c;
	return a.entries_ <=> b.entries_;
}

std::string Monomial::to_string() const
{
	std::string r;
	for (auto const &[name, power] : entries_)
	{
		if (!r.empty())
			r += '*';
		r += name;
		if (power != 1)
			r += '^' + std::to_string(power);
	}
	return r;
}

// ---------------------------------------------------------------------------

ParamPoly::ParamPoly(Rational constant)
{
	if (!constant.is_zero())
		terms_.emplace(Monomial(), std::move(constant));
}

ParamPoly ParamPoly::var(std::string name, unsigned power) { return term(Rational(1), Monomial::var(std::move(name), power)); }

ParamPoly ParamPoly::term(Rational coeff, Monomial mono)
{
	ParamPoly p;
	p.add_term(mono, coeff);
	return p;
}

bool ParamPoly::is_one() const { return terms_.size() == 1 && terms_.begin()->first.is_one() && terms_.begin()->second.is_one(); }

bool ParamPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one()); }

Rational ParamPoly::constant_term() const { return coeff(Monomial()); }

Rational ParamPoly::coeff(Monomial const &mono) const
{
	auto it = terms_.find(mono);
	return it == terms_.end() ? Rational(0) : it->second;
}

void ParamPoly::add_term(Monomial const &mono, Rational const &coeff)
{
	if (coeff.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(mono, coeff);
	if (!inserted)
	{
		it->second += coeff;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

ParamPoly ParamPoly::operator-() const
{
	ParamPoly r = *this;
	for (auto &[m, c] : r.terms_)
		c = -c;
	return r;
}

ParamPoly &ParamPoly::operator+=(ParamPoly const &other)
{
	for (auto const &[m, c] : other.terms_)
		add_term(m, c);
	return *this;
}

ParamPoly &ParamPoly::operator-=(ParamPoly const &other)
{
	for (auto const &[m, c] : other.terms_)
		add_term(m, -c);
	return *this;
}

ParamPoly operator*(ParamPoly const &a, ParamPoly const &b)
{
	ParamPoly r;
	for (auto const &[ma, ca] : a.terms_)
		for (auto const &[mb, cb] : b.terms_)
			r.add_term(ma * mb, ca * cb);
	return r;
}

ParamPoly &ParamPoly::operator*=(ParamPoly const &other) { return *this = *this * other; }

ParamPoly ParamPoly::scale(Rational const &factor) const
{
	if (factor.is_zero())
		return {};
	ParamPoly r = *this;
	for (auto &[m, c] : r.terms_)
		c *= factor;
	return r;
}

Rational ParamPoly::eval(std::map<std::string, Rational> const &bindings) const
{
	Rational total(0);
	for (auto const &[mono, coeff] : terms_)
	{
		Rational t = coeff;
		for (auto const &[name, power] : mono.entries())
		{
			auto it = bindings.find(name);
			if (it == bindings.end())
				throw std::invalid_argument("unbound parameter '" + name + "'");
			for (unsigned i = 0; i < power; ++i)
				t *= it->second;
		}
		total += t;
	}
	return total;
}

std::string ParamPoly::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string r;
	for (auto const &[mono, coeff] : terms_)
	{
		if (r.empty())
			r += coeff.sign() < 0 ? "-" : "";
		else
			r += coeff.sign() < 0 ? " - " : " + ";
		Rational mag = coeff.abs();
		if (mono.is_one())
			r += mag.to_string();
		else if (mag.is_one())
			r += mono.to_string();
		else
			r += mag.to_string() + "*" + mono.to_string();
	}
	return r;
}

namespace {

class PolyParser
{
  public:
	explicit PolyParser(std::string_view text) : text_(text) {}

	ParamPoly parse()
	{
		ParamPoly result;
		skip_ws();
		bool negative = false;
		if (peek() == '-' || peek() == '+')
			negative = get() == '-';
		for (;;)
		{
			ParamPoly t = parse_term();
			result += negative ? -t : t;
			skip_ws();
			if (at_end())
				break;
			char op = get();
			if (op != '+' && op != '-')
				fail("expected '+' or '-'");
			negative = op == '-';
		}
		return result;
	}

  private:
	ParamPoly parse_term()
	{
		Rational coeff(1);
		std::vector<Monomial::Entry> vars;
		for (;;)
		{
			skip_ws();
			if (std::isdigit(static_cast<unsigned char>(peek())))
			{
				std::string num = digits();
				skip_ws();
				if (peek() == '/')
				{
					get();
					skip_ws();
					num += "/" + digits();
				}
				coeff *= Rational::parse(num);
			}
			else if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')
			{
				std::string name;
				while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
					name.push_back(get());
				unsigned power = 1;
				skip_ws();
				if (peek() == '^')
				{
					get();
					skip_ws();
					power = static_cast<unsigned>(std::stoul(digits()));
				}
				vars.emplace_back(std::move(name), power);
			}
			else
				fail("expected number or parameter name");
			skip_ws();
			if (peek() != '*')
				break;
			get();
		}
		return ParamPoly::term(coeff, Monomial(std::move(vars)));
	}

	std::string digits()
	{
		std::string r;
		while (std::isdigit(static_cast<unsigned char>(peek())))
			r.push_back(get());
		if (r.empty())
			fail("expected digits");
		return r;
	}

	[[noreturn]] void fail(std::string const &what) const
	{
		throw std::invalid_argument("ParamPoly: " + what + " at position " + std::to_string(pos_) + " in '" +
		                            std::string(text_) + "'");
	}

	void skip_ws()
	{
		while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
			++pos_;
	}
	bool at_end() const { return pos_ >= text_.size(); }
	char peek() const { return at_end() ? '\0' : text_[pos_]; }
	char get() { return at_end() ? '\0' : text_[pos_++]; }

	std::string_view text_;
	size_t pos_ = 0;
};

} // namespace

ParamPoly ParamPoly::parse(std::string_view text) { return PolyParser(text).parse(); }

} // namespace ncbinom
