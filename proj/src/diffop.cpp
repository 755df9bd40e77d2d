#include "ncbinom/diffop.hpp"

#include <stdexcept>

namespace ncbinom {

namespace {

// k (k-1) ... (k-j+1)
Rational falling_factorial(unsigned k, unsigned j)
{
	if (j > k)
		return Rational(0);
	Rational r(1);
	for (unsigned i = 0; i < j; ++i)
		r *= Rational(static_cast<long>(k - i));
	return r;
}

// Renders coefficient c times a (possibly empty) basis element, with the
// leading sign split off so callers can join terms with " + " / " - ".
std::pair<bool, std::string> render_term(ParamPoly const &c, std::string const &basis)
{
	bool single = c.terms().size() == 1;
	bool negative = single && c.terms().begin()->second.sign() < 0;
	ParamPoly mag = negative ? -c : c;
	std::string s;
	if (basis.empty())
		s = single ? mag.to_string() : "(" + mag.to_string() + ")";
	else if (mag.is_one())
		s = basis;
	else if (single)
		s = mag.to_string() + "*" + basis;
	else
		s = "(" + mag.to_string() + ")*" + basis;
	return {negative, s};
}

void append_term(std::string &out, std::pair<bool, std::string> const &term)
{
	if (out.empty())
		out += term.first ? "-" : "";
	else
		out += term.first ? " - " : " + ";
	out += term.second;
}

std::string power_string(char const *var, unsigned k)
{
	if (k == 0)
		return "";
	return k == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(k);
}

} // namespace

// ---------------------------------------------------------------------------

Poly1 Poly1::monomial(unsigned degree, ParamPoly c)
{
	Poly1 p;
	p.add_term(degree, c);
	return p;
}

ParamPoly Poly1::coeff(unsigned degree) const
{
	auto it = coeffs_.find(degree);
	return it == coeffs_.end() ? ParamPoly() : it->second;
}

unsigned Poly1::degree() const { return coeffs_.empty() ? 0 : coeffs_.rbegin()->first; }

void Poly1::add_term(unsigned degree, ParamPoly const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = coeffs_.try_emplace(degree, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			coeffs_.erase(it);
	}
}

Poly1 &Poly1::operator+=(Poly1 const &other)
{
	for (auto const &[d, c] : other.coeffs_)
		add_term(d, c);
	return *this;
}

Poly1 &Poly1::operator-=(Poly1 const &other)
{
	for (auto const &[d, c] : other.coeffs_)
		add_term(d, -c);
	return *this;
}

Poly1 Poly1::scale(ParamPoly const &c) const
{
	Poly1 r;
	for (auto const &[d, coeff] : coeffs_)
		r.add_term(d, coeff * c);
	return r;
}

Poly1 Poly1::bind(std::map<std::string, Rational> const &bindings) const
{
	Poly1 r;
	for (auto const &[d, c] : coeffs_)
		r.add_term(d, ParamPoly(c.eval(bindings)));
	return r;
}

std::string Poly1::to_string() const
{
	if (coeffs_.empty())
		return "0";
	std::string r;
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		append_term(r, render_term(it->second, power_string("x", it->first)));
	return r;
}

nlohmann::ordered_json Poly1::to_json() const
{
	nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
	for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
		coeffs[std::to_string(it->first)] = it->second.to_string();
	nlohmann::ordered_json j;
	j["coeffs"] = std::move(coeffs);
	return j;
}

Poly1 Poly1::from_json(nlohmann::json const &j)
{
	if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object())
		throw std::invalid_argument("Poly1 JSON: expected {\"coeffs\": {...}}");
	Poly1 p;
	for (auto const &[key, value] : j.at("coeffs").items())
	{
		size_t used = 0;
		unsigned long degree = std::stoul(key, &used);
		if (used != key.size())
			throw std::invalid_argument("Poly1 JSON: bad degree key '" + key + "'");
		p.add_term(static_cast<unsigned>(degree), ParamPoly::parse(value.get<std::string>()));
	}
	return p;
}

// ---------------------------------------------------------------------------

DiffOp DiffOp::term(unsigned x_power, unsigned d_order, ParamPoly c)
{
	DiffOp op;
	op.add_term(x_power, d_order, c);
	return op;
}

void DiffOp::add_term(unsigned x_power, unsigned d_order, ParamPoly const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(Key{x_power, d_order}, c);
	if (!inserted)
	{
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

DiffOp &DiffOp::operator+=(DiffOp const &other)
{
	for (auto const &[k, c] : other.terms_)
		add_term(k.first, k.second, c);
	return *this;
}

DiffOp &DiffOp::operator-=(DiffOp const &other)
{
	for (auto const &[k, c] : other.terms_)
		add_term(k.first, k.second, -c);
	return *this;
}

DiffOp operator*(DiffOp const &f, DiffOp const &g)
{
	// x^a D^b x^c D^d = sum_j C(b,j) c!/(c-j)! x^(a+c-j) D^(b-j+d)
	DiffOp r;
	for (auto const &[fk, fc] : f.terms_)
		for (auto const &[gk, gc] : g.terms_)
		{
			auto [a, b] = fk;
			auto [c, d] = gk;
			ParamPoly const coeff = fc * gc;
			for (unsigned j = 0; j <= b && j <= c; ++j)
				r.add_term(a + c - j, b - j + d, coeff.scale(binom_coeff(b, j) * falling_factorial(c, j)));
		}
	return r;
}

DiffOp DiffOp::scale(ParamPoly const &c) const
{
	DiffOp r;
	for (auto const &[k, coeff] : terms_)
		r.add_term(k.first, k.second, coeff * c);
	return r;
}

std::string DiffOp::to_string() const
{
	if (terms_.empty())
		return "0";
	std::string r;
	for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
	{
		auto [a, b] = it->first;
		std::string basis = power_string("x", a);
		if (b > 0)
			basis += (basis.empty() ? "" : "*") + power_string("D", b);
		append_term(r, render_term(it->second, basis));
	}
	return r;
}

// ---------------------------------------------------------------------------

Poly1 op_apply(DiffOp const &op, Poly1 const &p)
{
	Poly1 r;
	for (auto const &[key, oc] : op.terms())
		for (auto const &[deg, pc] : p.coeffs())
		{
			auto [a, b] = key;
			if (b > deg)
				continue;
			r.add_term(deg - b + a, (oc * pc).scale(falling_factorial(deg, b)));
		}
	return r;
}

DiffOp op_compose(DiffOp const &f, DiffOp const &g) { return f * g; }

DiffOp op_pow(DiffOp const &op, unsigned n)
{
	DiffOp r = DiffOp::identity();
	for (unsigned i = 0; i < n; ++i)
		r = op * r;
	return r;
}

DiffOp realize(NCPoly const &p, std::map<std::string, DiffOp> const &images)
{
	Alphabet const &alpha = p.alphabet();
	std::vector<DiffOp const *> image_of(alpha.size(), nullptr);
	for (Letter l = 0; l < alpha.size(); ++l)
		if (auto it = images.find(alpha[l].name); it != images.end())
			image_of[l] = &it->second;

	DiffOp r;
	for (auto const &[w, c] : p.terms())
	{
		DiffOp t = DiffOp::scalar(c);
		for (Letter l : w)
		{
			if (!image_of[l])
				throw std::invalid_argument("realize: no image for generator '" + alpha[l].name + "'");
			t = t * *image_of[l];
		}
		r += t;
	}
	return r;
}

Poly1 hermite_he(unsigned n, HermiteRoute via)
{
	switch (via)
	{
	case HermiteRoute::operator_power:
	{
		DiffOp const step = DiffOp::x() - DiffOp::d();
		Poly1 p = Poly1::constant(1);
		for (unsigned i = 0; i < n; ++i)
			p = op_apply(step, p);
		return p;
	}
	case HermiteRoute::explicit_sum:
	{
		Poly1 p;
		for (unsigned k = 0; k <= n / 2; ++k)
		{
			mpz_class den = factorial(n - 2 * k).numerator() * factorial(k).numerator();
			den <<= k;
			Rational c(factorial(n).numerator(), den);
			p.add_term(n - 2 * k, k % 2 ? -c : c);
		}
		return p;
	}
	case HermiteRoute::recurrence:
	{
		Poly1 prev, cur = Poly1::constant(1);
		for (unsigned m = 0; m < n; ++m)
		{
			Poly1 next;
			for (auto const &[d, c] : cur.coeffs())
				next.add_term(d + 1, c);
			next -= prev.scale(Rational(static_cast<long>(m)));
			prev = std::move(cur);
			cur = std::move(next);
		}
		return cur;
	}
	}
	throw std::invalid_argument("unknown Hermite route");
}

Poly1 lambda_expansion(unsigned n)
{
	Poly1 p;
	for (unsigned k = 0; k <= n / 2; ++k)
	{
		mpz_class den = factorial(n - 2 * k).numerator() * factorial(k).numerator();
		den <<= k;
		p.add_term(n - 2 * k, ParamPoly::term(Rational(factorial(n).numerator(), den), Monomial::var("lambda", k)));
	}
	return p;
}

bool x2d_check(unsigned n, unsigned seed_degree)
{
	DiffOp const a = DiffOp::x();
	DiffOp const b = DiffOp::term(2, 1);
	Poly1 const seed = Poly1::monomial(seed_degree);

	Poly1 lhs = seed;
	for (unsigned i = 0; i < n; ++i)
		lhs = op_apply(a + b, lhs);

	DiffOp rhs;
	for (unsigned k = 0; k <= n; ++k)
	{
		Rational ratio(factorial(n).numerator(), factorial(n - k).numerator());
		rhs += (op_pow(a, k) * op_pow(b, n - k)).scale(ratio);
	}
	return lhs == op_apply(rhs, seed);
}

} // namespace ncbinom
