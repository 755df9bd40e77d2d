#include <pybind11/pybind11.h>
#include <pybind11/operators.h>
#include <pybind11/stl.h>

#include <optional>
#include <stdexcept>
#include <string>

#include "ncbinom/binomial.hpp"
#include "ncbinom/diffop.hpp"
#include "ncbinom/freealg.hpp"
#include "ncbinom/rewrite.hpp"
#include "ncbinom/scalars.hpp"
#include "ncbinom/verify.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace ncbinom;

#define STRINGIFY(x) #x
#define MACRO_STRINGIFY(x) STRINGIFY(x)

namespace {

Alphabet alphabet_of(std::optional<RelationSystem> const &system)
{
	return system ? system->alphabet() : ab_alphabet();
}

std::map<std::string, Rational> to_bindings(std::map<std::string, std::string> const &values)
{
	std::map<std::string, Rational> r;
	for (auto const &[k, v] : values)
		r.emplace(k, Rational::parse(v));
	return r;
}

template <class E>
E pick(std::string const &name, std::initializer_list<std::pair<char const *, E>> options)
{
	for (auto const &[n, e] : options)
		if (name == n)
			return e;
	throw py::value_error("unknown option '" + name + "'");
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "Exact non-commutative binomial expansions";

	py::class_<ParamPoly>(m, "ParamPoly")
	    .def(py::init([](long c) { return ParamPoly(c); }), "constant"_a = 0)
	    .def_static("parse", &ParamPoly::parse)
	    .def_static("var", &ParamPoly::var, "name"_a, "power"_a = 1)
	    .def("is_zero", &ParamPoly::is_zero)
	    .def(
	        "eval", [](ParamPoly const &p, std::map<std::string, std::string> const &b) {
		        return p.eval(to_bindings(b)).to_string();
	        },
	        "bindings"_a, "Substitute rational values given as strings, e.g. {'h': '1/2'}.")
	    .def(py::self + py::self)
	    .def(py::self - py::self)
	    .def(py::self * py::self)
	    .def(py::self == py::self)
	    .def("__str__", &ParamPoly::to_string)
	    .def("__repr__", [](ParamPoly const &p) { return "ParamPoly('" + p.to_string() + "')"; });

	py::class_<NCPoly>(m, "NCPoly")
	    .def("is_zero", &NCPoly::is_zero)
	    .def("degree", &NCPoly::degree)
	    .def("to_json", [](NCPoly const &p) { return p.to_json().dump(); })
	    .def("generators", [](NCPoly const &p) {
		    std::vector<std::string> names;
		    for (auto const &g : p.alphabet().generators())
			    names.push_back(g.name);
		    return names;
	    })
	    .def(py::self + py::self)
	    .def(py::self - py::self)
	    .def(py::self * py::self)
	    .def(py::self == py::self)
	    .def("__str__", &NCPoly::to_string)
	    .def("__repr__", [](NCPoly const &p) { return "NCPoly('" + p.to_string() + "')"; });

	py::class_<Poly1>(m, "Poly1")
	    .def("to_json", [](Poly1 const &p) { return p.to_json().dump(); })
	    .def_static("from_json", [](std::string const &s) { return Poly1::from_json(nlohmann::json::parse(s)); })
	    .def("coeffs", [](Poly1 const &p) {
		    std::map<unsigned, std::string> r;
		    for (auto const &[d, c] : p.coeffs())
			    r.emplace(d, c.to_string());
		    return r;
	    })
	    .def(py::self == py::self)
	    .def("__str__", &Poly1::to_string)
	    .def("__repr__", [](Poly1 const &p) { return "Poly1('" + p.to_string() + "')"; });

	py::class_<RelationSystem>(m, "RelationSystem")
	    .def_static(
	        "family",
	        [](std::string const &name) {
		        auto f = parse_family(name);
		        if (!f)
			        throw py::value_error("unknown relation family '" + name + "'");
		        return make_family(*f);
	        },
	        "name"_a)
	    .def_static(
	        "from_json", [](std::string const &s, std::string const &name) {
		        return RelationSystem::from_json(nlohmann::json::parse(s), name);
	        },
	        "text"_a, "name"_a = "custom")
	    .def_property_readonly("name", &RelationSystem::name)
	    .def("gen", [](RelationSystem const &s, std::string const &name) { return NCPoly::gen(s.alphabet(), name); })
	    .def("word", [](RelationSystem const &s, std::vector<std::string> const &letters) {
		    return NCPoly::word(s.alphabet(), letters);
	    })
	    .def("validate", [](RelationSystem const &s) {
		    auto r = s.validate();
		    return py::dict("ok"_a = r.ok, "violations"_a = r.violations, "warnings"_a = r.warnings);
	    })
	    .def(
	        "normal_form",
	        [](RelationSystem const &s, NCPoly const &p, std::string const &strategy) {
		        return s.normal_form(
		            p, pick<Strategy>(strategy, {{"leftmost", Strategy::leftmost}, {"rightmost", Strategy::rightmost}}));
	        },
	        "p"_a, "strategy"_a = "leftmost")
	    .def("quotient_eq", &RelationSystem::quotient_eq)
	    .def("to_json", [](RelationSystem const &s) { return s.to_json().dump(); });

	py::register_exception<RewriteError>(m, "RewriteError");

	m.def("ab_gen", [](std::string const &name) { return NCPoly::gen(ab_alphabet(), name); });
	m.def("nc_pow", &nc_pow);
	m.def("nc_derivation", &nc_derivation);
	m.def("nc_a_plus_db_pow_one", &nc_a_plus_db_pow_one);

	auto engine = [&m](char const *name, NCPoly (*fn)(Alphabet const &, unsigned)) {
		m.def(
		    name, [fn](unsigned n, std::optional<RelationSystem> const &system) { return fn(alphabet_of(system), n); },
		    "n"_a, "system"_a = py::none());
	};
	engine("m_n", &m_n);
	engine("brute_expand", &brute_expand);
	engine("theorem1_expand", &theorem1_expand);
	engine("corollary1_expand", &corollary1_expand);
	engine("theorem2_expand", &theorem2_expand);
	engine("lemma3_defect", &lemma3_defect);
	engine("lemma4_defect", &lemma4_defect);
	engine("closed_form_hsq", &closed_form_hsq);
	m.def(
	    "closed_form_weyl", [](unsigned n) { return closed_form_weyl(make_family(Family::weyl).alphabet(), n); }, "n"_a);
	m.def(
	    "essential_d",
	    [](unsigned k, std::string const &via, std::optional<RelationSystem> const &system) {
		    return essential_d(alphabet_of(system), k,
		                       pick<DRoute>(via, {{"recurrence", DRoute::recurrence}, {"difference", DRoute::difference}}));
	    },
	    "k"_a, "via"_a = "recurrence", "system"_a = py::none());
	m.def(
	    "gamma", [](unsigned n) { return gamma(n).value; }, "n"_a);
	m.def(
	    "weyl_coeff",
	    [](unsigned n, unsigned k, std::string const &via) {
		    try
		    {
			    return weyl_coeff(make_family(Family::weyl).alphabet(), n, k,
			                      pick<WeylRoute>(via, {{"recurrence", WeylRoute::recurrence}, {"closed", WeylRoute::closed}}))
			        .value;
		    }
		    catch (std::out_of_range const &e)
		    {
			    throw py::value_error(e.what());
		    }
	    },
	    "n"_a, "k"_a, "via"_a = "closed");
	m.def(
	    "exp_identity_defect",
	    [](std::string const &which, unsigned order) {
		    return exp_identity_defect(
		        pick<ExpIdentity>(which, {{"corollary2", ExpIdentity::corollary2}, {"corollary3", ExpIdentity::corollary3}}),
		        order);
	    },
	    "which"_a, "order"_a);
	m.def(
	    "expand",
	    [](unsigned n, std::string const &method, std::optional<RelationSystem> const &system) {
		    auto mth = parse_method(method);
		    if (!mth)
			    throw py::value_error("unknown method '" + method + "'");
		    try
		    {
			    return expand(n, *mth, system).to_json().dump();
		    }
		    catch (std::invalid_argument const &e)
		    {
			    throw py::value_error(e.what());
		    }
	    },
	    "n"_a, "method"_a = "theorem1", "system"_a = py::none(), "Returns the expansion report as a JSON string.");

	m.def(
	    "hermite_he",
	    [](unsigned n, std::string const &via) {
		    return hermite_he(n, pick<HermiteRoute>(via, {{"operator", HermiteRoute::operator_power},
		                                                  {"explicit_sum", HermiteRoute::explicit_sum},
		                                                  {"recurrence_oracle", HermiteRoute::recurrence}}));
	    },
	    "n"_a, "via"_a = "operator");
	m.def("lambda_expansion", &lambda_expansion, "n"_a);
	m.def("x2d_check", &x2d_check, "n"_a, "seed_degree"_a);

	m.def(
	    "run_suite",
	    [](std::string const &suite, unsigned max_n, std::uint64_t seed) {
		    try
		    {
			    auto report = run_suite(suite, max_n, seed);
			    return py::make_tuple(report.passed(), report.to_text());
		    }
		    catch (std::invalid_argument const &e)
		    {
			    throw py::value_error(e.what());
		    }
	    },
	    "suite"_a, "max_n"_a = 8, "seed"_a = 0);

#ifdef VERSION_INFO
	m.attr("__version__") = MACRO_STRINGIFY(VERSION_INFO);
#else
	m.attr("__version__") = "dev";
#endif
}
