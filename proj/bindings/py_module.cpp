#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fgrade/session.hpp"

namespace py = pybind11;
using namespace fgrade;

namespace {

py::object json_loads(const std::string& text)
{
    return py::module_::import("json").attr("loads")(text);
}

py::object extnat_py(const ExtNat& v)
{
    if (v.is_infinite())
        return py::str("infinity");
    return py::int_(v.value());
}

py::dict report_py(const FGradeReport& r)
{
    py::dict d;
    d["method"] = method_name(r.method);
    d["value"] = extnat_py(r.value);
    d["witness_degree"] = r.witness_degree ? py::object(py::int_(*r.witness_degree)) : py::none();
    d["witness_generator"] =
        r.witness_generator ? py::object(py::str(r.witness_generator->to_string())) : py::none();
    return d;
}

py::dict certificate_py(const FRSCertificate& c)
{
    py::dict d;
    d["valid"] = c.valid;
    py::list steps;
    for (const FRSStep& s : c.steps) {
        py::dict step;
        step["element"] = s.element.to_string();
        step["contained"] = s.verdict.contained;
        step["witness"] = s.verdict.witness ? py::object(py::str(s.verdict.witness->to_string()))
                                            : py::none();
        steps.append(step);
    }
    d["steps"] = steps;
    d["failure_index"] = c.failure_index ? py::object(py::int_(*c.failure_index)) : py::none();
    return d;
}

std::optional<std::vector<Ideal>> primes_opt(const py::object& primes)
{
    if (primes.is_none())
        return std::nullopt;
    return primes.cast<std::vector<Ideal>>();
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "filter-grade engine: Groebner bases, Koszul/Ext homology and"
              " filter regular sequence invariants over polynomial rings";

    py::register_exception<precondition_error>(m, "PreconditionError");
    py::register_exception<search_exhausted>(m, "SearchExhausted");
    py::register_exception<internal_error>(m, "EngineError");
    py::register_exception<parse_error>(m, "ParseError");

    py::class_<PolyRing>(m, "PolyRing")
        .def(py::init([](const std::vector<std::string>& vars, const std::string& field,
                         const std::string& order) {
                 Field f = Field::rationals();
                 if (field != "QQ") {
                     if (field.rfind("Fp(", 0) != 0 || field.back() != ')')
                         throw precondition_error("field must be 'QQ' or 'Fp(p)'");
                     f = Field::prime(std::stoull(field.substr(3, field.size() - 4)));
                 }
                 return PolyRing(vars, f, order_kind_from_string(order));
             }),
             py::arg("vars"), py::arg("field") = "QQ", py::arg("order") = "grevlex")
        .def_property_readonly("nvars", &PolyRing::nvars)
        .def_property_readonly("vars", &PolyRing::var_names)
        .def("__repr__", [](const PolyRing& r) {
            std::string s = r.field().to_string() + "[";
            for (int i = 0; i < r.nvars(); ++i)
                s += (i ? "," : "") + r.var_name(i);
            return s + "] order=" + r.order().to_string();
        });

    py::class_<Polynomial>(m, "Polynomial")
        .def("__repr__", &Polynomial::to_string)
        .def("__str__", &Polynomial::to_string)
        .def("__add__", &Polynomial::operator+)
        .def("__sub__", static_cast<Polynomial (Polynomial::*)(const Polynomial&) const>(
                            &Polynomial::operator-))
        .def("__mul__", &Polynomial::operator*)
        .def("__pow__", &Polynomial::pow)
        .def("__eq__", &Polynomial::operator==)
        .def_property_readonly("is_zero", &Polynomial::is_zero)
        .def_property_readonly("degree", &Polynomial::degree);

    m.def("poly", &parse_polynomial, py::arg("ring"), py::arg("text"),
          "parse a polynomial in the session syntax");

    py::class_<Ideal>(m, "Ideal")
        .def(py::init([](const PolyRing& ring, const std::vector<std::string>& gens) {
                 std::vector<Polynomial> ps;
                 for (const std::string& g : gens)
                     ps.push_back(parse_polynomial(ring, g));
                 return Ideal(ring, std::move(ps));
             }),
             py::arg("ring"), py::arg("generators"))
        .def(py::init<PolyRing, std::vector<Polynomial>>())
        .def_property_readonly("generators",
                               [](const Ideal& I) {
                                   std::vector<std::string> out;
                                   for (const Polynomial& g : I.generators())
                                       out.push_back(g.to_string());
                                   return out;
                               })
        .def("groebner",
             [](const Ideal& I) {
                 std::vector<std::string> out;
                 for (const Polynomial& g : I.groebner().elements())
                     out.push_back(g.to_string());
                 return out;
             })
        .def("__repr__", [](const Ideal& I) {
            std::string s = "(";
            for (size_t i = 0; i < I.generators().size(); ++i)
                s += (i ? ", " : "") + I.generators()[i].to_string();
            return s + ")";
        });

    py::class_<FPModule>(m, "FPModule")
        .def_static("free", &FPModule::free, py::arg("ring"), py::arg("rank"))
        .def_static("cyclic",
                    [](const PolyRing& ring, const std::vector<std::string>& gens) {
                        std::vector<Polynomial> ps;
                        for (const std::string& g : gens)
                            ps.push_back(parse_polynomial(ring, g));
                        return FPModule::cyclic(ring, std::move(ps));
                    },
                    py::arg("ring"), py::arg("generators"))
        .def_property_readonly("ambient_rank", &FPModule::ambient_rank);

    m.def("direct_sum", &direct_sum);
    m.def("is_zero", &is_zero);
    m.def("annihilator", [](const FPModule& N) {
        std::vector<std::string> out;
        for (const Polynomial& g : annihilator(N).generators())
            out.push_back(g.to_string());
        return out;
    });
    m.def("module_dim", [](const FPModule& N) -> py::object {
        std::optional<int> d = module_dim(N);
        return d ? py::object(py::int_(*d)) : py::none();
    });
    m.def("krull_dim", [](const Ideal& I) -> py::object {
        std::optional<int> d = krull_dim(I);
        return d ? py::object(py::int_(*d)) : py::none();
    });
    m.def("ideal_member",
          [](const std::string& f, const Ideal& I) {
              return ideal_member(parse_polynomial(I.ring(), f), I);
          });
    m.def("radical_member",
          [](const std::string& f, const Ideal& I) {
              return radical_member(parse_polynomial(I.ring(), f), I);
          });
    m.def("minimal_primes_monomial", &minimal_primes_monomial);
    m.def("quotient_by_elements",
          [](const FPModule& M, const std::vector<std::string>& xs) {
              std::vector<Polynomial> ps;
              for (const std::string& x : xs)
                  ps.push_back(parse_polynomial(M.ring(), x));
              return quotient_by_elements(M, ps);
          });

    m.def("depth_grade",
          [](const Ideal& b, const FPModule& M) { return extnat_py(depth_grade(b, M)); });
    m.def("fgrade_ext",
          [](const Ideal& a, const Ideal& b, const FPModule& M) {
              return report_py(fgrade_ext(a, b, M));
          });
    m.def("fgrade_koszul",
          [](const Ideal& a, const std::vector<std::string>& ys, const FPModule& M) {
              std::vector<Polynomial> ps;
              for (const std::string& y : ys)
                  ps.push_back(parse_polynomial(M.ring(), y));
              return report_py(fgrade_koszul(a, ps, M));
          });
    m.def("fgrade_prime_min",
          [](const Ideal& a, const Ideal& b, const FPModule& M) {
              return report_py(fgrade_prime_min(a, b, M));
          });
    m.def("check_frs",
          [](const std::vector<std::string>& xs, const Ideal& a, const FPModule& M) {
              std::vector<Polynomial> ps;
              for (const std::string& x : xs)
                  ps.push_back(parse_polynomial(M.ring(), x));
              return certificate_py(check_frs(ps, a, M));
          });
    m.def("max_frs",
          [](const Ideal& a, const Ideal& b, const FPModule& M, uint64_t seed, int retries) {
              MaxFRSResult r = max_frs(a, b, M, seed, retries);
              py::dict d = certificate_py(r.certificate);
              d["length"] = static_cast<int>(r.certificate.steps.size());
              d["fgrade_value"] = extnat_py(r.cross_check);
              d["seed"] = r.seed;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("M"), py::arg("seed") = 1, py::arg("retries") = 64);
    m.def("fgrade_quotient_step",
          [](const Ideal& a, const Ideal& b, const FPModule& M, const std::string& x) {
              auto [before, after] = fgrade_quotient_step(a, b, M, parse_polynomial(M.ring(), x));
              return py::make_tuple(extnat_py(before.value), extnat_py(after.value));
          });

    m.def("check_fmodule",
          [](const Ideal& a, const Ideal& b, const FPModule& M, const py::object& primes) {
              FModuleReport rep = check_fmodule(a, b, M, primes_opt(primes));
              py::dict d;
              d["verdict"] = verdict_name(rep.verdict);
              py::list rows;
              for (const FModuleRow& row : rep.rows) {
                  py::dict r;
                  std::vector<std::string> pg;
                  for (const Polynomial& g : row.prime.generators())
                      pg.push_back(g.to_string());
                  r["prime"] = pg;
                  r["fgrade"] = row.fgrade;
                  r["dim_bound"] = row.dim_bound;
                  r["equal"] = row.equal;
                  rows.append(r);
              }
              d["rows"] = rows;
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("M"), py::arg("primes") = py::none());
    m.def("check_bcm", [](const Ideal& b, const FPModule& M) {
        BcmResult r = check_bcm(b, M);
        py::dict d;
        d["holds"] = r.holds;
        d["depth"] = r.depth;
        d["dim_mbm"] = r.dim_mbm;
        d["dim_m"] = r.dim_m;
        return d;
    });

    m.def("run_script",
          [](const std::string& text, const py::object& seed, bool timing) {
              RunOptions opts;
              if (!seed.is_none())
                  opts.default_seed = seed.cast<uint64_t>();
              opts.timing = timing;
              RunResult res = fgrade::run(parse_session(text), opts);
              py::dict d;
              d["document"] = json_loads(res.json_text);
              d["exit_code"] = res.exit_code;
              return d;
          },
          py::arg("text"), py::arg("seed") = py::none(), py::arg("timing") = false,
          "parse and execute a session script, returning the JSON document");
}
