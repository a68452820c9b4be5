#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "charone/corpus.hpp"
#include "charone/frac_ideal.hpp"
#include "charone/integrality.hpp"
#include "charone/valuation_order.hpp"

namespace py = pybind11;
using namespace charone;

namespace {

  using Names = std::vector<std::string>;

  Names names(FiniteSemiring const& R, Subset const& s) {
    Names out;
    for (Element x = 0; x < R.size(); ++x) {
      if (s[x]) {
        out.push_back(R.element_name(x));
      }
    }
    return out;
  }

  Subset subset(FiniteSemiring const& R, Names const& list) {
    Subset s(R.size(), false);
    for (auto const& n : list) {
      s[R.find(n)] = true;
    }
    return s;
  }

  std::vector<Names> classes(FiniteSemiring const& R, Congruence const& c) {
    std::vector<Names> out;
    for (auto const& cls : c.classes()) {
      Names members;
      for (auto x : cls) {
        members.push_back(R.element_name(x));
      }
      out.push_back(members);
    }
    return out;
  }

  FiniteSemiring load(std::string const& path) {
    return load_semiring_or_bundled(path);
  }

}  // namespace

PYBIND11_MODULE(_charone, m) {
  m.doc() = "Finite idempotent semirings, valuations and integrality";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<InvalidSemiring>(m, "InvalidSemiring", PyExc_ValueError);

  py::class_<FiniteSemiring>(m, "Semiring")
      .def_static("load", &load, py::arg("path"),
                  "Load a .sr file, or a bundled table by name.")
      .def_static("parse",
                  [](std::string const& text) {
                    return FiniteSemiring(parse_semiring(text));
                  },
                  py::arg("text"))
      .def_property_readonly("name", &FiniteSemiring::name)
      .def_property_readonly("elements",
                             [](FiniteSemiring const& R) {
                               return names(R, R.full_subset());
                             })
      .def("__len__", &FiniteSemiring::size)
      .def("add",
           [](FiniteSemiring const& R, std::string const& x, std::string const& y) {
             return R.element_name(R.add(R.find(x), R.find(y)));
           })
      .def("mul",
           [](FiniteSemiring const& R, std::string const& x, std::string const& y) {
             return R.element_name(R.mul(R.find(x), R.find(y)));
           })
      .def("leq",
           [](FiniteSemiring const& R, std::string const& x, std::string const& y) {
             return R.leq(R.find(x), R.find(y));
           })
      .def("is_simple", [](FiniteSemiring const& R) { return is_simple(R); })
      .def("is_unitgenerated",
           [](FiniteSemiring const& R) { return is_unitgenerated(R); })
      .def("__repr__", [](FiniteSemiring const& R) {
        return "<Semiring " + R.name() + " with " + std::to_string(R.size())
               + " elements>";
      });

  m.def("validate",
        [](std::string const& text) {
          std::vector<std::pair<std::string, Names>> out;
          for (auto const& v : validate(parse_semiring(text))) {
            out.emplace_back(v.axiom, v.witness);
          }
          return out;
        },
        py::arg("text"), "Axiom violations of a table, one per axiom.");

  m.def("bundled_corpus", [] {
    std::vector<std::string> out;
    for (auto const& e : bundled_corpus()) {
      out.emplace_back(e.file);
    }
    return out;
  });

  m.def("congruences",
        [](FiniteSemiring const& R, std::string const& filter) {
          std::vector<std::vector<Names>> out;
          for (auto const& c : congruences(R)) {
            bool keep = filter == "all" || (filter == "prime" && is_prime(c, R))
                        || (filter == "qc" && is_qc(c, R))
                        || (filter == "radical" && radical_test(c, R));
            if (keep) {
              out.push_back(classes(R, c));
            }
          }
          return out;
        },
        py::arg("R"), py::arg("filter") = "all");

  m.def("reduction_kernel",
        [](FiniteSemiring const& R) { return classes(R, reduction(R).kernel); });

  m.def("valuation_orders",
        [](FiniteSemiring const& R, bool nondegenerate) {
          return enumerate_valuation_orders(R, nondegenerate).size();
        },
        py::arg("R"), py::arg("nondegenerate") = false,
        "Number of valuation orders.");

  m.def("is_admissible",
        [](FiniteSemiring const& R, std::string const& pairs) {
          return is_admissible(parse_constraints(R, pairs), R).admissible;
        },
        py::arg("R"), py::arg("pairs"));

  m.def("contract",
        [](FiniteSemiring const& A, Names const& scalars) {
          auto c = contract(A, subset(A, scalars));
          return classes(A, Congruence(c.class_of));
        },
        py::arg("A"), py::arg("scalars"), "Classes of A over the scalars.");

  m.def("is_integral",
        [](FiniteSemiring const& A, Names const& scalars,
           std::string const& x) -> std::optional<std::string> {
          auto w = is_integral(A, subset(A, scalars), A.find(x));
          if (!w) {
            return std::nullopt;
          }
          return format_witness(A, *w);
        },
        py::arg("A"), py::arg("scalars"), py::arg("x"));

  m.def("is_quasiintegral",
        [](FiniteSemiring const& A, Names const& scalars,
           std::string const& x) -> std::optional<std::string> {
          auto s = is_quasiintegral(A, subset(A, scalars), A.find(x));
          if (!s) {
            return std::nullopt;
          }
          return A.element_name(*s);
        },
        py::arg("A"), py::arg("scalars"), py::arg("x"));

  m.def("quasiintegral_closure",
        [](FiniteSemiring const& A, Names const& scalars) {
          return names(A, quasiintegral_closure(A, subset(A, scalars)));
        },
        py::arg("A"), py::arg("scalars"));

  m.def("is_extensible",
        [](FiniteSemiring const& A, Names const& scalars) {
          return is_extensible(A, subset(A, scalars));
        },
        py::arg("A"), py::arg("scalars"));

  m.def("contraction_lemmas",
        [](std::int64_t radius) {
          std::vector<std::tuple<std::string, std::string, bool>> out;
          for (auto const& l : check_contraction_lemmas(radius)) {
            out.emplace_back(l.name, l.instance, l.verdict.holds);
          }
          return out;
        },
        py::arg("radius") = 8);

  m.def("extend_valuation",
        [](std::int64_t p, std::int64_t d) {
          auto      report = extend_valuation(p, d);
          QuadField F(d);
          py::list  exts;
          for (auto const& c : report.checks) {
            py::dict e;
            e["e"]     = c.extension.e;
            e["f"]     = c.extension.f;
            e["pi"]    = F.format(c.extension.pi);
            e["scale"] = c.extension.scale.str();
            exts.append(e);
          }
          py::dict out;
          out["kind"]       = report.datum.kind;
          out["passed"]     = report.passed();
          out["extensions"] = exts;
          return out;
        },
        py::arg("p"), py::arg("d"));
}
