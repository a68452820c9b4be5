// charone: command-line front end over .sr semiring tables.
// Exit codes: 0 success, 1 verification failure, 2 input error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "charone/corpus.hpp"
#include "charone/frac_ideal.hpp"
#include "charone/integrality.hpp"
#include "charone/valuation_order.hpp"

using namespace charone;
using nlohmann::ordered_json;

namespace {

  // Raised for anything the user can fix: unreadable files, bad element
  // names, tables too large for an enumeration.
  struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  struct Outcome {
    std::vector<std::string>   lines;
    ordered_json               result    = ordered_json::object();
    ordered_json               witnesses = ordered_json::array();
    std::optional<std::string> counterexample;
  };

  SemiringTable read_table(std::string const& path) {
    std::string text;
    if (std::filesystem::exists(path)) {
      std::ifstream      in(path);
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    } else if (auto bundled = bundled_table(path)) {
      text = *bundled;
    } else {
      throw InputError("cannot open " + path);
    }
    try {
      return parse_semiring(text);
    } catch (ParseError const& e) {
      throw InputError(path + ": " + e.what());
    }
  }

  FiniteSemiring load(std::string const& path) {
    auto table = read_table(path);
    auto v     = validate(table);
    if (!v.empty()) {
      throw InputError(path + ": " + v.front().describe());
    }
    return FiniteSemiring(std::move(table));
  }

  Subset subalgebra(FiniteSemiring const& A, std::string const& list) {
    Subset s;
    try {
      s = parse_subset(A, list);
    } catch (std::exception const& e) {
      throw InputError(e.what());
    }
    if (!s[A.zero()] || !s[A.one()]) {
      throw InputError(format_subset(A, s) + " must contain 0 and 1");
    }
    for (Element x = 0; x < A.size(); ++x) {
      for (Element y = 0; y < A.size(); ++y) {
        if (s[x] && s[y] && (!s[A.add(x, y)] || !s[A.mul(x, y)])) {
          throw InputError(format_subset(A, s) + " is not closed under "
                           + (s[A.add(x, y)] ? "*" : "+") + " at "
                           + A.element_name(x) + ", " + A.element_name(y));
        }
      }
    }
    return s;
  }

  ordered_json names(FiniteSemiring const& A, Subset const& s) {
    ordered_json out = ordered_json::array();
    for (Element x = 0; x < A.size(); ++x) {
      if (s[x]) {
        out.push_back(A.element_name(x));
      }
    }
    return out;
  }

  ordered_json classes_json(FiniteSemiring const& A, Congruence const& c) {
    ordered_json out = ordered_json::array();
    for (auto const& cls : c.classes()) {
      ordered_json members = ordered_json::array();
      for (auto x : cls) {
        members.push_back(A.element_name(x));
      }
      out.push_back(members);
    }
    return out;
  }

  // A total preorder as "0 < a ~ b < 1".
  std::string format_chain(FiniteSemiring const& R, Relation const& rel) {
    std::map<std::size_t, std::vector<Element>> levels;
    for (Element x = 0; x < R.size(); ++x) {
      std::size_t below = 0;
      for (Element y = 0; y < R.size(); ++y) {
        below += rel.holds(y, x);
      }
      levels[below].push_back(x);
    }
    std::string out;
    for (auto const& [level, xs] : levels) {
      out += out.empty() ? "" : " < ";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i == 0 ? "" : " ~ ") + R.element_name(xs[i]);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////

  Outcome run_validate(std::string const& path) {
    auto    table = read_table(path);
    Outcome o;
    auto    violations = validate(table);
    if (!violations.empty()) {
      o.result["valid"] = false;
      for (auto const& v : violations) {
        o.lines.push_back("invalid: " + v.describe());
        o.witnesses.push_back({{"axiom", v.axiom}, {"elements", v.witness}});
      }
      o.counterexample = violations.front().describe();
      return o;
    }
    FiniteSemiring R(std::move(table));
    bool           simple = is_simple(R);
    bool           ug     = is_unitgenerated(R);
    o.result = {{"valid", true},
                {"name", R.name()},
                {"elements", R.size()},
                {"simple", simple},
                {"unitgenerated", ug}};
    o.lines.push_back("ok: idempotent semiring, " + std::to_string(R.size())
                      + " elements, " + (simple ? "simple" : "not simple")
                      + (ug ? ", unitgenerated" : ""));
    return o;
  }

  Outcome run_orders(std::string const& path, bool degenerate) {
    auto                  R = load(path);
    std::vector<Relation> all;
    try {
      all = enumerate_valuation_orders(R);
    } catch (std::length_error const& e) {
      throw InputError(e.what());
    }
    Outcome     o;
    std::size_t good = 0;
    for (auto const& rel : all) {
      bool deg = is_degenerate(rel, R);
      good += !deg;
      if (deg && !degenerate) {
        continue;
      }
      std::string chain = format_chain(R, rel);
      o.lines.push_back("  " + chain + (deg ? "  (degenerate)" : ""));
      o.witnesses.push_back({{"order", chain}, {"degenerate", deg}});
    }
    o.lines.insert(o.lines.begin(), std::to_string(all.size())
                                        + " valuation orders ("
                                        + std::to_string(good)
                                        + " nondegenerate)");
    o.result = {{"orders", all.size()}, {"nondegenerate", good}};
    return o;
  }

  Outcome run_congruences(std::string const& path, std::string const& filter) {
    auto                    R = load(path);
    std::vector<Congruence> all;
    try {
      all = congruences(R);
    } catch (std::length_error const& e) {
      throw InputError(e.what());
    }
    Outcome     o;
    std::size_t shown = 0;
    for (auto const& c : all) {
      bool keep = filter.empty() || (filter == "prime" && is_prime(c, R))
                  || (filter == "qc" && is_qc(c, R))
                  || (filter == "radical" && radical_test(c, R));
      if (keep) {
        o.lines.push_back("  " + format_congruence(R, c));
        o.witnesses.push_back(classes_json(R, c));
        ++shown;
      }
    }
    std::string kind = filter.empty() ? "" : filter + " ";
    o.lines.insert(o.lines.begin(),
                   std::to_string(shown) + " " + kind + "congruences");
    o.result = {{"filter", filter.empty() ? "all" : filter}, {"count", shown}};
    return o;
  }

  Outcome run_reduce(std::string const& path) {
    auto    R   = load(path);
    auto    red = reduction(R);
    Outcome o;
    std::string kernel = format_congruence(R, red.kernel);
    o.lines.push_back("kernel: " + kernel);
    if (red.degenerate) {
      o.lines.push_back("no prime congruence: the reduction is trivial");
    }
    std::istringstream table(format_semiring(red.quotient.semiring.table()));
    for (std::string line; std::getline(table, line);) {
      o.lines.push_back(line);
    }
    o.result = {{"kernel", classes_json(R, red.kernel)},
                {"degenerate", red.degenerate},
                {"elements", red.quotient.semiring.size()},
                {"reduced", red.kernel == Congruence::equality(R.size())}};
    return o;
  }

  Outcome run_closure(std::string const& path, std::string const& sub) {
    auto    A = load(path);
    auto    R = subalgebra(A, sub);
    Outcome o;
    Subset  closure(A.size(), false);
    bool    simple = is_simple(A);
    for (Element x = 0; x < A.size(); ++x) {
      ordered_json w = {{"element", A.element_name(x)}};
      if (simple) {
        if (auto s = is_quasiintegral(A, R, x)) {
          closure[x] = true;
          w["s"]     = A.element_name(*s);
        }
      } else if (auto M = quasiintegral_module(A, R, x)) {
        closure[x]  = true;
        w["module"] = names(A, *M);
      }
      if (auto iw = is_integral(A, R, x)) {
        w["integral"] = format_witness(A, *iw);
      }
      o.witnesses.push_back(w);
    }
    bool extensible = is_extensible(A, R);
    o.lines.push_back("quasiintegral closure of " + format_subset(A, R) + ": "
                      + format_subset(A, closure));
    o.lines.push_back(std::string("extensible: ") + (extensible ? "yes" : "no"));
    o.result = {{"scalars", names(A, R)},
                {"closure", names(A, closure)},
                {"extensible", extensible}};
    return o;
  }

  Outcome run_contract(std::string const& path, std::string const& sub) {
    auto    A = load(path);
    auto    R = subalgebra(A, sub);
    auto    c = contract(A, R);
    auto    q = contraction_semiring(A, c);
    Outcome o;
    Congruence   classes(c.class_of);
    o.lines.push_back(std::to_string(c.number_of_classes()) + " classes over "
                      + format_subset(A, R) + ": "
                      + format_congruence(A, classes));
    std::istringstream table(format_semiring(q.semiring.table()));
    for (std::string line; std::getline(table, line);) {
      o.lines.push_back(line);
    }
    o.result = {{"scalars", names(A, R)},
                {"classes", classes_json(A, classes)},
                {"order", format_chain(q.semiring, Relation::canonical(q.semiring))}};
    if (!is_totally_ordered(q.semiring)) {
      o.result["order"] = nullptr;
    }
    return o;
  }

  Outcome run_admissible(std::string const& path, std::string const& pairs) {
    auto                    R = load(path);
    std::vector<Constraint> S;
    try {
      S = parse_constraints(R, pairs);
    } catch (std::exception const& e) {
      throw InputError(e.what());
    }
    Outcome o;
    auto    a = is_admissible(S, R);
    o.result = {{"constraints", format_constraints(R, S)},
                {"admissible", a.admissible}};
    if (a.admissible) {
      o.lines.push_back("admissible: " + format_constraints(R, S));
      if (a.witness) {
        o.lines.push_back("  witness: " + format_valuation(R, *a.witness));
        o.witnesses.push_back(format_valuation(R, *a.witness));
      }
    } else {
      o.lines.push_back("not admissible: " + format_constraints(R, S));
    }
    auto coherence = check_finite_admissibility_coherence(S, R);
    o.result["coherent"] = coherence.holds;
    if (!coherence) {
      o.counterexample = coherence.counterexample;
    }
    return o;
  }

  Outcome run_extend(std::int64_t p, std::int64_t d) {
    ExtensionReport report;
    try {
      report = extend_valuation(p, d);
    } catch (std::invalid_argument const& e) {
      throw InputError(e.what());
    }
    QuadField F(d);
    Outcome   o;
    o.lines.push_back("p = " + std::to_string(p) + ", d = " + std::to_string(d)
                      + ": " + report.datum.kind + ", "
                      + std::to_string(report.checks.size()) + " extension"
                      + (report.checks.size() == 1 ? "" : "s"));
    ordered_json exts = ordered_json::array();
    for (auto const& c : report.checks) {
      auto const& e = c.extension;
      o.lines.push_back("  e=" + std::to_string(e.e) + " f=" + std::to_string(e.f)
                        + " pi=" + F.format(e.pi) + " scale=" + e.scale.str());
      ordered_json checks = {{"valuation", c.valuation.holds},
                             {"restriction", c.restriction.holds},
                             {"hom", c.hom.holds}};
      exts.push_back({{"e", e.e},
                      {"f", e.f},
                      {"pi", F.format(e.pi)},
                      {"scale", e.scale.str()},
                      {"checks", checks}});
      for (auto const* v : {&c.valuation, &c.restriction, &c.hom}) {
        if (!*v && !o.counterexample) {
          o.counterexample = v->counterexample;
        }
      }
    }
    if (!report.consistency && !o.counterexample) {
      o.counterexample = report.consistency.counterexample;
    }
    o.lines.push_back(std::string("verification: ")
                      + (report.passed() ? "PASS" : "FAIL"));
    o.witnesses = exts;
    o.result    = {{"kind", report.datum.kind},
                   {"extensions", report.checks.size()},
                   {"passed", report.passed()}};
    return o;
  }

  Outcome run_corpus() {
    Outcome o;
    for (auto const& e : bundled_corpus()) {
      FiniteSemiring R(parse_semiring(e.text));
      o.lines.push_back(std::string(e.file) + "  " + R.name() + ", "
                        + std::to_string(R.size()) + " elements");
      o.witnesses.push_back({{"file", e.file}, {"name", R.name()},
                             {"elements", R.size()}});
    }
    o.result = {{"tables", bundled_corpus().size()}};
    return o;
  }

  int emit(std::string const& command, std::string const& input,
           Outcome const& o, bool json) {
    int code = o.counterexample ? 1 : 0;
    if (json) {
      ordered_json out = {{"command", command},
                          {"input", input},
                          {"result", o.result},
                          {"witnesses", o.witnesses}};
      if (o.counterexample) {
        out["counterexample"] = *o.counterexample;
      }
      std::cout << out.dump(2) << '\n';
      return code;
    }
    for (auto const& line : o.lines) {
      std::cout << line << '\n';
    }
    if (o.counterexample) {
      std::cout << "counterexample: " << *o.counterexample << '\n';
    }
    return code;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite idempotent semirings, valuations and integrality"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  std::string file, sub, pairs;
  bool        degenerate = false;
  bool        prime = false, qc = false, radical = false;
  std::int64_t p = 0, d = 0;

  auto* validate = app.add_subcommand("validate", "check the semiring axioms");
  validate->add_option("file", file)->required();

  auto* orders = app.add_subcommand("orders", "enumerate valuation orders");
  orders->add_option("file", file)->required();
  orders->add_flag("--degenerate", degenerate, "also list degenerate orders");

  auto* congs = app.add_subcommand("congruences", "list congruences");
  congs->add_option("file", file)->required();
  auto* fp = congs->add_flag("--prime", prime, "prime congruences only");
  auto* fq = congs->add_flag("--qc", qc, "quotient-cancellative only");
  auto* fr = congs->add_flag("--radical", radical, "radical only");
  fp->excludes(fq)->excludes(fr);
  fq->excludes(fr);

  auto* reduce = app.add_subcommand("reduce", "quotient by the prime radical");
  reduce->add_option("file", file)->required();

  auto* closure = app.add_subcommand("closure", "quasiintegral closure of a subalgebra");
  closure->add_option("file", file)->required();
  closure->add_option("--sub", sub, "elements of the subalgebra, comma separated")
      ->required();

  auto* contract = app.add_subcommand("contract", "contraction over a subalgebra");
  contract->add_option("file", file)->required();
  contract->add_option("--sub", sub, "elements of the subalgebra, comma separated")
      ->required();

  auto* admissible = app.add_subcommand("admissible", "test a set of strict inequalities");
  admissible->add_option("file", file)->required();
  admissible->add_option("--pairs", pairs, "constraints such as \"1>0,g>a\"")
      ->required();

  auto* extend = app.add_subcommand("extend", "extend the p-adic valuation to Q(sqrt d)");
  extend->add_option("--p", p, "prime")->required();
  extend->add_option("--d", d, "squarefree integer")->required()->allow_extra_args(false);

  auto* corpus = app.add_subcommand("corpus", "list bundled tables");

  for (auto* s : {validate, orders, congs, reduce, closure, contract, admissible,
                  extend, corpus}) {
    s->add_flag("--json", json, "machine-readable output");
  }

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) {
      return emit("validate", file, run_validate(file), json);
    }
    if (*orders) {
      return emit("orders", file, run_orders(file, degenerate), json);
    }
    if (*congs) {
      std::string filter = prime ? "prime" : qc ? "qc" : radical ? "radical" : "";
      return emit("congruences", file, run_congruences(file, filter), json);
    }
    if (*reduce) {
      return emit("reduce", file, run_reduce(file), json);
    }
    if (*closure) {
      return emit("closure", file, run_closure(file, sub), json);
    }
    if (*contract) {
      return emit("contract", file, run_contract(file, sub), json);
    }
    if (*admissible) {
      return emit("admissible", file, run_admissible(file, pairs), json);
    }
    if (*extend) {
      std::string input = "p=" + std::to_string(p) + " d=" + std::to_string(d);
      return emit("extend", input, run_extend(p, d), json);
    }
    if (*corpus) {
      return emit("corpus", "", run_corpus(), json);
    }
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
