#include "charone/valuation_order.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace charone {

  Relation Relation::full(std::size_t n) {
    Relation r(n);
    std::fill(r._bits.begin(), r._bits.end(), true);
    return r;
  }

  Relation Relation::canonical(FiniteSemiring const& R) {
    Relation r(R.size());
    for (Element x = 0; x < R.size(); ++x) {
      for (Element y = 0; y < R.size(); ++y) {
        r.set(x, y, R.leq(x, y));
      }
    }
    return r;
  }

  std::size_t Relation::number_of_pairs() const {
    return std::count(_bits.begin(), _bits.end(), true);
  }

  std::string format_relation(FiniteSemiring const& R, Relation const& rel) {
    std::string out;
    for (Element x = 0; x < R.size(); ++x) {
      out += R.element_name(x) + ":";
      for (Element y = 0; y < R.size(); ++y) {
        if (rel.holds(x, y)) {
          out += " " + R.element_name(y);
        }
      }
      out += "\n";
    }
    return out;
  }

  std::string OrderDiagnostic::describe() const {
    if (axiom == 0) {
      return "valuation order";
    }
    static constexpr char const* kAxioms[] = {
        "",
        "transitivity",
        "totality",
        "additive compatibility",
        "refinement of the canonical order",
        "multiplicative compatibility",
        "cancellation"};
    std::string out = "axiom " + std::to_string(axiom) + " (" + kAxioms[axiom]
                      + ") fails at (";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      out += (i == 0 ? "" : ", ") + witness[i];
    }
    return out + ")";
  }

  OrderDiagnostic is_valuation_order(Relation const&       rel,
                                     FiniteSemiring const& R) {
    if (rel.size() != R.size()) {
      throw std::invalid_argument("relation size does not match "
                                  + R.name());
    }
    std::size_t const n  = R.size();
    auto              le = [&](Element x, Element y) { return rel.holds(x, y); };
    auto              fail = [&](int axiom, std::initializer_list<Element> w) {
      OrderDiagnostic d;
      d.axiom = axiom;
      for (auto e : w) {
        d.witness.push_back(R.element_name(e));
      }
      return d;
    };
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (le(x, y) && le(y, z) && !le(x, z)) {
            return fail(1, {x, y, z});
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!le(x, y) && !le(y, x)) {
          return fail(2, {x, y});
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (le(x, y) && !le(R.add(x, z), R.add(y, z))) {
            return fail(3, {x, y, z});
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (R.leq(x, y) && !le(x, y)) {
          return fail(4, {x, y});
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (le(x, y) && !le(R.mul(x, z), R.mul(y, z))) {
            return fail(5, {x, y, z});
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          if (le(R.mul(x, z), R.mul(y, z)) && !le(x, y) && !le(z, R.zero())) {
            return fail(6, {x, y, z});
          }
        }
      }
    }
    return {};
  }

  bool is_degenerate(Relation const& rel, FiniteSemiring const& R) {
    return rel.holds(R.one(), R.zero());
  }

  std::vector<Relation> enumerate_valuation_orders(FiniteSemiring const& R,
                                                   bool        nondegenerate,
                                                   OrderSearch search) {
    std::size_t const n = R.size();
    if (n > kOrderGuard) {
      throw std::length_error("valuation order enumeration is limited to "
                              + std::to_string(kOrderGuard)
                              + " elements, got " + std::to_string(n));
    }
    Relation                                 base(n);
    std::vector<std::pair<Element, Element>> free;
    if (search == OrderSearch::Pruned) {
      base = Relation::canonical(R);
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        if (!base.holds(x, y)) {
          free.emplace_back(x, y);
        }
      }
    }
    std::vector<Relation> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size());
         ++mask) {
      Relation rel = base;
      for (std::size_t i = 0; i < free.size(); ++i) {
        if ((mask >> i) & 1U) {
          rel.set(free[i].first, free[i].second);
        }
      }
      if (is_valuation_order(rel, R)
          && !(nondegenerate && is_degenerate(rel, R))) {
        out.push_back(std::move(rel));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Relation order_from_hom(FiniteSemiring const& R, TableValuation const& v) {
    if (v.values.size() != R.size()) {
      throw std::invalid_argument("map not total");
    }
    Relation rel(R.size());
    for (Element x = 0; x < R.size(); ++x) {
      for (Element y = 0; y < R.size(); ++y) {
        rel.set(x, y, gm_leq(v(x), v(y)));
      }
    }
    return rel;
  }

  FracSemifield frac_semifield(FiniteSemiring const& D) {
    if (D.zero() == D.one()) {
      throw std::domain_error("fraction semifield needs 0 != 1");
    }
    if (!is_cancellative(D)) {
      throw std::domain_error(D.name() + " is not cancellative");
    }
    if (!is_totally_ordered(D)) {
      throw std::domain_error(D.name() + " is not totally ordered");
    }
    std::size_t                              n = D.size();
    std::vector<std::pair<Element, Element>> fractions;
    for (Element s = 0; s < n; ++s) {
      for (Element x = 0; x < n && s != D.zero(); ++x) {
        fractions.emplace_back(x, s);
      }
    }
    // Class representatives: the first fraction of each class.
    std::vector<std::size_t> rep_of(fractions.size());
    std::vector<std::size_t> reps;
    auto same = [&](std::pair<Element, Element> a, std::pair<Element, Element> b) {
      return D.mul(a.first, b.second) == D.mul(b.first, a.second);
    };
    for (std::size_t i = 0; i < fractions.size(); ++i) {
      auto it = std::find_if(reps.begin(), reps.end(), [&](std::size_t r) {
        return same(fractions[r], fractions[i]);
      });
      if (it == reps.end()) {
        rep_of[i] = reps.size();
        reps.push_back(i);
      } else {
        rep_of[i] = it - reps.begin();
      }
    }
    auto index_of = [&](Element x, Element s) -> Element {
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (same(fractions[reps[r]], {x, s})) {
          return r;
        }
      }
      throw std::logic_error("fraction not found");
    };
    SemiringTable t;
    t.name = "Frac(" + D.name() + ")";
    for (auto r : reps) {
      auto [x, s] = fractions[r];
      t.elements.push_back(s == D.one() ? D.element_name(x)
                                        : D.element_name(x) + "/"
                                              + D.element_name(s));
    }
    std::size_t k = reps.size();
    t.add.assign(k, std::vector<Element>(k));
    t.mul = t.add;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        auto [x, s] = fractions[reps[i]];
        auto [y, u] = fractions[reps[j]];
        Element den = D.mul(s, u);
        t.add[i][j] = index_of(D.add(D.mul(x, u), D.mul(y, s)), den);
        t.mul[i][j] = index_of(D.mul(x, y), den);
      }
    }
    t.zero = index_of(D.zero(), D.one());
    t.one  = index_of(D.one(), D.one());
    FracSemifield out{FiniteSemiring(std::move(t)), {}, OrderedGroup::trivial(), {}};
    for (Element x = 0; x < n; ++x) {
      out.embedding.push_back(index_of(x, D.one()));
    }
    FiniteSemiring const& F = out.semifield;
    for (Element x = 0; x < F.size(); ++x) {
      if (x != F.zero() && !inverse_of(F, x)) {
        throw std::logic_error(F.element_name(x) + " is not invertible in "
                               + F.name());
      }
    }
    // Its unit group is a finite totally ordered group, hence trivial.
    if (units(F).size() != 1) {
      throw std::logic_error("finite ordered unit group of " + F.name()
                             + " is not trivial");
    }
    for (Element x = 0; x < F.size(); ++x) {
      out.as_gamma_max.push_back(x == F.zero() ? GammaMax::zero(out.group)
                                               : GammaMax::one(out.group));
    }
    return out;
  }

  GammaMaxSemifield frac_semifield(GammaMaxSemifield const& K, DownSet const& D) {
    if (!(D == DownSet::closed(K.group().identity()))) {
      throw std::domain_error(to_string(D)
                              + " is not a cancellative totally ordered "
                                "subsemiring with unbounded fractions");
    }
    // x/s with x, s <= 1 reaches every γ^a: γ^a = γ^0 / γ^-a or γ^a / 1.
    return K;
  }

  OrderHom hom_from_order(Relation const& rel, FiniteSemiring const& R) {
    if (auto d = is_valuation_order(rel, R); !d) {
      throw std::invalid_argument("not a valuation order: " + d.describe());
    }
    if (is_degenerate(rel, R)) {
      throw std::domain_error("degenerate: fraction semifield collapses");
    }
    std::vector<std::size_t> labels(R.size());
    for (Element x = 0; x < R.size(); ++x) {
      labels[x] = x;
      for (Element y = 0; y < x; ++y) {
        if (rel.holds(x, y) && rel.holds(y, x)) {
          labels[x] = labels[y];
          break;
        }
      }
    }
    Congruence kernel(std::move(labels));
    Quotient   q = quotient(R, kernel);
    if (!is_totally_ordered(q.semiring) || !is_cancellative(q.semiring)) {
      throw std::logic_error("quotient by a valuation order is not a domain");
    }
    FracSemifield  frac = frac_semifield(q.semiring);
    TableValuation v;
    v.target = frac.group;
    for (Element x = 0; x < R.size(); ++x) {
      v.values.push_back(frac.as_gamma_max[frac.embedding[q.map[x]]]);
    }
    return {std::move(kernel), std::move(q), std::move(frac), std::move(v)};
  }

  std::vector<TableValuation> semifield_homomorphisms(FiniteSemiring const& R) {
    std::vector<TableValuation> out;
    for (auto const& rel : enumerate_valuation_orders(R, true)) {
      out.push_back(hom_from_order(rel, R).valuation);
    }
    return out;
  }

  std::vector<Constraint> parse_constraints(FiniteSemiring const& R,
                                            std::string_view      text) {
    std::vector<Constraint> out;
    auto trim = [](std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
      }
      return s;
    };
    while (!trim(text).empty()) {
      auto             comma = text.find(',');
      std::string_view tok   = trim(text.substr(0, comma));
      auto             gt    = tok.find('>');
      if (gt == std::string_view::npos) {
        throw std::invalid_argument("expected 'x>y', got '" + std::string(tok)
                                    + "'");
      }
      out.emplace_back(R.find(trim(tok.substr(0, gt))),
                       R.find(trim(tok.substr(gt + 1))));
      if (comma == std::string_view::npos) {
        break;
      }
      text.remove_prefix(comma + 1);
    }
    return out;
  }

  std::string format_constraints(FiniteSemiring const&       R,
                                 std::span<Constraint const> S) {
    std::string out;
    for (std::size_t i = 0; i < S.size(); ++i) {
      out += (i == 0 ? "" : ",") + R.element_name(S[i].first) + ">"
             + R.element_name(S[i].second);
    }
    return out;
  }

  namespace {
    using PairMask = std::uint64_t;

    PairMask mask_of(Relation const& rel) {
      PairMask    m = 0;
      std::size_t n = rel.size();
      for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
          if (rel.holds(x, y)) {
            m |= PairMask{1} << (x * n + y);
          }
        }
      }
      return m;
    }

    PairMask mask_of(std::span<Constraint const> S, std::size_t n) {
      PairMask m = 0;
      for (auto const& [x, y] : S) {
        m |= PairMask{1} << (x * n + y);
      }
      return m;
    }
  }  // namespace

  Admissibility is_admissible(std::span<Constraint const> S,
                              FiniteSemiring const&       R) {
    for (auto const& [x, y] : S) {
      if (x >= R.size() || y >= R.size()) {
        throw std::out_of_range("constraint references an unknown element");
      }
    }
    for (auto const& rel : enumerate_valuation_orders(R, true)) {
      bool avoids = std::none_of(S.begin(), S.end(), [&](Constraint const& c) {
        return rel.holds(c.first, c.second);
      });
      if (avoids) {
        return {true, rel, hom_from_order(rel, R).valuation};
      }
    }
    return {};
  }

  Verdict check_finite_admissibility_coherence(std::span<Constraint const> S,
                                               FiniteSemiring const&       R) {
    if (S.size() > 20) {
      throw std::length_error("coherence check is limited to 20 constraints");
    }
    std::vector<PairMask> orders;
    for (auto const& rel : enumerate_valuation_orders(R, true)) {
      orders.push_back(mask_of(rel));
    }
    auto admissible = [&](PairMask m) {
      return std::any_of(orders.begin(), orders.end(),
                         [m](PairMask o) { return (o & m) == 0; });
    };
    bool every_subset = true;
    for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << S.size());
         ++pick) {
      std::vector<Constraint> T;
      for (std::size_t i = 0; i < S.size(); ++i) {
        if ((pick >> i) & 1U) {
          T.push_back(S[i]);
        }
      }
      if (!admissible(mask_of(T, R.size()))) {
        every_subset = false;
        break;
      }
    }
    bool whole = is_admissible(S, R).admissible;
    if (every_subset != whole) {
      return Verdict::fail("S = {" + format_constraints(R, S) + "}: subsets "
                           + (every_subset ? "all" : "not all")
                           + " admissible but S "
                           + (whole ? "admissible" : "inadmissible"));
    }
    return Verdict::pass();
  }

}  // namespace charone
