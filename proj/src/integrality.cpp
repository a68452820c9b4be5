#include "charone/integrality.hpp"

#include <algorithm>
#include <stdexcept>

#include "charone/corpus.hpp"
#include "charone/frac_ideal.hpp"
#include "charone/valuation_order.hpp"

namespace charone {

  namespace {

    std::vector<Element> members_of(Subset const& s) {
      std::vector<Element> out;
      for (Element x = 0; x < s.size(); ++x) {
        if (s[x]) {
          out.push_back(x);
        }
      }
      return out;
    }

    void require_size(FiniteSemiring const& A, Subset const& s, char const* what) {
      if (s.size() != A.size()) {
        throw std::invalid_argument(std::string(what) + " does not match "
                                    + A.name());
      }
    }

    bool is_subsemiring(FiniteSemiring const& A, Subset const& s) {
      if (!s[A.zero()] || !s[A.one()]) {
        return false;
      }
      for (Element x = 0; x < A.size(); ++x) {
        for (Element y = 0; y < A.size(); ++y) {
          if (s[x] && s[y] && (!s[A.add(x, y)] || !s[A.mul(x, y)])) {
            return false;
          }
        }
      }
      return true;
    }

    // The subsemiring on `s` as a table of its own, with the element map.
    std::pair<FiniteSemiring, std::vector<Element>>
    restrict_to(FiniteSemiring const& A, Subset const& s) {
      auto                     elems = members_of(s);
      std::vector<std::size_t> index(A.size(), Contraction::npos);
      for (std::size_t i = 0; i < elems.size(); ++i) {
        index[elems[i]] = i;
      }
      SemiringTable t;
      t.name = A.name() + "_sub";
      for (auto x : elems) {
        t.elements.push_back(A.element_name(x));
      }
      t.zero = index[A.zero()];
      t.one  = index[A.one()];
      t.add.assign(elems.size(), std::vector<Element>(elems.size()));
      t.mul = t.add;
      for (std::size_t i = 0; i < elems.size(); ++i) {
        for (std::size_t j = 0; j < elems.size(); ++j) {
          t.add[i][j] = index[A.add(elems[i], elems[j])];
          t.mul[i][j] = index[A.mul(elems[i], elems[j])];
        }
      }
      return {FiniteSemiring(std::move(t)), elems};
    }

    Subset image_of(Quotient const& q, Subset const& s) {
      Subset out(q.semiring.size(), false);
      for (Element x = 0; x < s.size(); ++x) {
        if (s[x]) {
          out[q.map[x]] = true;
        }
      }
      return out;
    }

    // Every subsemiring of A.
    std::vector<Subset> subsemirings(FiniteSemiring const& A) {
      if (A.size() > kSubmoduleGuard) {
        throw std::length_error("too many elements to enumerate subsemirings");
      }
      std::vector<Subset> out;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << A.size());
           ++mask) {
        Subset s(A.size(), false);
        for (Element x = 0; x < A.size(); ++x) {
          s[x] = (mask >> x) & 1;
        }
        if (is_subsemiring(A, s)) {
          out.push_back(std::move(s));
        }
      }
      return out;
    }

    // The isomorphism K_{O<=1} ≅ Γ_max induced by v, on a window.
    template <IdempotentSemiring S, class V, class Name>
    Verdict valued_contraction_isomorphism(
        S const&                                         s,
        std::vector<typename S::value_type> const&       window,
        std::vector<typename S::value_type> const&       scalars,
        V const&                                         v,
        Name const&                                      name) {
      std::span<typename S::value_type const> sc(scalars);
      for (auto const& x : window) {
        for (auto const& y : window) {
          if (contraction_related_on(s, sc, x, y) != (v(x) == v(y))) {
            return Verdict::fail("classes of " + name(x) + " and " + name(y)
                                 + " disagree with v");
          }
          if (contraction_leq_on(s, sc, x, y) != gm_leq(v(x), v(y))) {
            return Verdict::fail("order of " + name(x) + " and " + name(y)
                                 + " disagrees with v");
          }
        }
      }
      return Verdict::pass();
    }

    // (O)_{O<=1} ≅ {x̄ <= 1} on a window, where O = {v <= 1}.
    template <IdempotentSemiring S, class V, class Name>
    Verdict valued_integers_contraction(
        S const&                                         s,
        std::vector<typename S::value_type> const&       window,
        std::vector<typename S::value_type> const&       scalars,
        V const&                                         v,
        Name const&                                      name) {
      using T = typename S::value_type;
      std::span<T const> sc(scalars);
      GammaMax const     one = v(s.one());
      std::vector<T>     integers;
      for (auto const& x : window) {
        if (gm_leq(v(x), one)) {
          integers.push_back(x);
        }
      }
      // The relation inside O uses only elements of O; products of elements
      // of O stay in O, so it is computed by the same search.
      for (auto const& x : integers) {
        if (!contraction_leq_on(s, sc, x, s.one())) {
          return Verdict::fail("the class of " + name(x) + " is not <= 1");
        }
        for (auto const& y : integers) {
          bool in_o = false;
          for (auto const& r : scalars) {
            for (auto const& t : scalars) {
              if (leq(s, x, s.mul(r, y)) && leq(s, y, s.mul(t, x))) {
                in_o = true;
              }
            }
          }
          if (in_o != contraction_related_on(s, sc, x, y)) {
            return Verdict::fail("the classes of " + name(x) + " and "
                                 + name(y) + " differ between O and K");
          }
        }
      }
      for (auto const& x : window) {
        if (!contraction_leq_on(s, sc, x, s.one())) {
          continue;
        }
        bool hit = std::any_of(integers.begin(), integers.end(), [&](T const& y) {
          return contraction_related_on(s, sc, x, y);
        });
        if (!hit) {
          return Verdict::fail("the class of " + name(x)
                               + " is <= 1 but contains nothing from O");
        }
      }
      return Verdict::pass();
    }

    std::string zmax_name(GammaMax const& x) {
      return to_string(x);
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // Contractions
  ////////////////////////////////////////////////////////////////////////

  Contraction contract(FiniteSemiring const& A,
                       Subset const&         scalars,
                       Subset const&         members) {
    require_size(A, scalars, "scalar set");
    require_size(A, members, "module");
    if (!is_submodule(A, scalars, members)) {
      throw std::invalid_argument("not a submodule: "
                                  + format_subset(A, members));
    }
    auto const           sc = members_of(scalars);
    std::span<Element const> span(sc);
    Contraction c{scalars, members, std::vector<std::size_t>(A.size(), Contraction::npos), {}};
    for (Element x = 0; x < A.size(); ++x) {
      if (!members[x]) {
        continue;
      }
      for (std::size_t k = 0; k < c.representative.size(); ++k) {
        if (contraction_related_on(A, span, x, c.representative[k])) {
          c.class_of[x] = k;
          break;
        }
      }
      if (c.class_of[x] == Contraction::npos) {
        c.class_of[x] = c.representative.size();
        c.representative.push_back(x);
      }
    }
    for (Element x = 0; x < A.size(); ++x) {
      for (Element y = 0; y < A.size(); ++y) {
        if (members[x] && members[y]
            && contraction_related_on(A, span, x, y)
                   != (c.class_of[x] == c.class_of[y])) {
          throw std::logic_error("contraction relation is not transitive");
        }
      }
    }
    return c;
  }

  Contraction contract(FiniteSemiring const& A, Subset const& scalars) {
    return contract(A, scalars, A.full_subset());
  }

  bool contraction_leq(FiniteSemiring const& A,
                       Contraction const&    c,
                       Element               b,
                       Element               a) {
    if (b >= A.size() || a >= A.size() || !c.members[b] || !c.members[a]) {
      throw std::invalid_argument("element outside the contracted module");
    }
    auto const sc = members_of(c.scalars);
    return contraction_leq_on(A, std::span<Element const>(sc), b, a);
  }

  Quotient contraction_semiring(FiniteSemiring const& A, Contraction const& c) {
    if (c.members != A.full_subset()) {
      throw std::invalid_argument("only the contraction of A itself is a "
                                  "semiring");
    }
    Quotient q = quotient(A, Congruence(c.class_of));
    return q;
  }

  Subset contraction_down_set(FiniteSemiring const& A,
                              Contraction const&    c,
                              Element               a) {
    Subset out(A.size(), false);
    for (Element b = 0; b < A.size(); ++b) {
      out[b] = c.members[b] && contraction_leq(A, c, b, a);
    }
    return out;
  }

  GammaContraction::GammaContraction(GammaMaxSemifield K, DownSet R)
      : _K(std::move(K)), _R(std::move(R)) {
    if (!(_R.group() == _K.group())) {
      throw GroupError("group mismatch");
    }
    bool valuation_ring = _R == DownSet::closed(_K.group().identity());
    bool everything     = _R == DownSet::all(_K.group());
    if (!valuation_ring && !everything) {
      throw std::invalid_argument("scalars must be {x <= 1} or all of Γ_max, "
                                  "not "
                                  + to_string(_R));
    }
  }

  GammaMax GammaContraction::class_of(GammaMax const& x) const {
    if (_R == DownSet::all(_K.group()) && !x.is_zero()) {
      return _K.one();
    }
    return x;
  }

  bool GammaContraction::leq(GammaMax const& b, GammaMax const& a) const {
    return gm_leq(class_of(b), class_of(a));
  }

  namespace {

    std::vector<GammaMax> scalar_window(GammaContraction const& c,
                                        std::int64_t            radius) {
      std::vector<GammaMax> out;
      for (auto const& r : c.semifield().window(2 * radius)) {
        if (c.scalars().contains(r)) {
          out.push_back(r);
        }
      }
      return out;
    }

  }  // namespace

  Verdict check_contraction_on_window(GammaContraction const& c,
                                      std::int64_t            radius) {
    auto const                w  = c.semifield().window(radius);
    auto const                sc = scalar_window(c, radius);
    std::span<GammaMax const> span(sc);
    for (auto const& x : w) {
      for (auto const& y : w) {
        bool related = contraction_related_on(c.semifield(), span, x, y);
        if (related != (c.class_of(x) == c.class_of(y))) {
          return Verdict::fail("classes of " + to_string(x) + " and "
                               + to_string(y) + " disagree with the relation");
        }
        if (contraction_leq_on(c.semifield(), span, x, y) != c.leq(x, y)) {
          return Verdict::fail("order of " + to_string(x) + " and "
                               + to_string(y) + " disagrees with the relation");
        }
      }
    }
    return Verdict::pass();
  }

  ////////////////////////////////////////////////////////////////////////
  // Integral elements
  ////////////////////////////////////////////////////////////////////////

  Subset r_angle_x(FiniteSemiring const& A, Subset const& scalars, Element x) {
    require_size(A, scalars, "scalar set");
    Subset cur = scalars;
    cur[x]     = true;
    while (true) {
      Subset next = saturated_closure(A, cur);
      for (Element u = 0; u < A.size(); ++u) {
        for (Element v = 0; v < A.size(); ++v) {
          if (cur[u] && cur[v]) {
            next[A.mul(u, v)] = true;
          }
        }
      }
      if (next == cur) {
        return cur;
      }
      cur = std::move(next);
    }
  }

  std::optional<IntegralWitness> integral_witness(FiniteSemiring const& A,
                                                  Subset const&         scalars,
                                                  Element               x,
                                                  std::size_t max_degree) {
    auto const sc = members_of(scalars);
    if (sc.empty()) {
      return std::nullopt;
    }
    Element top = A.zero();
    for (auto r : sc) {
      top = A.add(top, r);
    }
    constexpr std::size_t kTupleLimit = 1'000'000;
    for (std::size_t n = 2; n <= max_degree; ++n) {
      std::vector<Element> powers(n + 1);
      for (std::size_t i = 0; i <= n; ++i) {
        powers[i] = A.power(x, i);
      }
      Element best = A.zero();
      for (std::size_t i = 0; i < n; ++i) {
        best = A.add(best, A.mul(top, powers[i]));
      }
      if (!A.leq(powers[n], best)) {
        continue;
      }
      std::vector<std::size_t> digits(n, 0);
      for (std::size_t count = 0; count < kTupleLimit; ++count) {
        Element rhs = A.zero();
        for (std::size_t i = 0; i < n; ++i) {
          rhs = A.add(rhs, A.mul(sc[digits[i]], powers[i]));
        }
        if (A.leq(powers[n], rhs)) {
          IntegralWitness w{n, {}};
          for (auto dgt : digits) {
            w.coefficients.push_back(sc[dgt]);
          }
          return w;
        }
        std::size_t i = 0;
        while (i < n && ++digits[i] == sc.size()) {
          digits[i++] = 0;
        }
        if (i == n) {
          break;
        }
      }
      return IntegralWitness{n, std::vector<Element>(n, top)};
    }
    return std::nullopt;
  }

  std::optional<IntegralWitness> is_integral(FiniteSemiring const& A,
                                             Subset const&         scalars,
                                             Element               x) {
    bool finite  = is_finite_module(A, scalars, r_angle_x(A, scalars, x));
    auto witness = integral_witness(A, scalars, x, A.size() + 1);
    if (finite != witness.has_value()) {
      throw std::logic_error("integrality characterizations disagree at "
                             + A.element_name(x));
    }
    return witness;
  }

  std::string format_witness(FiniteSemiring const& A, IntegralWitness const& w) {
    std::string out = "n=" + std::to_string(w.degree);
    for (std::size_t i = 0; i < w.coefficients.size(); ++i) {
      out += ", c" + std::to_string(i) + "=" + A.element_name(w.coefficients[i]);
    }
    return out;
  }

  GammaIntegrality is_integral(GammaMaxSemifield const& K,
                               DownSet const&           R,
                               GammaMax const&          x,
                               std::size_t              max_degree,
                               std::int64_t             radius) {
    std::vector<GammaMax> coefficients;
    for (auto const& c : K.window(radius)) {
      if (R.contains(c)) {
        coefficients.push_back(c);
      }
    }
    std::sort(coefficients.begin(), coefficients.end(),
              [](GammaMax const& a, GammaMax const& b) { return gm_less(a, b); });
    // In a totally ordered semiring a sum is bounded by its largest term, so
    // one nonzero coefficient suffices.
    for (std::size_t n = 2; n <= max_degree; ++n) {
      GammaMax xn = K.one();
      for (std::size_t k = 0; k < n; ++k) {
        xn = xn * x;
      }
      for (std::size_t i = 0; i < n; ++i) {
        GammaMax xi = K.one();
        for (std::size_t k = 0; k < i; ++k) {
          xi = xi * x;
        }
        for (auto const& c : coefficients) {
          if (gm_leq(xn, c * xi)) {
            GammaIntegralWitness w{n, std::vector<GammaMax>(n, K.zero())};
            w.coefficients[i] = c;
            return {SearchStatus::Found, w};
          }
        }
      }
    }
    return {SearchStatus::UnknownBeyondBound, std::nullopt};
  }

  ////////////////////////////////////////////////////////////////////////
  // Quasiintegral elements
  ////////////////////////////////////////////////////////////////////////

  std::optional<Element> is_quasiintegral(FiniteSemiring const& A,
                                          Subset const&         scalars,
                                          Element               x) {
    if (!is_simple(A)) {
      throw std::domain_error("the quasiintegrality criterion requires a "
                              "simple algebra; " + A.name() + " is not");
    }
    Contraction c    = contract(A, scalars);
    std::size_t zero = c.class_of[A.zero()];
    std::vector<Element> reps = c.representative;
    // Try 1 first so that x = 0 and x = 1 report the unit class.
    std::stable_partition(reps.begin(), reps.end(), [&](Element s) {
      return c.class_of[s] == c.class_of[A.one()];
    });
    for (auto s : reps) {
      if (c.class_of[s] == zero) {
        continue;
      }
      if (contraction_leq(A, c, A.mul(s, x), s)) {
        return s;
      }
    }
    return std::nullopt;
  }

  std::optional<Subset> quasiintegral_module(FiniteSemiring const& A,
                                             Subset const&         scalars,
                                             Element               x) {
    Subset const rx      = r_angle_x(A, scalars, x);
    auto const   algebra = members_of(rx);
    for (auto const& M : saturated_submodules(A, scalars, A.full_subset())) {
      auto const ms = members_of(M);
      if (std::none_of(ms.begin(), ms.end(),
                       [&](Element m) { return m != A.zero(); })) {
        continue;
      }
      bool stable = true, faithful = true;
      for (auto z : algebra) {
        bool kills = true;
        for (auto m : ms) {
          stable = stable && M[A.mul(z, m)];
          kills  = kills && A.mul(z, m) == A.zero();
        }
        faithful = faithful && (z == A.zero() || !kills);
      }
      if (stable && faithful && is_finite_module(A, scalars, M)) {
        return M;
      }
    }
    return std::nullopt;
  }

  std::optional<GammaMax> is_quasiintegral(GammaContraction const& c,
                                           GammaMax const&         x,
                                           std::int64_t            radius) {
    auto const                sc = scalar_window(c, radius);
    std::span<GammaMax const> span(sc);
    auto                      window = c.semifield().window(radius);
    std::stable_partition(window.begin(), window.end(),
                          [](GammaMax const& s) { return s.is_one(); });
    for (auto const& s : window) {
      if (s.is_zero()) {
        continue;
      }
      if (contraction_leq_on(c.semifield(), span, s * x, s)) {
        return s;
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Closure and extensibility
  ////////////////////////////////////////////////////////////////////////

  Subset valuation_ring_intersection(FiniteSemiring const& A,
                                     Subset const&         scalars) {
    Subset out = A.full_subset();
    for (auto const& T : subsemirings(A)) {
      bool contains = true;
      for (Element x = 0; x < A.size(); ++x) {
        contains = contains && (!scalars[x] || T[x]);
      }
      if (contains && is_valuation_subsemiring(A, T)) {
        for (Element x = 0; x < A.size(); ++x) {
          out[x] = out[x] && T[x];
        }
      }
    }
    return out;
  }

  Subset quasiintegral_closure(FiniteSemiring const& A, Subset const& scalars) {
    Subset out(A.size(), false);
    for (Element x = 0; x < A.size(); ++x) {
      out[x] = is_quasiintegral(A, scalars, x).has_value();
    }
    if (is_unitgenerated(A) && out != valuation_ring_intersection(A, scalars)) {
      throw std::logic_error("quasiintegral closure "
                             + format_subset(A, out)
                             + " differs from the valuation ring intersection");
    }
    return out;
  }

  DownSet quasiintegral_closure(GammaContraction const& c, std::int64_t radius) {
    auto const& K      = c.semifield();
    DownSet     closed = c.scalars() == DownSet::all(K.group())
                             ? DownSet::all(K.group())
                             : DownSet::closed(K.group().identity());

    auto const window = K.window(radius);
    for (auto const& x : window) {
      if (is_quasiintegral(c, x, radius).has_value() != closed.contains(x)) {
        throw std::logic_error("quasiintegrality of " + to_string(x)
                               + " disagrees with " + to_string(closed));
      }
    }

    std::vector<DownSet> rings;
    for (auto const& D : representable_down_sets(K.group(), radius)) {
      auto member = [&](GammaMax const& y) { return D.contains(y); };
      if (c.scalars().subset_of(D)
          && is_valuation_subsemiring_on(K, window, member)) {
        rings.push_back(D);
      }
    }
    for (auto const& x : window) {
      bool in_all = std::all_of(rings.begin(), rings.end(),
                                [&](DownSet const& D) { return D.contains(x); });
      if (in_all != closed.contains(x)) {
        throw std::logic_error("quasiintegral closure differs from the "
                               "valuation ring intersection at "
                               + to_string(x));
      }
    }
    return closed;
  }

  bool is_extensible(FiniteSemiring const& A, Subset const& scalars) {
    bool simple = is_simple(A);
    for (Element x = 0; x < A.size(); ++x) {
      bool quasi = simple ? is_quasiintegral(A, scalars, x).has_value()
                          : quasiintegral_module(A, scalars, x).has_value();
      if (quasi && !is_integral(A, scalars, x)) {
        return false;
      }
    }
    return true;
  }

  bool is_extensible(GammaContraction const& c, std::int64_t radius) {
    for (auto const& x : c.semifield().window(radius)) {
      if (is_quasiintegral(c, x, radius)
          && is_integral(c.semifield(), c.scalars(), x, 8, radius).status
                 != SearchStatus::Found) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////
  // Checks
  ////////////////////////////////////////////////////////////////////////

  Verdict check_quasiintegral_valuation_criterion(FiniteSemiring const& A,
                                                  Subset const&         scalars) {
    if (!is_simple(A)) {
      throw std::domain_error("the valuation criterion requires a simple "
                              "algebra; " + A.name() + " is not");
    }
    Contraction c = contract(A, scalars);
    Quotient    Q = contraction_semiring(A, c);
    auto const  homs = semifield_homomorphisms(Q.semiring);

    std::vector<TableValuation> direct;
    if (A.size() <= kOrderGuard) {
      for (auto const& v : semifield_homomorphisms(A)) {
        bool bounded = true;
        for (Element r = 0; r < A.size(); ++r) {
          bounded = bounded && (!scalars[r] || gm_leq(v(r), GammaMax::one(v.target)));
        }
        if (bounded) {
          direct.push_back(v);
        }
      }
    }

    for (Element x = 0; x < A.size(); ++x) {
      bool quasi   = is_quasiintegral(A, scalars, x).has_value();
      bool below   = std::all_of(homs.begin(), homs.end(), [&](auto const& v) {
        return gm_leq(v(Q.map[x]), GammaMax::one(v.target));
      });
      if (quasi != below) {
        return Verdict::fail(A.element_name(x) + ": quasiintegral is "
                             + (quasi ? "true" : "false")
                             + " but every v(x̄) <= 1 is "
                             + (below ? "true" : "false"));
      }
      if (A.size() <= kOrderGuard) {
        bool below_direct
            = std::all_of(direct.begin(), direct.end(), [&](auto const& v) {
                return gm_leq(v(x), GammaMax::one(v.target));
              });
        if (quasi != below_direct) {
          return Verdict::fail(A.element_name(x) + ": quasiintegral is "
                               + (quasi ? "true" : "false")
                               + " but every v(x) <= 1 with v(R) <= 1 is "
                               + (below_direct ? "true" : "false"));
        }
      }
    }
    return Verdict::pass();
  }

  Verdict check_inclusion_injective(FiniteSemiring const& B,
                                    Subset const&         A,
                                    Subset const&         scalars) {
    for (Element r = 0; r < B.size(); ++r) {
      if (scalars[r] && !A[r]) {
        throw std::invalid_argument("scalars must lie in the subalgebra");
      }
    }
    if (!is_subsemiring(B, A)) {
      throw std::invalid_argument(format_subset(B, A) + " is not a subsemiring");
    }
    auto [sub, elems] = restrict_to(B, A);
    Subset sub_scalars(sub.size(), false);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      sub_scalars[i] = scalars[elems[i]];
    }
    Contraction in_a = contract(sub, sub_scalars);
    Contraction in_b = contract(B, scalars);
    for (std::size_t i = 0; i < elems.size(); ++i) {
      for (std::size_t j = 0; j < elems.size(); ++j) {
        if (in_b.class_of[elems[i]] == in_b.class_of[elems[j]]
            && in_a.class_of[i] != in_a.class_of[j]) {
          return Verdict::fail(B.element_name(elems[i]) + " and "
                               + B.element_name(elems[j])
                               + " are identified in " + B.name()
                               + " but not in the subalgebra");
        }
      }
    }
    return Verdict::pass();
  }

  std::vector<LemmaCheck> check_contraction_lemmas(std::int64_t radius) {
    std::vector<LemmaCheck> out;
    auto add = [&](std::string name, std::string instance, Verdict v) {
      out.push_back({std::move(name), std::move(instance), std::move(v)});
    };

    OrderedGroup const      Z = OrderedGroup::integers();
    GammaMaxSemifield const K(Z);
    DownSet const           O = DownSet::closed(Z.identity());
    GammaContraction const  zc(K, O);
    auto const              zwindow  = K.window(radius);
    auto const              zscalars = scalar_window(zc, radius);
    auto const              identity = [](GammaMax const& x) { return x; };

    FiniteSemiring const bz2(parse_semiring(*bundled_table("b_z2")));
    TableValuation       collapse{OrderedGroup::trivial(), {}};
    for (Element x = 0; x < bz2.size(); ++x) {
      collapse.values.push_back(x == bz2.zero()
                                    ? GammaMax::zero(OrderedGroup::trivial())
                                    : GammaMax::one(OrderedGroup::trivial()));
    }
    auto const bz2_all   = bz2.elements();
    auto const bz2_name  = [&](Element x) { return bz2.element_name(x); };
    auto const bz2_value = [&](Element x) { return collapse(x); };

    QfracSemiring const S(5);
    auto const          f = hom_from_valuation(padic_valuation_on_q(5), 5);
    auto const          swindow = S.window(radius);
    std::vector<QfracIdeal> sscalars;
    for (auto const& I : S.window(2 * radius)) {
      if (gm_leq(f(I), GammaMax::one(f.target))) {
        sscalars.push_back(I);
      }
    }
    auto const sname = [](QfracIdeal const& I) { return to_string(I); };

    // v induces K_{O<=1} ≅ Γ_max.
    {
      Verdict v = check_contraction_on_window(zc, radius);
      if (v) {
        v = valued_contraction_isomorphism(K, zwindow, zscalars, identity,
                                           zmax_name);
      }
      add("contraction_isomorphism", "Z_max over {x <= 1}", v);
    }
    {
      Verdict v = is_valuation(bz2, collapse);
      if (v) {
        Subset ring = ring_of_integers(bz2, collapse);
        v = valued_contraction_isomorphism(bz2, bz2_all, members_of(ring),
                                           bz2_value, bz2_name);
      }
      add("contraction_isomorphism", "B[Z/2] onto B", v);
    }
    {
      Verdict v = valued_contraction_isomorphism(S, swindow, sscalars, f, sname);
      std::vector<GammaMax> images;
      for (auto const& I : swindow) {
        images.push_back(f(I));
      }
      for (auto const& g : zwindow) {
        if (v && std::count(images.begin(), images.end(), g) != 1) {
          v = Verdict::fail(to_string(g) + " is not hit exactly once");
        }
      }
      add("contraction_isomorphism", "S_f(Q, Z_(5)) over Z_(5)", v);
    }

    // Inclusions of subalgebras give injective maps of contractions.
    {
      Subset  A = parse_subset(bz2, "0,1");
      Verdict v = check_inclusion_injective(bz2, A, A);
      add("inclusion_injective", "B in B[Z/2] over B", v);
    }
    {
      Verdict v = Verdict::pass();
      for (auto const& entry : bundled_corpus()) {
        FiniteSemiring T(parse_semiring(entry.text));
        for (auto const& R : subsemirings(T)) {
          for (auto const& A : subsemirings(T)) {
            bool contains = true;
            for (Element x = 0; x < T.size(); ++x) {
              contains = contains && (!R[x] || A[x]);
            }
            if (contains && v) {
              v = check_inclusion_injective(T, A, R);
            }
          }
        }
      }
      add("inclusion_injective", "all subalgebras of the corpus", v);
    }

    // Contractions of simple extensible algebras stay extensible.
    {
      Verdict v = Verdict::pass();
      for (auto const& entry : bundled_corpus()) {
        FiniteSemiring T(parse_semiring(entry.text));
        if (!is_simple(T)) {
          continue;
        }
        for (auto const& R : subsemirings(T)) {
          if (!is_extensible(T, R)) {
            continue;
          }
          Quotient Q = contraction_semiring(T, contract(T, R));
          if (!is_extensible(Q.semiring, image_of(Q, R))) {
            v = Verdict::fail("the contraction of " + T.name() + " over "
                              + format_subset(T, R) + " is not extensible");
          }
        }
      }
      add("extensible_contraction", "simple corpus algebras", v);
    }
    {
      Verdict v = is_extensible(zc, radius)
                      ? Verdict::pass()
                      : Verdict::fail("Z_max is not extensible over {x <= 1}");
      add("extensible_contraction", "Z_max over {x <= 1}", v);
    }

    // (O)_{O<=1} is the part of K_{O<=1} below 1.
    add("integers_contraction", "Z_max over {x <= 1}",
        valued_integers_contraction(K, zwindow, zscalars, identity, zmax_name));
    add("integers_contraction", "B[Z/2] onto B",
        valued_integers_contraction(bz2, bz2_all,
                                    members_of(ring_of_integers(bz2, collapse)),
                                    bz2_value, bz2_name));
    add("integers_contraction", "S_f(Q, Z_(5)) over Z_(5)",
        valued_integers_contraction(S, swindow, sscalars, f, sname));
    return out;
  }

}  // namespace charone
