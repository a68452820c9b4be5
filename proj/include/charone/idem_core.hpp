// Generic idempotent-semiring predicates: canonical order, valuations,
// saturation, simplicity, units, finiteness of modules.

#pragma once

#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "charone/finite_semiring.hpp"
#include "charone/gamma_max.hpp"
#include "charone/verdict.hpp"

namespace charone {

  template <class S>
  concept IdempotentSemiring
      = requires(S const& s, typename S::value_type const& x) {
          { s.zero() } -> std::convertible_to<typename S::value_type>;
          { s.one() } -> std::convertible_to<typename S::value_type>;
          { s.add(x, x) } -> std::convertible_to<typename S::value_type>;
          { s.mul(x, x) } -> std::convertible_to<typename S::value_type>;
        };

  // x <= y iff x + y = y.
  template <IdempotentSemiring S>
  bool leq(S const&                         s,
           typename S::value_type const&    x,
           typename S::value_type const&    y) {
    return s.add(x, y) == y;
  }

  // A map from a finite carrier into Γ_max, one value per element.
  struct TableValuation {
    OrderedGroup          target = OrderedGroup::trivial();
    std::vector<GammaMax> values;

    GammaMax const& operator()(Element x) const {
      return values.at(x);
    }
  };

  std::string format_valuation(FiniteSemiring const& R, TableValuation const& v);

  // The four valuation axioms on every pair of `carrier`.  For idempotent
  // sources the two additive axioms amount to v(x + y) = v(x) + v(y).
  template <IdempotentSemiring S, class Map, class Name>
  Verdict is_valuation_on(S const&                                     s,
                          std::span<typename S::value_type const>      carrier,
                          Map const&                                   v,
                          Name const&                                  name) {
    if (!v(s.zero()).is_zero()) {
      return Verdict::fail("v(0) = " + to_string(v(s.zero())) + " != 0");
    }
    if (!v(s.one()).is_one()) {
      return Verdict::fail("v(1) = " + to_string(v(s.one())) + " != 1");
    }
    for (auto const& x : carrier) {
      for (auto const& y : carrier) {
        GammaMax vx = v(x), vy = v(y);
        if (!(v(s.mul(x, y)) == vx * vy)) {
          return Verdict::fail("v(xy) != v(x)v(y) at x=" + name(x)
                               + ", y=" + name(y));
        }
        GammaMax vs = v(s.add(x, y));
        if (!gm_leq(vs, vx + vy)) {
          return Verdict::fail("v(x+y) > v(x)+v(y) at x=" + name(x)
                               + ", y=" + name(y));
        }
        if (!gm_leq(vx, vs + vy)) {
          return Verdict::fail("v(x) > v(x+y)+v(y) at x=" + name(x)
                               + ", y=" + name(y));
        }
      }
    }
    return Verdict::pass();
  }

  // Throws std::invalid_argument("map not total") when the table does not
  // cover the carrier.
  Verdict is_valuation(FiniteSemiring const& R, TableValuation const& v);

  // N is additively closed and downward closed inside the window.
  template <IdempotentSemiring S, class Pred>
  bool is_saturated_on(S const&                                s,
                       std::span<typename S::value_type const> window,
                       Pred const&                             member) {
    for (auto const& x : window) {
      if (!member(x)) {
        continue;
      }
      for (auto const& y : window) {
        if (leq(s, y, x) && !member(y)) {
          return false;
        }
        if (member(y) && !member(s.add(x, y))) {
          return false;
        }
      }
    }
    return true;
  }

  // Saturated subsemigroup of the module `within` (default: all of R).
  bool is_saturated(FiniteSemiring const& R, Subset const& N);
  bool is_saturated(FiniteSemiring const& R,
                    Subset const&         N,
                    Subset const&         within);

  // Least saturated subsemigroup of `within` containing `seed`.  The closure
  // of the empty set is empty.
  Subset saturated_closure(FiniteSemiring const& R, Subset const& seed);
  Subset saturated_closure(FiniteSemiring const& R,
                           Subset const&         seed,
                           Subset const&         within);

  // Every nonzero x has some y with xy >= 1.
  bool is_simple(FiniteSemiring const& R);
  bool has_zero_divisors(FiniteSemiring const& R);

  std::vector<Element>   units(FiniteSemiring const& R);
  std::optional<Element> inverse_of(FiniteSemiring const& R, Element x);
  // Every element is the sum of the units below it; 0 is the empty sum.
  bool                   is_unitgenerated(FiniteSemiring const& R);

  // Modules are realized inside a finite algebra A: `scalars` is the image
  // of R in A (a subsemiring) and `members` the carrier of M, closed under
  // addition and scalar multiplication.
  bool is_submodule(FiniteSemiring const& A,
                    Subset const&         scalars,
                    Subset const&         members);

  // Some x in M with every y in M below r x for a scalar r.
  std::optional<Element> finite_module_generator(FiniteSemiring const& A,
                                                 Subset const&         scalars,
                                                 Subset const&         members);

  bool is_finite_module(FiniteSemiring const& A,
                        Subset const&         scalars,
                        Subset const&         members);

  inline constexpr std::size_t kSubmoduleGuard = 16;

  // All saturated submodules of M (each contains 0).  Throws
  // std::length_error when |M| exceeds kSubmoduleGuard.
  std::vector<Subset> saturated_submodules(FiniteSemiring const& A,
                                           Subset const&         scalars,
                                           Subset const&         members);

  bool is_noetherian(FiniteSemiring const& A,
                     Subset const&         scalars,
                     Subset const&         members);

}  // namespace charone
