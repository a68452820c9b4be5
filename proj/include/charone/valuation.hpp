// Valuation subsemirings, the value group K^×/R^×, induced valuations and the
// correspondence between saturated submodules and down-sets of Γ_max.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "charone/finite_semiring.hpp"
#include "charone/gamma_max.hpp"
#include "charone/idem_core.hpp"
#include "charone/verdict.hpp"

namespace charone {

  // A down-set of Γ_max for a group of rank at most one.  Over the integers
  // an open cut {x < γ^n} is stored as the closed cut {x <= γ^(n-1)}, and
  // over the trivial group {x <= 1} is stored as All.
  class DownSet {
   public:
    enum class Shape { Empty, ZeroOnly, Closed, Open, All };

    static DownSet empty(OrderedGroup group);
    static DownSet zero_only(OrderedGroup group);
    // {x : x <= g}
    static DownSet closed(GroupElement const& g);
    // {x : x < g}
    static DownSet open(GroupElement const& g);
    static DownSet all(OrderedGroup group);

    Shape shape() const noexcept {
      return _shape;
    }

    OrderedGroup const& group() const noexcept {
      return _group;
    }

    // The cut point of a Closed or Open set.
    GroupElement const& bound() const;

    bool contains(GammaMax const& x) const;
    // Inclusion.
    bool subset_of(DownSet const& other) const;

    bool operator==(DownSet const&) const = default;

   private:
    DownSet(Shape shape, OrderedGroup group, std::optional<GroupElement> bound)
        : _shape(shape), _group(group), _bound(std::move(bound)) {}

    Shape                       _shape;
    OrderedGroup                _group;
    std::optional<GroupElement> _bound;
  };

  std::string to_string(DownSet const& d);

  // Every down-set meeting the window [γ^-radius, γ^radius] in a distinct
  // way, including the empty set, {0} and everything.  Rank one integer or
  // trivial groups only.
  std::vector<DownSet> representable_down_sets(OrderedGroup const& group,
                                               std::int64_t        radius);

  // A homomorphism Γ_max -> Γ'_max of the form γ^a -> γ^(scale·a).  Scale 0
  // collapses every unit onto the trivial group.
  class MonomialValuation {
   public:
    MonomialValuation(OrderedGroup source, OrderedGroup target, Rational scale);

    static MonomialValuation identity(OrderedGroup group) {
      return MonomialValuation(group, group, Rational(1));
    }

    OrderedGroup const& source() const noexcept {
      return _source;
    }
    OrderedGroup const& target() const noexcept {
      return _target;
    }
    Rational const& scale() const noexcept {
      return _scale;
    }

    GammaMax operator()(GammaMax const& x) const;

   private:
    OrderedGroup _source;
    OrderedGroup _target;
    Rational     _scale;
  };

  ////////////////////////////////////////////////////////////////////////
  // Valuation subsemirings
  ////////////////////////////////////////////////////////////////////////

  // Saturated subsemiring with x or x^-1 in R for every unit x, checked on the
  // window.  `member` must be defined on all of K.
  template <class Pred>
  Verdict is_valuation_subsemiring_on(GammaMaxSemifield const&     K,
                                      std::vector<GammaMax> const& window,
                                      Pred const&                  member) {
    if (!member(K.zero()) || !member(K.one())) {
      return Verdict::fail("0 and 1 must belong to R");
    }
    std::span<GammaMax const> w(window);
    if (!is_saturated_on(K, w, member)) {
      return Verdict::fail("not saturated");
    }
    for (auto const& x : window) {
      for (auto const& y : window) {
        if (member(x) && member(y) && !member(K.mul(x, y))) {
          return Verdict::fail("not closed under products: " + to_string(x)
                               + " * " + to_string(y));
        }
      }
      if (K.is_unit(x) && !member(x) && !member(K.inverse(x))) {
        return Verdict::fail("neither " + to_string(x)
                             + " nor its inverse lies in R");
      }
    }
    return Verdict::pass();
  }

  // Throws std::invalid_argument when K is not unitgenerated.
  Verdict is_valuation_subsemiring(FiniteSemiring const& K, Subset const& R);

  struct UnitClasses {
    OrderedGroup group = OrderedGroup::trivial();
    // For each element of K: its class in Γ_max (0 for non-units).
    std::vector<GammaMax> class_of;
  };

  // Throws std::invalid_argument unless R is a valuation subsemiring of K.
  UnitClasses unit_classes(FiniteSemiring const& K, Subset const& R);

  // For K = Γ_max, R must be {x <= 1} (value group Γ) or all of K (trivial).
  MonomialValuation unit_classes(GammaMaxSemifield const& K, DownSet const& R);

  // v(sum of units x_i) = sum of their classes.
  TableValuation    induced_valuation(FiniteSemiring const& K, Subset const& R);
  MonomialValuation induced_valuation(GammaMaxSemifield const& K,
                                      DownSet const&           R);

  // {x : v(x) <= 1}
  Subset  ring_of_integers(FiniteSemiring const& K, TableValuation const& v);
  DownSet ring_of_integers(MonomialValuation const& v);

  ////////////////////////////////////////////////////////////////////////
  // Saturated submodules versus down-sets
  ////////////////////////////////////////////////////////////////////////

  // Preimage v^-1(U).
  Subset  submodule_of_subsemigroup(FiniteSemiring const& K,
                                    TableValuation const& v,
                                    DownSet const&        U);
  DownSet submodule_of_subsemigroup(MonomialValuation const& v,
                                    DownSet const&           U);

  // Down-closure of v(M).  The finite version throws std::invalid_argument
  // when v(M) is not itself a down-set.
  DownSet subsemigroup_of_submodule(FiniteSemiring const& K,
                                    TableValuation const& v,
                                    Subset const&         M);
  DownSet subsemigroup_of_submodule(MonomialValuation const& v,
                                    DownSet const&           M);

  // Saturated ideals of {x <= 1} in Γ_max, given as down-sets inside the
  // window: {0} and the cuts at γ^n for -radius <= n <= 0.
  std::vector<DownSet> saturated_ideals(GammaMaxSemifield const& K,
                                        std::int64_t             radius);
  // Saturated ideals of a finite semiring over itself.
  std::vector<Subset>  saturated_ideals(FiniteSemiring const& R);

  Verdict check_ideals_totally_ordered(std::vector<DownSet> const& ideals);
  Verdict check_ideals_totally_ordered(FiniteSemiring const&      R,
                                       std::vector<Subset> const& ideals);

}  // namespace charone
