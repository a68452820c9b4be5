// Valuation orders on finite semirings: the six-axiom check, enumeration,
// the order <-> homomorphism correspondence and admissibility.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "charone/finite_semiring.hpp"
#include "charone/idem_core.hpp"
#include "charone/valuation.hpp"

namespace charone {

  // A relation on {0, ..., n-1}, stored row-major.
  class Relation {
   public:
    explicit Relation(std::size_t n) : _n(n), _bits(n * n, false) {}

    static Relation full(std::size_t n);
    // x <= y in the canonical order.
    static Relation canonical(FiniteSemiring const& R);

    std::size_t size() const noexcept {
      return _n;
    }

    bool holds(Element x, Element y) const {
      return _bits.at(x * _n + y);
    }

    void set(Element x, Element y, bool value = true) {
      _bits.at(x * _n + y) = value;
    }

    std::size_t number_of_pairs() const;

    bool operator==(Relation const&) const = default;
    bool operator<(Relation const& other) const {
      return _bits < other._bits;
    }

   private:
    std::size_t       _n;
    std::vector<bool> _bits;
  };

  // One row per element: "x: y z" lists the y with x ⪯ y.
  std::string format_relation(FiniteSemiring const& R, Relation const& rel);

  struct OrderDiagnostic {
    // 0 when every axiom holds, otherwise the first failing axiom (1..6).
    int                      axiom = 0;
    std::vector<std::string> witness;

    explicit operator bool() const noexcept {
      return axiom == 0;
    }

    std::string describe() const;
  };

  // Axioms: 1 transitive; 2 total; 3 x⪯y => x+z⪯y+z; 4 x<=y => x⪯y;
  // 5 x⪯y => xz⪯yz; 6 xz⪯yz => x⪯y or z⪯0.
  OrderDiagnostic is_valuation_order(Relation const& rel, FiniteSemiring const& R);

  // 1 ⪯ 0.
  bool is_degenerate(Relation const& rel, FiniteSemiring const& R);

  inline constexpr std::size_t kOrderGuard = 4;

  enum class OrderSearch {
    // Every relation on the carrier.
    Exhaustive,
    // Only supersets of the canonical order.
    Pruned
  };

  // Sorted.  Throws std::length_error above kOrderGuard elements.
  std::vector<Relation> enumerate_valuation_orders(FiniteSemiring const& R,
                                                   bool nondegenerate = false,
                                                   OrderSearch search
                                                   = OrderSearch::Pruned);

  // x ⪯ y iff v(x) <= v(y).
  Relation order_from_hom(FiniteSemiring const& R, TableValuation const& v);

  struct FracSemifield {
    FiniteSemiring       semifield;
    // x -> x/1.
    std::vector<Element> embedding;
    // The semifield as Γ_max: one value per element.
    OrderedGroup          group = OrderedGroup::trivial();
    std::vector<GammaMax> as_gamma_max;
  };

  // Fractions x/s, s != 0, with x/s = y/t iff xt = ys.  Throws
  // std::domain_error unless D is cancellative, totally ordered and 0 != 1.
  FracSemifield frac_semifield(FiniteSemiring const& D);

  // The fraction semifield of a subsemiring D of Γ_max given as a down-set;
  // D must be {x <= 1}.
  GammaMaxSemifield frac_semifield(GammaMaxSemifield const& K, DownSet const& D);

  struct OrderHom {
    Congruence     kernel;
    Quotient       quotient;
    FracSemifield  frac;
    TableValuation valuation;
  };

  // Throws std::invalid_argument if rel is not a valuation order and
  // std::domain_error("degenerate: fraction semifield collapses") if 1 ⪯ 0.
  OrderHom hom_from_order(Relation const& rel, FiniteSemiring const& R);

  // Every homomorphism into a totally ordered idempotent semifield, up to
  // isomorphism of value groups, one per nondegenerate valuation order.
  std::vector<TableValuation> semifield_homomorphisms(FiniteSemiring const& R);

  // (x, y) asks for v(y) < v(x).
  using Constraint = std::pair<Element, Element>;

  // Parses "x>y,u>w".
  std::vector<Constraint> parse_constraints(FiniteSemiring const& R,
                                            std::string_view      text);
  std::string             format_constraints(FiniteSemiring const&       R,
                                             std::span<Constraint const> S);

  struct Admissibility {
    bool                          admissible = false;
    std::optional<Relation>       order;
    std::optional<TableValuation> witness;
  };

  Admissibility is_admissible(std::span<Constraint const> S,
                              FiniteSemiring const&       R);

  // (every subset of S admissible) iff S admissible.
  Verdict check_finite_admissibility_coherence(std::span<Constraint const> S,
                                               FiniteSemiring const&       R);

}  // namespace charone
