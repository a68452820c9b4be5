// Finite idempotent semirings given by operation tables, their congruences,
// quotients, reduction and localization.

#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charone/verdict.hpp"

namespace charone {

  using Element = std::size_t;
  // Characteristic vector of a subset of a finite carrier.
  using Subset  = std::vector<bool>;

  // Raw, unvalidated table data as read from a `.sr` file.
  struct SemiringTable {
    std::string                       name;
    std::vector<std::string>          elements;
    Element                           zero = 0;
    Element                           one  = 0;
    std::vector<std::vector<Element>> add;
    std::vector<std::vector<Element>> mul;
  };

  struct AxiomViolation {
    std::string              axiom;
    std::vector<std::string> witness;
    std::string              detail;

    std::string describe() const;
  };

  // Exhaustive axiom check.  At most one violation is reported per axiom: the
  // first failing tuple in index order.
  std::vector<AxiomViolation> validate(SemiringTable const& table);

  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  class InvalidSemiring : public std::invalid_argument {
   public:
    explicit InvalidSemiring(std::vector<AxiomViolation> violations);

    std::vector<AxiomViolation> const& violations() const noexcept {
      return _violations;
    }

   private:
    std::vector<AxiomViolation> _violations;
  };

  SemiringTable parse_semiring(std::string_view text);
  std::string   format_semiring(SemiringTable const& table);

  // A validated commutative idempotent semiring on {0, ..., n-1}.
  class FiniteSemiring {
   public:
    using value_type = Element;

    // Throws InvalidSemiring when validate() reports anything.
    explicit FiniteSemiring(SemiringTable table);

    std::size_t size() const noexcept {
      return _n;
    }

    std::string const& name() const noexcept {
      return _table.name;
    }

    std::string const& element_name(Element x) const {
      return _table.elements.at(x);
    }

    // Throws std::invalid_argument for unknown names.
    Element find(std::string_view name) const;

    Element zero() const noexcept {
      return _table.zero;
    }

    Element one() const noexcept {
      return _table.one;
    }

    Element add(Element x, Element y) const noexcept {
      return _add[x * _n + y];
    }

    Element mul(Element x, Element y) const noexcept {
      return _mul[x * _n + y];
    }

    // Canonical order: x + y == y.
    bool leq(Element x, Element y) const noexcept {
      return add(x, y) == y;
    }

    Element power(Element x, std::size_t k) const noexcept;

    std::vector<Element> elements() const;

    Subset empty_subset() const {
      return Subset(_n, false);
    }

    Subset full_subset() const {
      return Subset(_n, true);
    }

    SemiringTable const& table() const noexcept {
      return _table;
    }

   private:
    SemiringTable        _table;
    std::size_t          _n;
    std::vector<Element> _add;
    std::vector<Element> _mul;
  };

  FiniteSemiring load_semiring(std::filesystem::path const& path);

  // Elements named in a comma separated list, e.g. "0,1,g".
  Subset      parse_subset(FiniteSemiring const& R, std::string_view list);
  std::string format_subset(FiniteSemiring const& R, Subset const& s);

  // Equivalence relation on a finite carrier, stored as class labels numbered
  // in order of first occurrence.
  class Congruence {
   public:
    explicit Congruence(std::vector<std::size_t> labels);

    static Congruence equality(std::size_t n);
    static Congruence total(std::size_t n);

    std::size_t size() const noexcept {
      return _labels.size();
    }

    std::size_t class_of(Element x) const {
      return _labels.at(x);
    }

    bool related(Element x, Element y) const {
      return _labels.at(x) == _labels.at(y);
    }

    std::size_t number_of_classes() const noexcept {
      return _classes;
    }

    std::vector<std::vector<Element>> classes() const;

    std::vector<std::size_t> const& labels() const noexcept {
      return _labels;
    }

    // this ⊆ other as sets of pairs.
    bool refines(Congruence const& other) const;
    // Intersection as sets of pairs.
    Congruence meet(Congruence const& other) const;

    bool operator==(Congruence const&) const = default;

   private:
    std::vector<std::size_t> _labels;
    std::size_t              _classes;
  };

  std::string format_congruence(FiniteSemiring const& R, Congruence const& c);

  bool       is_compatible(Congruence const& c, FiniteSemiring const& R);
  // Least congruence containing `base` and the given pairs.
  Congruence congruence_closure(FiniteSemiring const&                  R,
                                std::span<std::pair<Element, Element> const> pairs,
                                Congruence const&                      base);
  Congruence congruence_closure(FiniteSemiring const&                  R,
                                std::span<std::pair<Element, Element> const> pairs);

  inline constexpr std::size_t kCongruenceGuard = 6;

  // All congruences, equality first and the total congruence last.  Throws
  // std::length_error above kCongruenceGuard elements.
  std::vector<Congruence> congruences(FiniteSemiring const& R);

  bool is_prime(Congruence const& c, FiniteSemiring const& R);
  // Quotient cancellative.
  bool is_qc(Congruence const& c, FiniteSemiring const& R);
  bool is_cancellative(FiniteSemiring const& R);
  bool is_totally_ordered(FiniteSemiring const& R);
  bool is_domain(FiniteSemiring const& R);

  std::vector<Congruence> prime_congruences(FiniteSemiring const& R);

  // c equals the intersection of the primes containing it.  The empty
  // intersection is the total congruence.
  bool radical_test(Congruence const& c, FiniteSemiring const& R);

  struct Quotient {
    FiniteSemiring       semiring;
    // Index of the image of each element.
    std::vector<Element> map;
  };

  // Classes are named after their smallest member.
  Quotient quotient(FiniteSemiring const& R, Congruence const& c);

  struct Reduction {
    Quotient   quotient;
    Congruence kernel;
    // No prime congruence exists; the quotient has one element.
    bool       degenerate = false;
  };

  Reduction reduction(FiniteSemiring const& R);
  bool      is_reduced(FiniteSemiring const& R);

  // Fractions x/s with s != 0, where x/s ~ y/t iff uxt = uys for some u != 0.
  // Throws std::domain_error unless R is simple and without zero divisors.
  Quotient localize_at_nonzero(FiniteSemiring const& R);

  // x, y are identified by the reduction iff sx = sy for some s != 0.
  // Throws std::domain_error unless R is simple.
  Verdict check_reduction_by_cancellation(FiniteSemiring const& R);

  // (sx <= s for some s != 0) iff every homomorphism into a totally ordered
  // idempotent semifield sends x to at most 1.  Throws unless R is simple.
  Verdict check_bounded_by_one(FiniteSemiring const& R);

  // All semiring homomorphisms R -> S as element maps.
  std::vector<std::vector<Element>> homomorphisms(FiniteSemiring const& R,
                                                  FiniteSemiring const& S);
  bool is_isomorphic(FiniteSemiring const& R, FiniteSemiring const& S);

  // Every labelled idempotent semiring on n <= 4 elements with zero = 0 and
  // (for n > 1) one = 1.
  std::vector<FiniteSemiring> all_semirings(std::size_t n);

}  // namespace charone
