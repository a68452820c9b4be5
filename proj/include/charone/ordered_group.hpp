// Totally ordered abelian groups used as value groups, written
// multiplicatively.  Supported kinds: the trivial group, Z^n with the
// lexicographic order, and Q.  For rank one groups the generator is printed
// as γ, so the element with exponent a renders as "γ^a".

#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "charone/numeric.hpp"

namespace charone {

  class GroupError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  class GroupElement;

  class OrderedGroup {
   public:
    enum class Kind { Trivial, IntPower, Rational };

    static OrderedGroup trivial();
    // Z^rank, lexicographic.
    static OrderedGroup integers(std::size_t rank = 1);
    static OrderedGroup rationals();

    Kind kind() const noexcept {
      return _kind;
    }

    // Number of exponent coordinates: 0, n, or 1.
    std::size_t rank() const noexcept {
      return _rank;
    }

    // Whether exponents are restricted to integers.
    bool is_integral() const noexcept {
      return _kind != Kind::Rational;
    }

    GroupElement identity() const;
    // Validates the number of coordinates and their integrality.
    GroupElement element(std::vector<Rational> exponents) const;
    // γ^a in a rank one group.
    GroupElement power(Rational const& exponent) const;

    std::string name() const;

    bool operator==(OrderedGroup const&) const = default;

   private:
    OrderedGroup(Kind kind, std::size_t rank) : _kind(kind), _rank(rank) {}

    Kind        _kind;
    std::size_t _rank;
  };

  class GroupElement {
   public:
    OrderedGroup const& group() const noexcept {
      return _group;
    }

    std::span<Rational const> exponents() const noexcept {
      return _exponents;
    }

    // The single exponent of an element of a rank one group.
    Rational const& exponent() const;

    bool is_identity() const;

    bool operator==(GroupElement const&) const = default;

   private:
    friend class OrderedGroup;
    GroupElement(OrderedGroup group, std::vector<Rational> exponents)
        : _group(group), _exponents(std::move(exponents)) {}

    OrderedGroup          _group;
    std::vector<Rational> _exponents;
  };

  // Throws GroupError("group mismatch") when the groups differ.
  std::strong_ordering compare(GroupElement const& g, GroupElement const& h);
  GroupElement         mul(GroupElement const& g, GroupElement const& h);
  GroupElement         inverse(GroupElement const& g);

  inline GroupElement operator*(GroupElement const& g, GroupElement const& h) {
    return mul(g, h);
  }

  inline std::strong_ordering operator<=>(GroupElement const& g,
                                          GroupElement const& h) {
    return compare(g, h);
  }

  std::string  to_string(GroupElement const& g);
  GroupElement parse_group_element(OrderedGroup const& group,
                                   std::string_view    text);

  // An injective order-preserving homomorphism given by scaling exponents.
  class GroupEmbedding {
   public:
    OrderedGroup const& source() const noexcept {
      return _source;
    }
    OrderedGroup const& target() const noexcept {
      return _target;
    }
    Rational const& scale() const noexcept {
      return _scale;
    }

    GroupElement operator()(GroupElement const& g) const;

   private:
    friend GroupEmbedding embed(OrderedGroup const&, OrderedGroup const&,
                                Rational const&);
    GroupEmbedding(OrderedGroup source, OrderedGroup target, Rational scale)
        : _source(source), _target(target), _scale(std::move(scale)) {}

    OrderedGroup _source;
    OrderedGroup _target;
    Rational     _scale;
  };

  // Throws GroupError when the scale is not positive or the scaled image
  // does not lie in the target (for example Z into Z with scale 1/2).
  GroupEmbedding embed(OrderedGroup const& source,
                       OrderedGroup const& target,
                       Rational const&     scale);

}  // namespace charone
