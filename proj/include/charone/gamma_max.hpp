// The idempotent semifield Γ_max = Γ ∪ {0}: addition is max, multiplication
// is the group law, 0 is absorbing.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "charone/ordered_group.hpp"

namespace charone {

  class GammaMax {
   public:
    static GammaMax zero(OrderedGroup group) {
      return GammaMax(group, std::nullopt);
    }

    static GammaMax unit(GroupElement g) {
      OrderedGroup group = g.group();
      return GammaMax(group, std::move(g));
    }

    static GammaMax one(OrderedGroup group) {
      return unit(group.identity());
    }

    // γ^a in a rank one group.
    static GammaMax power(OrderedGroup group, Rational const& exponent) {
      return unit(group.power(exponent));
    }

    bool is_zero() const noexcept {
      return !_value.has_value();
    }

    bool is_one() const {
      return _value && _value->is_identity();
    }

    // Throws std::logic_error on zero.
    GroupElement const& value() const;

    OrderedGroup const& group() const noexcept {
      return _group;
    }

    bool operator==(GammaMax const&) const = default;

   private:
    GammaMax(OrderedGroup group, std::optional<GroupElement> value)
        : _group(group), _value(std::move(value)) {}

    OrderedGroup                _group;
    std::optional<GroupElement> _value;
  };

  GammaMax gm_add(GammaMax const& x, GammaMax const& y);
  GammaMax gm_mul(GammaMax const& x, GammaMax const& y);
  // x + y == y.
  bool     gm_leq(GammaMax const& x, GammaMax const& y);
  // Strict: x <= y and x != y.
  bool     gm_less(GammaMax const& x, GammaMax const& y);
  // Throws std::domain_error on zero.
  GammaMax gm_inverse(GammaMax const& x);

  inline GammaMax operator+(GammaMax const& x, GammaMax const& y) {
    return gm_add(x, y);
  }

  inline GammaMax operator*(GammaMax const& x, GammaMax const& y) {
    return gm_mul(x, y);
  }

  std::string to_string(GammaMax const& x);
  GammaMax    parse_gamma_max(OrderedGroup const& group, std::string_view text);

  // Γ_max as a semiring object for the generic algorithms.
  class GammaMaxSemifield {
   public:
    using value_type = GammaMax;

    explicit GammaMaxSemifield(OrderedGroup group) : _group(group) {}

    OrderedGroup const& group() const noexcept {
      return _group;
    }

    GammaMax zero() const {
      return GammaMax::zero(_group);
    }
    GammaMax one() const {
      return GammaMax::one(_group);
    }
    GammaMax add(GammaMax const& x, GammaMax const& y) const {
      return gm_add(x, y);
    }
    GammaMax mul(GammaMax const& x, GammaMax const& y) const {
      return gm_mul(x, y);
    }
    bool is_unit(GammaMax const& x) const {
      return !x.is_zero();
    }
    GammaMax inverse(GammaMax const& x) const {
      return gm_inverse(x);
    }

    // 0 together with γ^k for -radius <= k <= radius (rank one integer
    // groups), or just {0, 1} for the trivial group.
    std::vector<GammaMax> window(std::int64_t radius) const;

   private:
    OrderedGroup _group;
  };

}  // namespace charone
