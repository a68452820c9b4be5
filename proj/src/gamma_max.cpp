#include "charone/gamma_max.hpp"

#include <stdexcept>

namespace charone {

  GroupElement const& GammaMax::value() const {
    if (!_value) {
      throw std::logic_error("value() of the zero element");
    }
    return *_value;
  }

  namespace {
    void check_same(GammaMax const& x, GammaMax const& y) {
      if (!(x.group() == y.group())) {
        throw GroupError("group mismatch: " + x.group().name() + " vs "
                         + y.group().name());
      }
    }
  }  // namespace

  GammaMax gm_add(GammaMax const& x, GammaMax const& y) {
    check_same(x, y);
    if (x.is_zero()) {
      return y;
    }
    if (y.is_zero()) {
      return x;
    }
    return compare(x.value(), y.value()) < 0 ? y : x;
  }

  GammaMax gm_mul(GammaMax const& x, GammaMax const& y) {
    check_same(x, y);
    if (x.is_zero() || y.is_zero()) {
      return GammaMax::zero(x.group());
    }
    return GammaMax::unit(mul(x.value(), y.value()));
  }

  bool gm_leq(GammaMax const& x, GammaMax const& y) {
    return gm_add(x, y) == y;
  }

  bool gm_less(GammaMax const& x, GammaMax const& y) {
    return gm_leq(x, y) && !(x == y);
  }

  GammaMax gm_inverse(GammaMax const& x) {
    if (x.is_zero()) {
      throw std::domain_error("zero has no inverse");
    }
    return GammaMax::unit(inverse(x.value()));
  }

  std::string to_string(GammaMax const& x) {
    return x.is_zero() ? "0" : to_string(x.value());
  }

  GammaMax parse_gamma_max(OrderedGroup const& group, std::string_view text) {
    if (text == "0") {
      return GammaMax::zero(group);
    }
    return GammaMax::unit(parse_group_element(group, text));
  }

  std::vector<GammaMax> GammaMaxSemifield::window(std::int64_t radius) const {
    std::vector<GammaMax> out{zero()};
    if (_group.kind() == OrderedGroup::Kind::Trivial) {
      out.push_back(one());
      return out;
    }
    if (_group.rank() != 1) {
      throw GroupError("windows are only defined for rank one groups");
    }
    for (std::int64_t k = -radius; k <= radius; ++k) {
      out.push_back(GammaMax::power(_group, k));
    }
    return out;
  }

}  // namespace charone
