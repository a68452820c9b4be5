#include "charone/valuation.hpp"

#include <algorithm>
#include <stdexcept>

namespace charone {

  namespace {
    void require_rank_one(OrderedGroup const& g) {
      if (g.rank() > 1) {
        throw GroupError("down-sets need a group of rank at most one, got "
                         + g.name());
      }
    }

    bool is_trivial(OrderedGroup const& g) {
      return g.kind() == OrderedGroup::Kind::Trivial;
    }

    bool is_integer_group(OrderedGroup const& g) {
      return g.kind() == OrderedGroup::Kind::IntPower;
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // DownSet
  ////////////////////////////////////////////////////////////////////////

  DownSet DownSet::empty(OrderedGroup group) {
    require_rank_one(group);
    return DownSet(Shape::Empty, group, std::nullopt);
  }

  DownSet DownSet::zero_only(OrderedGroup group) {
    require_rank_one(group);
    return DownSet(Shape::ZeroOnly, group, std::nullopt);
  }

  DownSet DownSet::all(OrderedGroup group) {
    require_rank_one(group);
    return DownSet(Shape::All, group, std::nullopt);
  }

  DownSet DownSet::closed(GroupElement const& g) {
    require_rank_one(g.group());
    if (is_trivial(g.group())) {
      return all(g.group());
    }
    return DownSet(Shape::Closed, g.group(), g);
  }

  DownSet DownSet::open(GroupElement const& g) {
    require_rank_one(g.group());
    if (is_trivial(g.group())) {
      return zero_only(g.group());
    }
    if (is_integer_group(g.group())) {
      return closed(g.group().power(g.exponent() - 1));
    }
    return DownSet(Shape::Open, g.group(), g);
  }

  GroupElement const& DownSet::bound() const {
    if (!_bound) {
      throw std::logic_error("down-set has no cut point");
    }
    return *_bound;
  }

  bool DownSet::contains(GammaMax const& x) const {
    if (!(x.group() == _group)) {
      throw GroupError("group mismatch: " + x.group().name() + " vs "
                       + _group.name());
    }
    switch (_shape) {
      case Shape::Empty:
        return false;
      case Shape::ZeroOnly:
        return x.is_zero();
      case Shape::All:
        return true;
      case Shape::Closed:
        return x.is_zero() || compare(x.value(), *_bound) <= 0;
      case Shape::Open:
        return x.is_zero() || compare(x.value(), *_bound) < 0;
    }
    return false;
  }

  bool DownSet::subset_of(DownSet const& other) const {
    if (!(other._group == _group)) {
      throw GroupError("group mismatch: " + _group.name() + " vs "
                       + other._group.name());
    }
    using S = Shape;
    if (_shape == S::Empty || other._shape == S::All) {
      return true;
    }
    if (other._shape == S::Empty || _shape == S::All) {
      return _shape == other._shape;
    }
    if (_shape == S::ZeroOnly) {
      return true;
    }
    if (other._shape == S::ZeroOnly) {
      return false;
    }
    auto c = compare(*_bound, *other._bound);
    if (_shape == S::Closed && other._shape == S::Open) {
      return c < 0;
    }
    return c <= 0;
  }

  std::string to_string(DownSet const& d) {
    switch (d.shape()) {
      case DownSet::Shape::Empty:
        return "{}";
      case DownSet::Shape::ZeroOnly:
        return "{0}";
      case DownSet::Shape::All:
        return "all";
      case DownSet::Shape::Closed:
        return "{x <= " + to_string(d.bound()) + "}";
      case DownSet::Shape::Open:
        return "{x < " + to_string(d.bound()) + "}";
    }
    return "?";
  }

  std::vector<DownSet> representable_down_sets(OrderedGroup const& group,
                                               std::int64_t        radius) {
    std::vector<DownSet> out{DownSet::empty(group), DownSet::zero_only(group)};
    if (!is_trivial(group)) {
      if (!is_integer_group(group)) {
        throw GroupError("representable_down_sets needs Z or the trivial group");
      }
      for (std::int64_t n = -radius; n <= radius; ++n) {
        out.push_back(DownSet::closed(group.power(n)));
      }
    }
    out.push_back(DownSet::all(group));
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // MonomialValuation
  ////////////////////////////////////////////////////////////////////////

  MonomialValuation::MonomialValuation(OrderedGroup source,
                                       OrderedGroup target,
                                       Rational     scale)
      : _source(source), _target(target), _scale(std::move(scale)) {
    require_rank_one(source);
    require_rank_one(target);
    if (_scale < 0) {
      throw GroupError("valuation scale must be nonnegative");
    }
    if (_scale > 0 && !is_trivial(source)) {
      embed(source, target, _scale);  // validates the image
    }
  }

  GammaMax MonomialValuation::operator()(GammaMax const& x) const {
    if (!(x.group() == _source)) {
      throw GroupError("group mismatch: " + x.group().name() + " vs "
                       + _source.name());
    }
    if (x.is_zero()) {
      return GammaMax::zero(_target);
    }
    if (_scale == 0 || is_trivial(_source)) {
      return GammaMax::one(_target);
    }
    return GammaMax::power(_target, x.value().exponent() * _scale);
  }

  ////////////////////////////////////////////////////////////////////////
  // Valuation subsemirings
  ////////////////////////////////////////////////////////////////////////

  Verdict is_valuation_subsemiring(FiniteSemiring const& K, Subset const& R) {
    if (!is_unitgenerated(K)) {
      throw std::invalid_argument(K.name() + " is not unitgenerated");
    }
    if (!R[K.zero()] || !R[K.one()]) {
      return Verdict::fail("0 and 1 must belong to R");
    }
    if (!is_saturated(K, R)) {
      return Verdict::fail("not saturated");
    }
    for (Element x = 0; x < K.size(); ++x) {
      for (Element y = 0; y < K.size(); ++y) {
        if (R[x] && R[y] && !R[K.mul(x, y)]) {
          return Verdict::fail("not closed under products: "
                               + K.element_name(x) + " * " + K.element_name(y));
        }
      }
      if (auto inv = inverse_of(K, x); inv && !R[x] && !R[*inv]) {
        return Verdict::fail("neither " + K.element_name(x)
                             + " nor its inverse lies in R");
      }
    }
    return Verdict::pass();
  }

  UnitClasses unit_classes(FiniteSemiring const& K, Subset const& R) {
    if (auto ok = is_valuation_subsemiring(K, R); !ok) {
      throw std::invalid_argument("not a valuation subsemiring: "
                                  + ok.counterexample);
    }
    // [x] = [y] iff x y^-1 and y x^-1 both lie in R.
    auto                 us = units(K);
    std::vector<Element> reps;
    for (auto u : us) {
      bool known = std::any_of(reps.begin(), reps.end(), [&](Element r) {
        return R[K.mul(u, *inverse_of(K, r))] && R[K.mul(r, *inverse_of(K, u))];
      });
      if (!known) {
        reps.push_back(u);
      }
    }
    // A finite totally ordered group is trivial, so there is one class.
    if (reps.size() != 1) {
      throw std::logic_error("finite unit class group has "
                             + std::to_string(reps.size()) + " elements");
    }
    UnitClasses out;
    out.group = OrderedGroup::trivial();
    for (Element x = 0; x < K.size(); ++x) {
      out.class_of.push_back(inverse_of(K, x) ? GammaMax::one(out.group)
                                              : GammaMax::zero(out.group));
    }
    return out;
  }

  MonomialValuation unit_classes(GammaMaxSemifield const& K, DownSet const& R) {
    OrderedGroup const& G = K.group();
    if (is_trivial(G) && R == DownSet::all(G)) {
      return MonomialValuation::identity(G);
    }
    if (R == DownSet::all(G)) {
      return MonomialValuation(G, OrderedGroup::trivial(), Rational(0));
    }
    if (R == DownSet::closed(G.identity())) {
      return MonomialValuation::identity(G);
    }
    throw std::invalid_argument(to_string(R)
                                + " is not a valuation subsemiring of "
                                + G.name() + "_max");
  }

  TableValuation induced_valuation(FiniteSemiring const& K, Subset const& R) {
    UnitClasses    uc = unit_classes(K, R);
    TableValuation v;
    v.target = uc.group;
    for (Element x = 0; x < K.size(); ++x) {
      GammaMax value = GammaMax::zero(uc.group);
      for (auto u : units(K)) {
        if (K.leq(u, x)) {
          value = value + uc.class_of[u];
        }
      }
      v.values.push_back(value);
    }
    return v;
  }

  MonomialValuation induced_valuation(GammaMaxSemifield const& K,
                                      DownSet const&           R) {
    return unit_classes(K, R);
  }

  Subset ring_of_integers(FiniteSemiring const& K, TableValuation const& v) {
    Subset out = K.empty_subset();
    for (Element x = 0; x < K.size(); ++x) {
      out[x] = gm_leq(v(x), GammaMax::one(v.target));
    }
    return out;
  }

  DownSet ring_of_integers(MonomialValuation const& v) {
    return submodule_of_subsemigroup(
        v, DownSet::closed(v.target().identity()));
  }

  ////////////////////////////////////////////////////////////////////////
  // Correspondence
  ////////////////////////////////////////////////////////////////////////

  Subset submodule_of_subsemigroup(FiniteSemiring const& K,
                                   TableValuation const& v,
                                   DownSet const&        U) {
    Subset out = K.empty_subset();
    for (Element x = 0; x < K.size(); ++x) {
      out[x] = U.contains(v(x));
    }
    return out;
  }

  DownSet submodule_of_subsemigroup(MonomialValuation const& v,
                                    DownSet const&           U) {
    OrderedGroup const& S = v.source();
    using Shape           = DownSet::Shape;
    switch (U.shape()) {
      case Shape::Empty:
        return DownSet::empty(S);
      case Shape::ZeroOnly:
        return DownSet::zero_only(S);
      case Shape::All:
        return DownSet::all(S);
      case Shape::Closed:
      case Shape::Open:
        break;
    }
    if (v.scale() == 0 || is_trivial(S)) {
      return U.contains(GammaMax::one(v.target())) ? DownSet::all(S)
                                                   : DownSet::zero_only(S);
    }
    Rational t = U.bound().exponent() / v.scale();
    if (is_integer_group(S)) {
      Integer n = U.shape() == Shape::Closed ? floor(t) : ceil(t) - 1;
      return DownSet::closed(S.power(Rational(n)));
    }
    return U.shape() == Shape::Closed ? DownSet::closed(S.power(t))
                                      : DownSet::open(S.power(t));
  }

  DownSet subsemigroup_of_submodule(FiniteSemiring const& K,
                                    TableValuation const& v,
                                    Subset const&         M) {
    if (!is_trivial(v.target)) {
      throw std::invalid_argument(
          "finite valuations take values in the trivial group");
    }
    bool has_zero = false, has_one = false;
    for (Element x = 0; x < K.size(); ++x) {
      if (M[x]) {
        (v(x).is_zero() ? has_zero : has_one) = true;
      }
    }
    if (has_one && !has_zero) {
      throw std::invalid_argument("image " + format_subset(K, M)
                                  + " is not a down-set");
    }
    if (has_one) {
      return DownSet::all(v.target);
    }
    return has_zero ? DownSet::zero_only(v.target) : DownSet::empty(v.target);
  }

  DownSet subsemigroup_of_submodule(MonomialValuation const& v,
                                    DownSet const&           M) {
    OrderedGroup const& T = v.target();
    using Shape           = DownSet::Shape;
    bool collapse         = v.scale() == 0 || is_trivial(v.source());
    switch (M.shape()) {
      case Shape::Empty:
        return DownSet::empty(T);
      case Shape::ZeroOnly:
        return DownSet::zero_only(T);
      case Shape::All:
        return collapse ? DownSet::closed(T.identity()) : DownSet::all(T);
      case Shape::Closed:
        return DownSet::closed(v(GammaMax::unit(M.bound())).value());
      case Shape::Open:
        return collapse ? DownSet::closed(T.identity())
                        : DownSet::open(v(GammaMax::unit(M.bound())).value());
    }
    return DownSet::empty(T);
  }

  std::vector<DownSet> saturated_ideals(GammaMaxSemifield const& K,
                                        std::int64_t             radius) {
    OrderedGroup const&  G = K.group();
    std::vector<DownSet> out{DownSet::zero_only(G)};
    if (is_trivial(G)) {
      out.push_back(DownSet::all(G));
      return out;
    }
    for (std::int64_t n = -radius; n <= 0; ++n) {
      out.push_back(DownSet::closed(G.power(n)));
    }
    return out;
  }

  std::vector<Subset> saturated_ideals(FiniteSemiring const& R) {
    return saturated_submodules(R, R.full_subset(), R.full_subset());
  }

  Verdict check_ideals_totally_ordered(std::vector<DownSet> const& ideals) {
    for (auto const& I : ideals) {
      for (auto const& J : ideals) {
        if (!I.subset_of(J) && !J.subset_of(I)) {
          return Verdict::fail(to_string(I) + " and " + to_string(J)
                               + " are incomparable");
        }
      }
    }
    return Verdict::pass();
  }

  Verdict check_ideals_totally_ordered(FiniteSemiring const&      R,
                                       std::vector<Subset> const& ideals) {
    auto subset = [&](Subset const& a, Subset const& b) {
      for (Element x = 0; x < R.size(); ++x) {
        if (a[x] && !b[x]) {
          return false;
        }
      }
      return true;
    };
    for (auto const& I : ideals) {
      for (auto const& J : ideals) {
        if (!subset(I, J) && !subset(J, I)) {
          return Verdict::fail(format_subset(R, I) + " and "
                               + format_subset(R, J) + " are incomparable");
        }
      }
    }
    return Verdict::pass();
  }

}  // namespace charone
