#include "charone/ordered_group.hpp"

#include <algorithm>

namespace charone {

  namespace {
    constexpr std::string_view kGamma = "γ";

    void check_same(OrderedGroup const& a, OrderedGroup const& b) {
      if (!(a == b)) {
        throw GroupError("group mismatch: " + a.name() + " vs " + b.name());
      }
    }

    std::string render_exponent(Rational const& q) {
      if (is_integer(q)) {
        return to_string(q);
      }
      return "(" + to_string(q) + ")";
    }
  }  // namespace

  OrderedGroup OrderedGroup::trivial() {
    return OrderedGroup(Kind::Trivial, 0);
  }

  OrderedGroup OrderedGroup::integers(std::size_t rank) {
    if (rank == 0) {
      return trivial();
    }
    return OrderedGroup(Kind::IntPower, rank);
  }

  OrderedGroup OrderedGroup::rationals() {
    return OrderedGroup(Kind::Rational, 1);
  }

  GroupElement OrderedGroup::identity() const {
    return GroupElement(*this, std::vector<Rational>(_rank, Rational(0)));
  }

  GroupElement OrderedGroup::element(std::vector<Rational> exponents) const {
    if (exponents.size() != _rank) {
      throw GroupError("expected " + std::to_string(_rank)
                       + " exponent(s) for group " + name());
    }
    if (is_integral()) {
      for (auto const& e : exponents) {
        if (!is_integer(e)) {
          throw GroupError("non-integral exponent " + to_string(e)
                           + " in group " + name());
        }
      }
    }
    return GroupElement(*this, std::move(exponents));
  }

  GroupElement OrderedGroup::power(Rational const& exponent) const {
    if (_rank != 1) {
      throw GroupError("power() needs a rank one group, got " + name());
    }
    return element({exponent});
  }

  std::string OrderedGroup::name() const {
    switch (_kind) {
      case Kind::Trivial:
        return "1";
      case Kind::IntPower:
        return _rank == 1 ? "Z" : "Z^" + std::to_string(_rank);
      case Kind::Rational:
        return "Q";
    }
    return "?";
  }

  Rational const& GroupElement::exponent() const {
    if (_exponents.size() != 1) {
      throw GroupError("exponent() needs a rank one group, got "
                       + _group.name());
    }
    return _exponents.front();
  }

  bool GroupElement::is_identity() const {
    return std::all_of(_exponents.begin(),
                       _exponents.end(),
                       [](Rational const& q) { return q == 0; });
  }

  std::strong_ordering compare(GroupElement const& g, GroupElement const& h) {
    check_same(g.group(), h.group());
    auto a = g.exponents();
    auto b = h.exponents();
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] < b[i]) {
        return std::strong_ordering::less;
      }
      if (b[i] < a[i]) {
        return std::strong_ordering::greater;
      }
    }
    return std::strong_ordering::equal;
  }

  GroupElement mul(GroupElement const& g, GroupElement const& h) {
    check_same(g.group(), h.group());
    std::vector<Rational> out(g.exponents().begin(), g.exponents().end());
    for (std::size_t i = 0; i < out.size(); ++i) {
      out[i] += h.exponents()[i];
    }
    return g.group().element(std::move(out));
  }

  GroupElement inverse(GroupElement const& g) {
    std::vector<Rational> out(g.exponents().begin(), g.exponents().end());
    for (auto& e : out) {
      e = -e;
    }
    return g.group().element(std::move(out));
  }

  std::string to_string(GroupElement const& g) {
    switch (g.group().kind()) {
      case OrderedGroup::Kind::Trivial:
        return "1";
      case OrderedGroup::Kind::IntPower:
        if (g.group().rank() > 1) {
          std::string out = "(";
          for (std::size_t i = 0; i < g.exponents().size(); ++i) {
            out += (i == 0 ? "" : ",") + to_string(g.exponents()[i]);
          }
          return out + ")";
        }
        [[fallthrough]];
      case OrderedGroup::Kind::Rational: {
        Rational const& a = g.exponent();
        if (a == 0) {
          return "1";
        }
        if (a == 1) {
          return std::string(kGamma);
        }
        return std::string(kGamma) + "^" + render_exponent(a);
      }
    }
    return "?";
  }

  GroupElement parse_group_element(OrderedGroup const& group,
                                   std::string_view    text) {
    auto fail = [&]() -> GroupError {
      return GroupError("cannot parse '" + std::string(text)
                        + "' as an element of " + group.name());
    };
    if (group.rank() > 1) {
      if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
        throw fail();
      }
      std::vector<Rational> exps;
      std::string_view      body = text.substr(1, text.size() - 2);
      while (true) {
        auto comma = body.find(',');
        try {
          exps.push_back(parse_rational(body.substr(0, comma)));
        } catch (std::invalid_argument const&) {
          throw fail();
        }
        if (comma == std::string_view::npos) {
          break;
        }
        body = body.substr(comma + 1);
      }
      return group.element(std::move(exps));
    }
    if (text == "1") {
      return group.identity();
    }
    if (group.kind() == OrderedGroup::Kind::Trivial) {
      throw fail();
    }
    std::string_view rest;
    if (text.starts_with(kGamma)) {
      rest = text.substr(kGamma.size());
    } else if (text.starts_with("g")) {
      rest = text.substr(1);
    } else {
      throw fail();
    }
    if (rest.empty()) {
      return group.power(1);
    }
    if (rest.front() != '^') {
      throw fail();
    }
    rest = rest.substr(1);
    if (!rest.empty() && rest.front() == '(') {
      if (rest.back() != ')') {
        throw fail();
      }
      rest = rest.substr(1, rest.size() - 2);
    }
    try {
      return group.power(parse_rational(rest));
    } catch (std::invalid_argument const&) {
      throw fail();
    }
  }

  GroupElement GroupEmbedding::operator()(GroupElement const& g) const {
    check_same(g.group(), _source);
    if (_target.kind() == OrderedGroup::Kind::Trivial) {
      return _target.identity();
    }
    if (_source.kind() == OrderedGroup::Kind::Trivial) {
      return _target.identity();
    }
    std::vector<Rational> out(g.exponents().begin(), g.exponents().end());
    for (auto& e : out) {
      e *= _scale;
    }
    return _target.element(std::move(out));
  }

  GroupEmbedding embed(OrderedGroup const& source,
                       OrderedGroup const& target,
                       Rational const&     scale) {
    if (scale <= 0) {
      throw GroupError("embedding scale must be positive, got "
                       + to_string(scale));
    }
    using Kind = OrderedGroup::Kind;
    if (source.kind() == Kind::Trivial) {
      return GroupEmbedding(source, target, scale);
    }
    if (target.kind() == Kind::Trivial || source.rank() != target.rank()) {
      throw GroupError("no injective embedding of " + source.name() + " into "
                       + target.name());
    }
    if (target.is_integral()
        && (source.kind() == Kind::Rational || !is_integer(scale))) {
      throw GroupError("image of " + source.name() + " under scale "
                       + to_string(scale) + " leaves " + target.name());
    }
    return GroupEmbedding(source, target, scale);
  }

}  // namespace charone
