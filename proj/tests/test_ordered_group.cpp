#include <random>

#include "doctest.h"

#include "charone/gamma_max.hpp"
#include "charone/ordered_group.hpp"

using namespace charone;

TEST_CASE("lexicographic comparison") {
  auto Z2 = OrderedGroup::integers(2);
  CHECK(compare(Z2.element({1, 0}), Z2.element({0, 5})) > 0);
  CHECK(compare(Z2.identity(), Z2.identity()) == 0);
  auto Z = OrderedGroup::integers();
  CHECK(compare(Z.power(2), Z.power(5)) < 0);
  CHECK_THROWS_WITH_AS(compare(Z.power(1), OrderedGroup::rationals().power(1)),
                       doctest::Contains("group mismatch"),
                       GroupError);
}

TEST_CASE("group laws") {
  auto Z = OrderedGroup::integers();
  CHECK(Z.power(2) * Z.power(3) == Z.power(5));
  CHECK(inverse(Z.power(4)) == Z.power(-4));
  auto Q = OrderedGroup::rationals();
  CHECK(Q.power(Rational(1, 2)) * Q.power(Rational(1, 3)) == Q.power(Rational(5, 6)));
  CHECK_THROWS_AS(Z.power(Rational(1, 2)), GroupError);
  CHECK_THROWS_AS(Z.element({1, 2}), GroupError);
}

TEST_CASE("embeddings") {
  auto Z = OrderedGroup::integers();
  auto Q = OrderedGroup::rationals();
  CHECK(embed(Z, Q, 1)(Z.power(3)) == Q.power(3));
  CHECK(embed(Z, Q, Rational(1, 2))(Z.power(1)) == Q.power(Rational(1, 2)));
  CHECK_THROWS_AS(embed(Z, Q, 0), GroupError);
  CHECK_THROWS_AS(embed(Z, Z, Rational(1, 2)), GroupError);
  CHECK_THROWS_AS(embed(Q, Z, 1), GroupError);
  CHECK(embed(Z, Z, 2)(Z.power(-3)) == Z.power(-6));
}

TEST_CASE("rendering round-trips") {
  auto Z  = OrderedGroup::integers();
  auto Q  = OrderedGroup::rationals();
  auto Z2 = OrderedGroup::integers(2);
  CHECK(to_string(Z.power(0)) == "1");
  CHECK(to_string(Z.power(1)) == "γ");
  CHECK(to_string(Z.power(-4)) == "γ^-4");
  CHECK(to_string(Q.power(Rational(-1, 2))) == "γ^(-1/2)");
  CHECK(to_string(Z2.element({1, -2})) == "(1,-2)");
  for (int a = -6; a <= 6; ++a) {
    for (int b = 1; b <= 4; ++b) {
      auto g = Q.power(Rational(a, b));
      CHECK(parse_group_element(Q, to_string(g)) == g);
    }
    CHECK(parse_group_element(Z, to_string(Z.power(a))) == Z.power(a));
    CHECK(parse_group_element(Z2, to_string(Z2.element({a, -a})))
          == Z2.element({a, -a}));
  }
  CHECK(parse_group_element(Z, "g^3") == Z.power(3));
  CHECK_THROWS_AS(parse_group_element(Z, "h^3"), GroupError);
}

TEST_CASE("translation invariance and embedding monotonicity") {
  std::mt19937_64 rng(20260101);
  auto            draw = [&](int lo, int hi) {
    return static_cast<int>(rng() % static_cast<unsigned>(hi - lo + 1)) + lo;
  };
  auto Z2 = OrderedGroup::integers(2);
  auto Q  = OrderedGroup::rationals();
  auto Z  = OrderedGroup::integers();
  auto j  = embed(Z, Q, Rational(1, 2));
  for (int i = 0; i < 500; ++i) {
    auto g = Z2.element({draw(-5, 5), draw(-5, 5)});
    auto h = Z2.element({draw(-5, 5), draw(-5, 5)});
    auto k = Z2.element({draw(-5, 5), draw(-5, 5)});
    CHECK(compare(g, h) == compare(g * k, h * k));
    CHECK(g * inverse(g) == Z2.identity());
    auto a = Z.power(draw(-20, 20));
    auto b = Z.power(draw(-20, 20));
    CHECK(compare(a, b) == compare(j(a), j(b)));
  }
}

TEST_CASE("gamma max arithmetic") {
  auto Z  = OrderedGroup::integers();
  auto g  = [&](int a) { return GammaMax::power(Z, a); };
  auto zr = GammaMax::zero(Z);
  CHECK(g(2) + g(5) == g(5));
  CHECK(zr + g(3) == g(3));
  CHECK(g(2) * g(-2) == GammaMax::one(Z));
  CHECK(zr * g(7) == zr);
  CHECK(gm_leq(g(2), g(3)));
  CHECK(gm_leq(zr, g(-9)));
  CHECK_FALSE(gm_leq(g(1), g(0)));
  CHECK(parse_gamma_max(Z, "0") == zr);
  CHECK(to_string(zr) == "0");
  CHECK_THROWS_AS(gm_inverse(zr), std::domain_error);
  CHECK_THROWS_AS(zr.value(), std::logic_error);
}

TEST_CASE("gamma max semifield axioms on a window") {
  GammaMaxSemifield K(OrderedGroup::integers());
  auto              w = K.window(3);
  CHECK(w.size() == 8);
  for (auto const& x : w) {
    CHECK(x + x == x);
    CHECK(K.zero() + x == x);
    CHECK(K.one() * x == x);
    CHECK(K.zero() * x == K.zero());
    if (!x.is_zero()) {
      CHECK(x * K.inverse(x) == K.one());
    }
    for (auto const& y : w) {
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      for (auto const& z : w) {
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
      }
    }
  }
  GammaMaxSemifield T(OrderedGroup::trivial());
  CHECK(T.window(5).size() == 2);
}
