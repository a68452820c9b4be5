#include <doctest.h>

#include <random>

#include "charone/frac_ideal.hpp"
#include "charone/idem_core.hpp"
#include "lattice_oracle.hpp"

using namespace charone;
using namespace charone::test;

namespace {

  GammaMax gz(std::int64_t n) {
    return GammaMax::power(OrderedGroup::integers(), Rational(n));
  }

  GammaMax gq(Rational const& q) {
    return GammaMax::power(OrderedGroup::rationals(), q);
  }

}  // namespace

TEST_CASE("local rationals stay in Z_(p)") {
  LocalRational x(Rational(3, 2), 5), y(Rational(5, 7), 5);
  CHECK((x + y).value() == Rational(31, 14));
  CHECK((x * y).valuation() == 1);
  CHECK(x.is_unit());
  CHECK_FALSE(y.is_unit());
  CHECK_THROWS_AS(LocalRational(Rational(1, 5), 5), std::domain_error);
  CHECK_THROWS_AS(x + LocalRational(1, 3), std::invalid_argument);
}

TEST_CASE("fractional ideals of Q over Z_(5)") {
  auto I = [](std::int64_t n) { return QfracIdeal::power(5, n); };
  CHECK(qf_add(I(1), I(-1)) == I(-1));
  CHECK(qf_mul(I(1), I(-1)) == I(0));
  CHECK(qf_leq(I(1), I(0)));
  CHECK_FALSE(qf_leq(I(0), I(1)));
  CHECK(qf_leq(QfracIdeal::zero(5), I(7)));
  CHECK_THROWS_AS(qf_add(I(0), QfracIdeal::power(3, 0)), std::invalid_argument);
  CHECK(to_string(I(-2)) == "5^-2Z_(5)");

  std::vector<Rational> gens{Rational(10), Rational(3, 25), Rational(0)};
  CHECK(QfracIdeal::generated_by(5, gens) == I(-2));
  CHECK(QfracIdeal::generated_by(5, {}) == QfracIdeal::zero(5));

  // Semiring laws and the generator-level meaning of sum and product.
  QfracSemiring S(5);
  auto          w = S.window(6);
  for (auto const& A : w) {
    CHECK(S.add(A, A) == A);
    for (auto const& B : w) {
      CHECK(S.add(A, B) == S.add(B, A));
      CHECK(S.mul(A, B) == S.mul(B, A));
      CHECK(qf_leq(A, B) == (S.add(A, B) == B));
      for (auto const& C : w) {
        CHECK(S.mul(A, S.add(B, C)) == S.add(S.mul(A, B), S.mul(A, C)));
      }
      if (!A.is_zero() && !B.is_zero()) {
        Rational a = rpow(5, A.exponent()), b = rpow(5, B.exponent());
        std::vector<Rational> sum{a, b}, prod{a * b};
        CHECK(QfracIdeal::generated_by(5, sum) == S.add(A, B));
        CHECK(QfracIdeal::generated_by(5, prod) == S.mul(A, B));
      }
    }
  }
}

TEST_CASE("field elements parse and print") {
  QuadField F(-1);
  CHECK(F.parse("2+i") == QuadNumber{2, 1});
  CHECK(F.parse("1/2-3/4*sqrt(-1)") == QuadNumber{Rational(1, 2), Rational(-3, 4)});
  CHECK(F.parse("-i") == QuadNumber{0, -1});
  CHECK(F.format(QuadNumber{2, -1}) == "2-i");
  CHECK(F.format(QuadNumber{Rational(1, 3), Rational(5, 2)}) == "1/3+5/2*i");
  CHECK_THROWS_AS(F.parse("1+sqrt(2)"), std::invalid_argument);
  CHECK_THROWS_AS(F.parse("x"), std::invalid_argument);

  QuadField G(3);
  QuadNumber x{Rational(-7, 3), Rational(2, 9)};
  CHECK(G.parse(G.format(x)) == x);
  CHECK(G.format(x) == "-7/3+2/9*sqrt(3)");
  CHECK(G.mul(x, G.inverse(x)) == G.one());
  CHECK_THROWS_AS(QuadField(4), std::invalid_argument);
}

TEST_CASE("lattice examples at p = 5, d = -1") {
  Integer      p = 5;
  std::int64_t d = -1;
  QuadLattice  O = QuadLattice::order(p, d);
  QuadLattice  P = principal(p, d, {2, 1});
  QuadLattice  Q = principal(p, d, {2, -1});
  CHECK(lat_mul(O, O) == O);
  CHECK(lat_mul(P, Q) == principal(p, d, {5, 0}));
  CHECK(lat_add(lat_mul(P, O), lat_mul(Q, O)) == O);
  CHECK(principal(p, d, {1, 0}) == QuadLattice::identity(p, d));
  CHECK(QuadLattice::identity(p, d).rank() == 1);
  CHECK(O.rank() == 2);

  // (1+i, 1-i) has determinant -2, a unit at 5 but not at 2.
  Gens g{{1, 1}, {1, -1}};
  CHECK(QuadLattice::generated_by(5, d, g) == O);
  CHECK_FALSE(QuadLattice::generated_by(2, d, g) == QuadLattice::order(2, d));
  CHECK(lat_leq(QuadLattice::generated_by(2, d, g), QuadLattice::order(2, d)));

  CHECK_THROWS_AS(lat_add(O, QuadLattice::order(3, d)), std::invalid_argument);
  CHECK_THROWS_AS(lat_add(O, QuadLattice::order(5, 2)), std::invalid_argument);
}

TEST_CASE("lattice arithmetic agrees with the generator oracle") {
  for (auto [p, d] : {std::pair<int, int>{5, -1}, {2, -1}, {3, -1}}) {
    Oracle          oracle{p, d};
    std::mt19937_64 rng(1000 + p);
    std::size_t     discrepancies = 0;
    for (int trial = 0; trial < 600; ++trial) {
      Gens        g = random_gens(rng, p), h = random_gens(rng, p),
           k        = random_gens(rng, p);
      QuadLattice M = QuadLattice::generated_by(p, d, g);
      QuadLattice N = QuadLattice::generated_by(p, d, h);
      QuadLattice L = QuadLattice::generated_by(p, d, k);

      discrepancies += !oracle.same(M.basis(), g);
      discrepancies += !oracle.same(lat_add(M, N).basis(), oracle.sum(g, h));
      discrepancies += !oracle.same(lat_mul(M, N).basis(), oracle.product(g, h));
      discrepancies += lat_leq(M, N) != oracle.leq(g, h);
      discrepancies += (M == N) != oracle.same(g, h);
      discrepancies += M.contains(h.front()) != oracle.leq({h.front()}, g);

      discrepancies += !(lat_add(M, N) == lat_add(N, M));
      discrepancies += !(lat_mul(M, N) == lat_mul(N, M));
      discrepancies += !(lat_add(M, M) == M);
      discrepancies += !(lat_add(lat_add(M, N), L) == lat_add(M, lat_add(N, L)));
      discrepancies += !(lat_mul(lat_mul(M, N), L) == lat_mul(M, lat_mul(N, L)));
      discrepancies += !(lat_mul(M, lat_add(N, L))
                         == lat_add(lat_mul(M, N), lat_mul(M, L)));
      discrepancies += lat_leq(M, N) != (lat_add(M, N) == N);
    }
    CAPTURE(p);
    CHECK(discrepancies == 0);
  }
}

TEST_CASE("valuations give homomorphisms on fractional ideals") {
  Integer p = 5;
  auto    v = padic_valuation_on_q(p);
  auto    f = hom_from_valuation(v, p);
  for (std::int64_t n = -8; n <= 8; ++n) {
    CHECK(f(QfracIdeal::power(p, n)) == gz(-n));
  }
  CHECK(f(QfracIdeal::zero(p)).is_zero());
  auto w = QfracSemiring(p).window(8);
  CHECK(check_ideal_hom(f, w));

  RationalValuation wrong{OrderedGroup::integers(), [&](Rational const& q) {
                            return q == 0 ? GammaMax::zero(OrderedGroup::integers())
                                          : gz(padic_valuation(q, p));
                          }};
  CHECK_THROWS_AS(hom_from_valuation(wrong, p), std::domain_error);

  // Round trips on the battery.
  auto back = valuation_from_hom(f, p);
  for (auto const& x : sample_battery(p, -1)) {
    if (x.b == 0) {
      CHECK(back(x.a) == v(x.a));
    }
  }
  auto t  = trivial_valuation_on_q();
  auto ft = hom_from_valuation(t, p);
  CHECK(ft(QfracIdeal::power(p, 3)).is_one());
  CHECK(valuation_from_hom(ft, p)(Rational(1, 5)).is_one());
  CHECK(valuation_from_hom(ft, p)(Rational(0)).is_zero());
}

TEST_CASE("valuations give homomorphisms on lattices") {
  Integer      p     = 5;
  std::int64_t d     = -1;
  auto         datum = extension_oracle(p, d);
  QuadField    F(d);
  auto const&  ext = datum.extensions.front();
  REQUIRE(ext.pi == QuadNumber{2, 1});
  auto w = extension_valuation(datum, ext);
  auto f = hom_from_valuation(w, p, d);
  CHECK(f(principal(p, d, {2, 1})) == gq(-1));
  CHECK(f(QuadLattice::order(p, d)).is_one());
  CHECK(f(QuadLattice::zero(p, d)).is_zero());

  auto lattices = random_lattices(p, d, 30, 7);
  lattices.push_back(QuadLattice::order(p, d));
  CHECK(check_ideal_hom(f, lattices));

  auto battery = sample_battery(p, d);
  auto back    = valuation_from_hom(f, p, d);
  for (auto const& x : battery) {
    CHECK(back(x) == w(x));
  }
  auto again = hom_from_valuation(back, p, d);
  for (auto const& x : battery) {
    auto X = principal(p, d, x);
    CHECK(again(X) == f(X));
  }
  CHECK(is_valuation_on(F, std::span<QuadNumber const>(battery), back,
                        [&](QuadNumber const& x) { return F.format(x); }));
}

TEST_CASE("submodules as saturated subsemigroups") {
  Integer       p = 5;
  QfracSemiring S(p);
  auto          w        = S.window(8);
  auto          integers = subsemigroup_of_submodule(QfracIdeal::power(p, 0));
  for (auto const& I : w) {
    CHECK(integers(I) == (I.is_zero() || I.exponent() >= 0));
  }
  auto everything = subsemigroup_of_submodule(std::optional<QfracIdeal>{});
  auto nothing    = subsemigroup_of_submodule(QfracIdeal::zero(p));
  for (auto const& I : w) {
    CHECK(everything(I));
    CHECK(nothing(I) == I.is_zero());
  }

  std::span<QfracIdeal const> span(w);
  for (auto const& N : w) {
    auto member = subsemigroup_of_submodule(N);
    CHECK(is_saturated_on(S, span, member));
    for (auto const& N2 : w) {
      auto member2  = subsemigroup_of_submodule(N2);
      bool included = true;
      for (auto const& I : w) {
        included = included && (!member(I) || member2(I));
      }
      CHECK(included == qf_leq(N, N2));
    }
  }

  QuadLatticeSemiring L(p, -1);
  auto                lattices = random_lattices(p, -1, 12, 3, 3);
  lattices.push_back(L.zero());
  std::span<QuadLattice const> lspan(lattices);
  for (auto const& N : lattices) {
    auto member = subsemigroup_of_submodule(N);
    CHECK(is_saturated_on(L, lspan, member));
    CHECK(member(N));
  }
}

TEST_CASE("extension oracle classifies primes") {
  auto split = extension_oracle(5, -1);
  CHECK(split.kind == "split");
  REQUIRE(split.extensions.size() == 2);
  CHECK(split.extensions[0].pi == QuadNumber{2, 1});
  CHECK(split.extensions[1].pi == QuadNumber{2, -1});
  for (auto const& e : split.extensions) {
    CHECK(e.e == 1);
    CHECK(e.f == 1);
  }

  auto ram = extension_oracle(2, -1);
  CHECK(ram.kind == "ramified");
  REQUIRE(ram.extensions.size() == 1);
  CHECK(ram.extensions[0].e == 2);
  CHECK(ram.extensions[0].pi == QuadNumber{1, 1});
  CHECK(ram.extensions[0].scale == Rational(1, 2));

  auto inert = extension_oracle(3, -1);
  CHECK(inert.kind == "inert");
  REQUIRE(inert.extensions.size() == 1);
  CHECK(inert.extensions[0].f == 2);

  CHECK(extension_oracle(2, 2).extensions[0].pi == QuadNumber{0, 1});
  CHECK(extension_oracle(2, 3).extensions[0].pi == QuadNumber{1, 1});
  CHECK(extension_oracle(3, 3).extensions[0].pi == QuadNumber{0, 1});
  CHECK(extension_oracle(7, 2).kind == "split");
  CHECK(extension_oracle(5, 2).kind == "inert");
  CHECK_THROWS_AS(extension_oracle(2, 5), std::invalid_argument);
  CHECK_THROWS_AS(extension_oracle(4, -1), std::invalid_argument);
  CHECK_THROWS_AS(extension_oracle(5, 8), std::invalid_argument);

  // v_π against a direct search over powers of π.
  for (auto [p, d] : {std::pair<int, int>{5, -1}, {2, -1}, {3, -1}, {2, 2},
                      {3, 3}, {7, 2}, {11, 3}, {13, -1}}) {
    auto datum = extension_oracle(p, d);
    for (auto const& ext : datum.extensions) {
      CHECK(pi_adic_valuation(datum, ext, ext.pi) == 1);
      for (auto const& x : sample_battery(p, d)) {
        CAPTURE(p);
        CAPTURE(d);
        CHECK(pi_adic_valuation(datum, ext, x)
              == brute_pi_valuation(d, p, ext.pi, datum.kind == "split", x));
      }
    }
  }
}

TEST_CASE("extended valuations restrict to the p-adic valuation") {
  QuadField F(-1);

  auto five = extend_valuation(5, -1);
  CHECK(five.passed());
  REQUIRE(five.checks.size() == 2);
  for (auto const& c : five.checks) {
    auto w = extension_valuation(five.datum, c.extension);
    CHECK(w({5, 0}) == gq(-1));
  }

  auto two = extend_valuation(2, -1);
  CHECK(two.passed());
  REQUIRE(two.checks.size() == 1);
  auto w2 = extension_valuation(two.datum, two.checks[0].extension);
  CHECK(w2({1, 1}) == gq(Rational(-1, 2)));
  CHECK(w2({2, 0}) == gq(-1));

  auto three = extend_valuation(3, -1);
  CHECK(three.passed());
  auto w3 = extension_valuation(three.datum, three.checks[0].extension);
  CHECK(w3({3, 0}) == gq(-1));
  CHECK(w3({1, 1}).is_one());

  for (auto [p, d] : {std::pair<int, int>{2, 2}, {2, 3}, {3, 3}, {7, 2},
                      {11, 3}, {13, -1}}) {
    CAPTURE(p);
    CAPTURE(d);
    CHECK(extend_valuation(p, d).passed());
  }
}

TEST_CASE("integral relations from characteristic polynomials") {
  std::vector<QuadNumber> xs{{1, 1}, {1, 0}, {Rational(1, 5), 0}, {0, 0},
                             {Rational(1, 2), Rational(1, 2)}};
  auto rel = check_integral_relation(5, -1, xs);
  QuadLattice one = QuadLattice::identity(5, -1);

  REQUIRE(rel[0].module);
  CHECK(rel[0].verified);
  CHECK(*rel[0].c0 == one);
  CHECK(*rel[0].c1 == one);
  CHECK(*rel[0].module == QuadLattice::order(5, -1));

  CHECK(rel[1].verified);
  CHECK(*rel[1].c1 == one);
  CHECK(rel[1].c0->rank() == 0);

  CHECK_FALSE(rel[2].module);
  CHECK_FALSE(rel[2].verified);
  CHECK(rel[3].verified);

  // (1+i)/2 is integral at 5 (2 is a unit) but not at 2.
  CHECK(rel[4].verified);
  auto at2 = check_integral_relation(2, -1, std::span<QuadNumber const>(&xs[4], 1));
  CHECK_FALSE(at2[0].module);
}

TEST_CASE("principal lattices are invertible") {
  for (auto [p, d] : {std::pair<int, int>{5, -1}, {2, -1}, {3, -1}}) {
    QuadField F(d);
    auto      battery  = sample_battery(p, d);
    auto      lattices = random_lattices(p, d, 40, 11);
    CHECK(check_principal_invertibility(p, d, battery, lattices));
  }
  QuadField   F(-1);
  QuadNumber  x{2, 1};
  CHECK(lat_mul(principal(5, -1, x), principal(5, -1, F.inverse(x)))
        == QuadLattice::identity(5, -1));
}
