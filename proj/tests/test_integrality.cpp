#include "doctest.h"

#include "charone/integrality.hpp"
#include "charone/valuation_order.hpp"
#include "support.hpp"

using namespace charone;
using charone::test::corpus;
using charone::test::subset;
using charone::test::whole_corpus;

namespace {
  OrderedGroup const      Z = OrderedGroup::integers();
  GammaMaxSemifield const Zmax(Z);
  DownSet const           kIntegers = DownSet::closed(Z.identity());

  GammaMax g(int a) {
    return GammaMax::power(Z, a);
  }

  std::vector<Subset> subsemirings_of(FiniteSemiring const& A) {
    std::vector<Subset> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << A.size()); ++mask) {
      Subset s(A.size(), false);
      for (Element x = 0; x < A.size(); ++x) {
        s[x] = (mask >> x) & 1;
      }
      bool ok = s[A.zero()] && s[A.one()];
      for (Element x = 0; x < A.size() && ok; ++x) {
        for (Element y = 0; y < A.size() && ok; ++y) {
          ok = !s[x] || !s[y] || (s[A.add(x, y)] && s[A.mul(x, y)]);
        }
      }
      if (ok) {
        out.push_back(s);
      }
    }
    return out;
  }

  std::vector<std::vector<Element>> classes(Contraction const& c) {
    std::vector<std::vector<Element>> out(c.number_of_classes());
    for (Element x = 0; x < c.class_of.size(); ++x) {
      if (c.class_of[x] != Contraction::npos) {
        out[c.class_of[x]].push_back(x);
      }
    }
    return out;
  }

  // x ~ y computed from the definition, without the library search.
  bool related_by_hand(FiniteSemiring const& A, Subset const& R, Element x,
                       Element y) {
    bool up = false, down = false;
    for (Element r = 0; r < A.size(); ++r) {
      if (R[r]) {
        up   = up || A.leq(x, A.mul(r, y));
        down = down || A.leq(y, A.mul(r, x));
      }
    }
    return up && down;
  }
}  // namespace

TEST_CASE("contraction classes of the corpus examples") {
  auto C3 = corpus("c3");
  auto c  = contract(C3, subset(C3, "0,1"));
  CHECK(classes(c) == std::vector<std::vector<Element>>{{0}, {1}, {2}});

  auto B  = corpus("b_z2");
  auto cb = contract(B, subset(B, "0,1"));
  CHECK(cb.number_of_classes() == 4);
  auto cs = contract(B, B.full_subset());
  CHECK(cs.number_of_classes() == 2);
  CHECK(cs.class_of[B.find("1")] == cs.class_of[B.find("g")]);
  CHECK(cs.class_of[B.find("1")] == cs.class_of[B.find("1+g")]);
  CHECK(cs.class_of[B.find("0")] != cs.class_of[B.find("1")]);

  Quotient q = contraction_semiring(B, cs);
  CHECK(q.semiring.size() == 2);
  CHECK(is_isomorphic(q.semiring, corpus("bool")));

  CHECK(contraction_leq(C3, c, C3.find("a"), C3.find("1")));
  CHECK_FALSE(contraction_leq(C3, c, C3.find("1"), C3.find("a")));
  CHECK(contraction_down_set(C3, c, C3.find("a")) == subset(C3, "0,a"));
}

TEST_CASE("contraction relation against the definition") {
  for (auto const& A : whole_corpus()) {
    for (auto const& R : subsemirings_of(A)) {
      auto c = contract(A, R);
      for (Element x = 0; x < A.size(); ++x) {
        for (Element y = 0; y < A.size(); ++y) {
          CHECK((c.class_of[x] == c.class_of[y]) == related_by_hand(A, R, x, y));
          bool below = false;
          for (Element r = 0; r < A.size(); ++r) {
            below = below || (R[r] && A.leq(x, A.mul(r, y)));
          }
          CHECK(contraction_leq(A, c, x, y) == below);
        }
        CHECK(c.representative[c.class_of[x]] <= x);
      }
      // The quotient order agrees with the contraction order.
      Quotient q = contraction_semiring(A, c);
      for (Element x = 0; x < A.size(); ++x) {
        for (Element y = 0; y < A.size(); ++y) {
          CHECK(q.semiring.leq(q.map[x], q.map[y]) == contraction_leq(A, c, x, y));
        }
      }
    }
  }
}

TEST_CASE("contraction of submodules and errors") {
  auto C3 = corpus("c3");
  auto R  = subset(C3, "0,1");
  auto M  = subset(C3, "0,a");
  auto c  = contract(C3, R, M);
  CHECK(c.number_of_classes() == 2);
  CHECK(c.class_of[C3.find("1")] == Contraction::npos);
  CHECK_THROWS_AS(contraction_leq(C3, c, C3.find("1"), C3.find("a")),
                  std::invalid_argument);
  CHECK_THROWS_AS(contraction_semiring(C3, c), std::invalid_argument);
  CHECK_THROWS_AS(contract(C3, R, subset(C3, "a")), std::invalid_argument);
  CHECK_THROWS_AS(contract(C3, Subset(2, true)), std::invalid_argument);
}

TEST_CASE("Γ_max contractions") {
  GammaContraction o(Zmax, kIntegers);
  CHECK(check_contraction_on_window(o, 6));
  CHECK(o.class_of(g(3)) == g(3));
  CHECK(o.leq(g(-2), g(1)));
  CHECK_FALSE(o.leq(g(1), g(-2)));

  GammaContraction all(Zmax, DownSet::all(Z));
  CHECK(check_contraction_on_window(all, 6));
  CHECK(all.class_of(g(-5)) == Zmax.one());
  CHECK(all.class_of(Zmax.zero()) == Zmax.zero());
  CHECK(all.leq(g(4), g(-4)));
  CHECK_FALSE(all.leq(g(4), Zmax.zero()));

  CHECK_THROWS_AS(GammaContraction(Zmax, DownSet::closed(Z.power(2))),
                  std::invalid_argument);
  CHECK_THROWS_AS(GammaContraction(Zmax, DownSet::zero_only(Z)),
                  std::invalid_argument);
}

TEST_CASE("R<x> and integral witnesses") {
  auto B = corpus("b_z2");
  auto R = subset(B, "0,1");
  CHECK(r_angle_x(B, R, B.find("g")) == B.full_subset());
  CHECK(r_angle_x(B, R, B.find("1")) == R);

  auto C3 = corpus("c3");
  CHECK(r_angle_x(C3, subset(C3, "0,1"), C3.find("a")) == C3.full_subset());

  auto w = is_integral(B, R, B.find("g"));
  REQUIRE(w);
  CHECK(w->degree == 2);
  CHECK(w->coefficients == std::vector<Element>{B.find("1"), B.find("0")});
  CHECK(format_witness(B, *w) == "n=2, c0=1, c1=0");

  auto one = is_integral(B, R, B.one());
  REQUIRE(one);
  CHECK(one->coefficients[0] == B.one());
  CHECK(one->coefficients[1] == B.zero());

  // Finite tables are always integral: R<x> is finite.
  for (auto const& A : whole_corpus()) {
    for (auto const& S : subsemirings_of(A)) {
      for (Element x = 0; x < A.size(); ++x) {
        auto wx = is_integral(A, S, x);
        REQUIRE(wx);
        Element rhs = A.zero();
        for (std::size_t i = 0; i < wx->degree; ++i) {
          CHECK(S[wx->coefficients[i]]);
          rhs = A.add(rhs, A.mul(wx->coefficients[i], A.power(x, i)));
        }
        CHECK(A.leq(A.power(x, wx->degree), rhs));
      }
    }
  }
}

TEST_CASE("bounded integrality over Z_max") {
  auto r = is_integral(Zmax, kIntegers, g(1));
  CHECK(r.status == SearchStatus::UnknownBeyondBound);
  CHECK_FALSE(r.witness);

  auto one = is_integral(Zmax, kIntegers, Zmax.one());
  REQUIRE(one.status == SearchStatus::Found);
  CHECK(one.witness->degree == 2);
  CHECK(one.witness->coefficients[0] == Zmax.one());
  CHECK(one.witness->coefficients[1] == Zmax.zero());

  for (int a = -6; a <= 0; ++a) {
    CHECK(is_integral(Zmax, kIntegers, g(a)).status == SearchStatus::Found);
  }
  for (int a = 1; a <= 6; ++a) {
    CHECK(is_integral(Zmax, kIntegers, g(a)).status
          == SearchStatus::UnknownBeyondBound);
    CHECK(is_integral(Zmax, DownSet::all(Z), g(a)).status == SearchStatus::Found);
  }
}

TEST_CASE("quasiintegral elements") {
  auto B = corpus("b_z2");
  auto R = subset(B, "0,1");
  CHECK(is_quasiintegral(B, R, B.find("1+g")) == B.find("1+g"));
  CHECK(is_quasiintegral(B, R, B.zero()) == B.one());
  CHECK(is_quasiintegral(B, R, B.one()) == B.one());
  CHECK(is_quasiintegral(B, R, B.find("g")).has_value());

  auto C3 = corpus("c3");
  CHECK_THROWS_AS(is_quasiintegral(C3, subset(C3, "0,1"), C3.find("a")),
                  std::domain_error);

  GammaContraction o(Zmax, kIntegers);
  CHECK_FALSE(is_quasiintegral(o, g(1)));
  CHECK(is_quasiintegral(o, g(-3)) == Zmax.one());
  CHECK(is_quasiintegral(o, Zmax.zero()) == Zmax.one());
  GammaContraction all(Zmax, DownSet::all(Z));
  CHECK(is_quasiintegral(all, g(5)).has_value());
}

TEST_CASE("quasiintegrality routes agree on simple tables") {
  for (auto const& A : whole_corpus()) {
    if (!is_simple(A)) {
      continue;
    }
    for (auto const& R : subsemirings_of(A)) {
      for (Element x = 0; x < A.size(); ++x) {
        bool by_class  = is_quasiintegral(A, R, x).has_value();
        auto module    = quasiintegral_module(A, R, x);
        CHECK(by_class == module.has_value());
        if (module) {
          CHECK(is_saturated(A, *module));
          CHECK(is_finite_module(A, R, *module));
        }
      }
    }
  }
}

TEST_CASE("quasiintegral modules on non-simple tables") {
  auto C3 = corpus("c3");
  auto R  = subset(C3, "0,1");
  // C3 is totally ordered with 1 on top, so every element is integral and
  // C3 itself is a faithful finite R<x>-module.
  for (Element x = 0; x < C3.size(); ++x) {
    auto M = quasiintegral_module(C3, R, x);
    REQUIRE(M);
    CHECK(is_integral(C3, R, x));
  }
  CHECK(is_extensible(C3, R));
  CHECK(is_extensible(corpus("chain4"), subset(corpus("chain4"), "0,1")));
}

TEST_CASE("quasiintegral closure") {
  auto B = corpus("b_z2");
  CHECK(quasiintegral_closure(B, subset(B, "0,1")) == B.full_subset());
  CHECK(quasiintegral_closure(B, B.full_subset()) == B.full_subset());
  CHECK(valuation_ring_intersection(B, subset(B, "0,1")) == B.full_subset());
  auto Bool = corpus("bool");
  CHECK(quasiintegral_closure(Bool, Bool.full_subset()) == Bool.full_subset());

  GammaContraction o(Zmax, kIntegers);
  CHECK(quasiintegral_closure(o, 6) == kIntegers);
  GammaContraction all(Zmax, DownSet::all(Z));
  CHECK(quasiintegral_closure(all, 6) == DownSet::all(Z));
  // The closure {x <= 1} has only 1 as a unit.
  for (auto const& x : Zmax.window(6)) {
    bool unit = kIntegers.contains(x) && !x.is_zero()
                && kIntegers.contains(Zmax.inverse(x));
    CHECK(unit == x.is_one());
  }
}

TEST_CASE("extensibility") {
  auto B = corpus("b_z2");
  CHECK(is_extensible(B, subset(B, "0,1")));
  CHECK(is_extensible(GammaContraction(Zmax, kIntegers), 6));
  CHECK(is_extensible(GammaContraction(Zmax, DownSet::all(Z)), 6));
}

TEST_CASE("valuation criterion for quasiintegrality") {
  for (auto const& A : whole_corpus()) {
    if (!is_simple(A)) {
      CHECK_THROWS_AS(check_quasiintegral_valuation_criterion(A, A.full_subset()),
                      std::domain_error);
      continue;
    }
    for (auto const& R : subsemirings_of(A)) {
      auto v = check_quasiintegral_valuation_criterion(A, R);
      CHECK_MESSAGE(v.holds, A.name() << ": " << v.counterexample);
    }
  }
}

TEST_CASE("contraction lemma battery") {
  auto checks = check_contraction_lemmas(6);
  std::vector<std::string> names;
  for (auto const& c : checks) {
    CHECK_MESSAGE(c.verdict.holds,
                  c.name << " on " << c.instance << ": " << c.verdict.counterexample);
    if (std::find(names.begin(), names.end(), c.name) == names.end()) {
      names.push_back(c.name);
    }
  }
  CHECK(names == std::vector<std::string>{"contraction_isomorphism",
                                          "inclusion_injective",
                                          "extensible_contraction",
                                          "integers_contraction"});
}

TEST_CASE("finite saturated submodules are down-sets of classes") {
  // Over a simple A, the finite saturated submodules of A are exactly the
  // sets {b : b̄ <= ā}.
  for (auto const& A : whole_corpus()) {
    if (!is_simple(A)) {
      continue;
    }
    for (auto const& R : subsemirings_of(A)) {
      auto c = contract(A, R);
      std::vector<Subset> downs;
      for (Element a = 0; a < A.size(); ++a) {
        downs.push_back(contraction_down_set(A, c, a));
      }
      for (auto const& M : saturated_submodules(A, R, A.full_subset())) {
        if (!is_finite_module(A, R, M)) {
          continue;
        }
        CHECK(std::find(downs.begin(), downs.end(), M) != downs.end());
      }
      for (auto const& D : downs) {
        CHECK(is_submodule(A, R, D));
        CHECK(is_finite_module(A, R, D));
      }
    }
  }
}

TEST_CASE("maps contracting the scalars factor through the classes") {
  // Every additive ψ: A -> T with ψ(0) = 0 and ψ(rx) <= ψ(x) for scalars r
  // is constant on contraction classes and monotone for their order.
  std::vector<FiniteSemiring> targets{corpus("bool"), corpus("c3")};
  std::size_t                 maps = 0;
  for (auto const& A : whole_corpus()) {
    for (auto const& R : subsemirings_of(A)) {
      auto c = contract(A, R);
      for (auto const& T : targets) {
        std::size_t total = 1;
        for (std::size_t i = 0; i < A.size(); ++i) {
          total *= T.size();
        }
        for (std::size_t code = 0; code < total; ++code) {
          std::vector<Element> psi(A.size());
          for (std::size_t i = 0, k = code; i < A.size(); ++i, k /= T.size()) {
            psi[i] = k % T.size();
          }
          bool ok = psi[A.zero()] == T.zero();
          for (Element x = 0; x < A.size() && ok; ++x) {
            for (Element y = 0; y < A.size() && ok; ++y) {
              ok = psi[A.add(x, y)] == T.add(psi[x], psi[y]);
              ok = ok && (!R[y] || T.leq(psi[A.mul(y, x)], psi[x]));
            }
          }
          if (!ok) {
            continue;
          }
          ++maps;
          for (Element x = 0; x < A.size(); ++x) {
            for (Element y = 0; y < A.size(); ++y) {
              if (c.class_of[x] == c.class_of[y]) {
                CHECK(psi[x] == psi[y]);
              }
              if (contraction_leq(A, c, x, y)) {
                CHECK(T.leq(psi[x], psi[y]));
              }
            }
          }
        }
      }
    }
  }
  CHECK(maps > 20);
}

TEST_CASE("integral elements are quasiintegral on every corpus table") {
  for (auto const& A : whole_corpus()) {
    for (auto const& R : subsemirings_of(A)) {
      for (Element x = 0; x < A.size(); ++x) {
        if (is_integral(A, R, x)) {
          CAPTURE(A.name());
          CAPTURE(A.element_name(x));
          CHECK(quasiintegral_module(A, R, x).has_value());
        }
      }
    }
  }
}

TEST_CASE("the down-set of a witness class is an R<x>-module") {
  for (auto const& A : whole_corpus()) {
    if (!is_simple(A)) {
      continue;
    }
    for (auto const& R : subsemirings_of(A)) {
      auto c = contract(A, R);
      for (Element x = 0; x < A.size(); ++x) {
        auto s = is_quasiintegral(A, R, x);
        if (!s) {
          continue;
        }
        Subset M  = contraction_down_set(A, c, *s);
        Subset Rx = r_angle_x(A, R, x);
        for (Element m = 0; m < A.size(); ++m) {
          if (!M[m]) {
            continue;
          }
          CHECK(M[A.mul(x, m)]);
          for (Element z = 0; z < A.size(); ++z) {
            if (Rx[z]) {
              CHECK(M[A.mul(z, m)]);
            }
          }
        }
        for (Element z = 0; z < A.size(); ++z) {
          if (Rx[z]) {
            CHECK(M[A.mul(z, *s)]);
            if (M[A.one()]) {
              CHECK(M[z]);
            }
          }
        }
      }
    }
  }
}
