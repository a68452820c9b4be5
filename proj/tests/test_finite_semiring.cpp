#include <algorithm>
#include <set>

#include "doctest.h"

#include "charone/finite_semiring.hpp"
#include "charone/idem_core.hpp"
#include "support.hpp"

using namespace charone;
using charone::test::corpus;
using charone::test::whole_corpus;

namespace {
  // Independent compatibility test straight from the definition.
  bool compatible_labels(FiniteSemiring const&           R,
                         std::vector<std::size_t> const& l) {
    std::size_t n = R.size();
    for (Element x = 0; x < n; ++x) {
      for (Element xx = 0; xx < n; ++xx) {
        if (l[x] != l[xx]) {
          continue;
        }
        for (Element y = 0; y < n; ++y) {
          for (Element yy = 0; yy < n; ++yy) {
            if (l[y] != l[yy]) {
              continue;
            }
            if (l[R.add(x, y)] != l[R.add(xx, yy)]
                || l[R.mul(x, y)] != l[R.mul(xx, yy)]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  std::set<std::vector<std::size_t>> labels_of(std::vector<Congruence> const& cs) {
    std::set<std::vector<std::size_t>> out;
    for (auto const& c : cs) {
      out.insert(c.labels());
    }
    return out;
  }

  Congruence partition(FiniteSemiring const& R, std::string const& spec) {
    // "0,a|1" lists classes separated by '|'.
    std::vector<std::size_t> labels(R.size(), 0);
    std::size_t              cls = 0;
    std::size_t              start = 0;
    while (true) {
      auto bar = spec.find('|', start);
      auto members
          = parse_subset(R, spec.substr(start, bar == std::string::npos
                                                   ? std::string::npos
                                                   : bar - start));
      for (Element x = 0; x < R.size(); ++x) {
        if (members[x]) {
          labels[x] = cls;
        }
      }
      ++cls;
      if (bar == std::string::npos) {
        break;
      }
      start = bar + 1;
    }
    return Congruence(labels);
  }
}  // namespace

TEST_CASE("validate accepts the corpus") {
  for (auto const& e : bundled_corpus()) {
    CHECK(validate(parse_semiring(e.text)).empty());
  }
  CHECK(corpus("bool").size() == 2);
  CHECK(corpus("c3").size() == 3);
  CHECK(corpus("b_z2").size() == 4);
  CHECK(corpus("chain4").size() == 4);
}

TEST_CASE("validate names the failing distributivity triple") {
  SemiringTable t = corpus("c3").table();
  t.mul[1][1]     = 2;  // a*a = 1
  auto v          = validate(t);
  REQUIRE(v.size() == 1);
  CHECK(v[0].axiom == "distributivity");
  CHECK(v[0].witness == std::vector<std::string>{"a", "a", "1"});
  CHECK_THROWS_AS(FiniteSemiring{t}, InvalidSemiring);
}

TEST_CASE("validate reports one violation per axiom") {
  SemiringTable t = corpus("bool").table();
  t.add[0][1]     = 0;  // breaks commutativity and the additive identity
  auto v          = validate(t);
  std::set<std::string> axioms;
  for (auto const& x : v) {
    CHECK(axioms.insert(x.axiom).second);
  }
  CHECK(axioms.count("additive commutativity") == 1);
}

TEST_CASE("parse errors carry line numbers") {
  CHECK_THROWS_WITH_AS(parse_semiring("semiring X\nelements: 0 1\nzero: 2\n"),
                       "line 3: unknown element '2'",
                       ParseError);
  CHECK_THROWS_AS(parse_semiring("semiring X\n"), ParseError);
  auto B = corpus("bool");
  CHECK(format_semiring(parse_semiring(format_semiring(B.table())))
        == format_semiring(B.table()));
}

TEST_CASE("congruences agree with a brute-force partition filter") {
  for (auto const& R : whole_corpus()) {
    std::set<std::vector<std::size_t>> expected;
    for (auto const& l : test::set_partitions(R.size())) {
      if (compatible_labels(R, l)) {
        expected.insert(Congruence(l).labels());
      }
    }
    auto found = congruences(R);
    CHECK(labels_of(found) == expected);
    CHECK(found.front() == Congruence::equality(R.size()));
    CHECK(found.back() == Congruence::total(R.size()));
    for (auto const& c : found) {
      CHECK(is_compatible(c, R));
    }
  }
}

TEST_CASE("congruence examples") {
  auto B = corpus("bool");
  CHECK(congruences(B).size() == 2);
  auto C3     = corpus("c3");
  auto labels = labels_of(congruences(C3));
  CHECK(labels.count(partition(C3, "0,a|1").labels()) == 1);
  CHECK(labels.count(partition(C3, "0|a,1").labels()) == 1);
  auto BZ2 = corpus("b_z2");
  CHECK(labels_of(congruences(BZ2)).count(partition(BZ2, "0|1,g,1+g").labels())
        == 1);
}

TEST_CASE("congruence enumeration guard") {
  SemiringTable t;
  t.name = "chain7";
  for (int i = 0; i < 7; ++i) {
    t.elements.push_back("c" + std::to_string(i));
  }
  t.zero = 0;
  t.one  = 6;
  t.add.assign(7, std::vector<Element>(7));
  t.mul = t.add;
  for (Element x = 0; x < 7; ++x) {
    for (Element y = 0; y < 7; ++y) {
      t.add[x][y] = std::max(x, y);
      t.mul[x][y] = std::min(x, y);
    }
  }
  FiniteSemiring R(t);
  CHECK_THROWS_AS(congruences(R), std::length_error);
}

TEST_CASE("prime congruences") {
  auto B  = corpus("bool");
  auto C3 = corpus("c3");
  CHECK(is_prime(Congruence::equality(2), B));
  CHECK_FALSE(is_prime(Congruence::equality(3), C3));
  CHECK(is_prime(partition(C3, "0,a|1"), C3));
  CHECK(is_domain(B));
  CHECK_FALSE(is_cancellative(C3));
  CHECK_FALSE(is_totally_ordered(corpus("b_z2")));
  CHECK(is_totally_ordered(C3));
}

TEST_CASE("QC congruences are radical") {
  for (auto const& R : whole_corpus()) {
    for (auto const& c : congruences(R)) {
      if (is_qc(c, R)) {
        CHECK_MESSAGE(radical_test(c, R),
                      R.name() << " " << format_congruence(R, c));
      }
    }
  }
}

TEST_CASE("domain iff totally ordered and cancellative on small tables") {
  std::size_t checked = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto const& R : all_semirings(n)) {
      CHECK(is_domain(R) == (is_totally_ordered(R) && is_cancellative(R)));
      ++checked;
    }
  }
  CHECK(checked > 0);
  // The one-element semiring is totally ordered and cancellative, but 0 ~ 1.
  auto trivial = all_semirings(1);
  REQUIRE(trivial.size() == 1);
  CHECK(is_totally_ordered(trivial[0]));
  CHECK(is_cancellative(trivial[0]));
  CHECK_FALSE(is_domain(trivial[0]));
}

TEST_CASE("all_semirings on three elements") {
  // With zero = 0 and one = 1 fixed, 1 + a and a * a are the only free
  // entries.  1 + a = 0 breaks associativity.  For a < 1, a*a = 1 breaks
  // a(a + 1) = a*a + a; for 1 < a only a*a = a survives.  That leaves
  // (1, 0), (1, a) and (a, a).
  auto all = all_semirings(3);
  std::set<std::pair<Element, Element>> shapes;
  for (auto const& R : all) {
    shapes.emplace(R.add(1, 2), R.mul(2, 2));
  }
  CHECK(shapes.size() == all.size());
  CHECK(all.size() == 3);
}

TEST_CASE("reduction") {
  auto B   = corpus("bool");
  auto BZ2 = corpus("b_z2");
  auto C3  = corpus("c3");
  CHECK(is_isomorphic(reduction(B).quotient.semiring, B));
  auto red = reduction(BZ2);
  CHECK(is_isomorphic(red.quotient.semiring, B));
  CHECK(red.kernel == partition(BZ2, "0|1,g,1+g"));
  CHECK_FALSE(red.degenerate);
  CHECK(reduction(C3).kernel == Congruence::equality(3));
  CHECK(is_reduced(C3));
  CHECK_FALSE(is_cancellative(C3));
  CHECK_FALSE(is_simple(C3));
  auto trivial = all_semirings(1).front();
  CHECK(reduction(trivial).degenerate);
}

TEST_CASE("reduction by cancellation") {
  CHECK(check_reduction_by_cancellation(corpus("bool")));
  CHECK(check_reduction_by_cancellation(corpus("b_z2")));
  CHECK_THROWS_WITH_AS(check_reduction_by_cancellation(corpus("c3")),
                       doctest::Contains("requires a simple semiring"),
                       std::domain_error);
  std::size_t simple = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto const& R : all_semirings(n)) {
      if (is_simple(R)) {
        CHECK(check_reduction_by_cancellation(R));
        ++simple;
      }
    }
  }
  CHECK(simple > 3);
}

TEST_CASE("bounded by one") {
  auto BZ2 = corpus("b_z2");
  CHECK(check_bounded_by_one(corpus("bool")));
  CHECK(check_bounded_by_one(BZ2));
  for (std::size_t n = 2; n <= 4; ++n) {
    for (auto const& R : all_semirings(n)) {
      if (is_simple(R)) {
        CHECK(check_bounded_by_one(R));
      }
    }
  }
}

TEST_CASE("localization at nonzero elements") {
  auto B   = corpus("bool");
  auto BZ2 = corpus("b_z2");
  CHECK(is_isomorphic(localize_at_nonzero(B).semiring, B));
  auto loc = localize_at_nonzero(BZ2);
  CHECK(is_isomorphic(loc.semiring, B));
  CHECK(loc.map[BZ2.find("1")] == loc.map[BZ2.find("g")]);
  CHECK(loc.map[BZ2.find("1")] == loc.map[BZ2.find("1+g")]);
  CHECK_THROWS_AS(localize_at_nonzero(corpus("c3")), std::domain_error);
}

TEST_CASE("quotients") {
  auto B   = corpus("bool");
  auto C3  = corpus("c3");
  auto BZ2 = corpus("b_z2");
  CHECK(is_isomorphic(quotient(C3, partition(C3, "0,a|1")).semiring, B));
  CHECK(is_isomorphic(quotient(BZ2, partition(BZ2, "0|1,g,1+g")).semiring, B));
  for (auto const& R : whole_corpus()) {
    CHECK(is_isomorphic(quotient(R, Congruence::equality(R.size())).semiring, R));
  }
  CHECK_THROWS_AS(quotient(C3, partition(C3, "0,1|a")), std::invalid_argument);
}

TEST_CASE("pullback of a prime congruence is prime") {
  for (auto const& R : whole_corpus()) {
    for (auto const& c : congruences(R)) {
      auto q = quotient(R, c);
      for (auto const& p : prime_congruences(q.semiring)) {
        std::vector<std::size_t> labels;
        for (Element x = 0; x < R.size(); ++x) {
          labels.push_back(p.class_of(q.map[x]));
        }
        CHECK(is_prime(Congruence(labels), R));
      }
    }
  }
}

TEST_CASE("simple quotient is reduced iff cancellative") {
  for (auto const& R : whole_corpus()) {
    for (auto const& c : congruences(R)) {
      auto q = quotient(R, c).semiring;
      if (is_simple(q)) {
        CHECK(is_reduced(q) == is_cancellative(q));
      }
    }
  }
}

TEST_CASE("maps to reduced semirings factor uniquely through the reduction") {
  std::vector<FiniteSemiring> reduced;
  for (auto const& S : whole_corpus()) {
    if (is_reduced(S)) {
      reduced.push_back(S);
    }
  }
  REQUIRE(reduced.size() >= 2);
  for (auto const& R : whole_corpus()) {
    auto red = reduction(R);
    for (auto const& S : reduced) {
      for (auto const& f : homomorphisms(R, S)) {
        std::set<Element> image(f.begin(), f.end());
        if (image.size() != S.size()) {
          continue;
        }
        std::size_t factors = 0;
        for (auto const& g : homomorphisms(red.quotient.semiring, S)) {
          bool same = true;
          for (Element x = 0; x < R.size(); ++x) {
            same = same && g[red.quotient.map[x]] == f[x];
          }
          factors += same;
        }
        CHECK(factors == 1);
      }
    }
  }
}
