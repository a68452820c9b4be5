#pragma once

#include <string>
#include <vector>

#include "charone/corpus.hpp"
#include "charone/finite_semiring.hpp"

namespace charone::test {

  inline FiniteSemiring corpus(std::string const& name) {
    auto text = bundled_table(name);
    if (!text) {
      throw std::runtime_error("no bundled table " + name);
    }
    return FiniteSemiring(parse_semiring(*text));
  }

  inline std::vector<FiniteSemiring> whole_corpus() {
    std::vector<FiniteSemiring> out;
    for (auto const& e : bundled_corpus()) {
      out.emplace_back(parse_semiring(e.text));
    }
    return out;
  }

  inline Subset subset(FiniteSemiring const& R, std::string const& list) {
    return parse_subset(R, list);
  }

  // Every partition of {0, ..., n-1} as restricted growth strings.
  inline std::vector<std::vector<std::size_t>> set_partitions(std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t>              a(n, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t max) -> void {
      if (i == n) {
        out.push_back(a);
        return;
      }
      for (std::size_t v = 0; v <= max + 1; ++v) {
        a[i] = v;
        self(self, i + 1, std::max(max, v));
      }
    };
    if (n == 0) {
      return {{}};
    }
    a[0] = 0;
    rec(rec, 1, 0);
    return out;
  }

}  // namespace charone::test
