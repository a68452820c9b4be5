#include "charone/idem_core.hpp"

#include <algorithm>

namespace charone {

  std::string format_valuation(FiniteSemiring const& R, TableValuation const& v) {
    std::string out;
    for (Element x = 0; x < R.size(); ++x) {
      out += (x == 0 ? "" : ", ") + R.element_name(x) + " -> "
             + to_string(v.values.at(x));
    }
    return out;
  }

  Verdict is_valuation(FiniteSemiring const& R, TableValuation const& v) {
    if (v.values.size() != R.size()) {
      throw std::invalid_argument("map not total");
    }
    for (auto const& value : v.values) {
      if (!(value.group() == v.target)) {
        throw GroupError("group mismatch: " + value.group().name() + " vs "
                         + v.target.name());
      }
    }
    auto carrier = R.elements();
    return is_valuation_on(
        R, std::span<Element const>(carrier), v,
        [&](Element x) { return R.element_name(x); });
  }

  bool is_saturated(FiniteSemiring const& R, Subset const& N) {
    return is_saturated(R, N, R.full_subset());
  }

  bool is_saturated(FiniteSemiring const& R,
                    Subset const&         N,
                    Subset const&         within) {
    for (Element x = 0; x < R.size(); ++x) {
      if (N[x] && !within[x]) {
        return false;
      }
    }
    std::vector<Element> window;
    for (Element x = 0; x < R.size(); ++x) {
      if (within[x]) {
        window.push_back(x);
      }
    }
    return is_saturated_on(R, std::span<Element const>(window),
                           [&](Element x) { return bool(N[x]); });
  }

  Subset saturated_closure(FiniteSemiring const& R, Subset const& seed) {
    return saturated_closure(R, seed, R.full_subset());
  }

  Subset saturated_closure(FiniteSemiring const& R,
                           Subset const&         seed,
                           Subset const&         within) {
    Subset out = seed;
    bool   changed = true;
    while (changed) {
      changed = false;
      for (Element x = 0; x < R.size(); ++x) {
        if (!out[x]) {
          continue;
        }
        for (Element y = 0; y < R.size(); ++y) {
          if (!within[y]) {
            continue;
          }
          if (!out[y] && R.leq(y, x)) {
            out[y]  = true;
            changed = true;
          }
          Element s = R.add(x, y);
          if (out[y] && !out[s]) {
            out[s]  = true;
            changed = true;
          }
        }
      }
    }
    return out;
  }

  bool is_simple(FiniteSemiring const& R) {
    for (Element x = 0; x < R.size(); ++x) {
      if (x == R.zero()) {
        continue;
      }
      bool found = false;
      for (Element y = 0; y < R.size() && !found; ++y) {
        found = R.leq(R.one(), R.mul(x, y));
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool has_zero_divisors(FiniteSemiring const& R) {
    for (Element x = 0; x < R.size(); ++x) {
      for (Element y = 0; y < R.size(); ++y) {
        if (x != R.zero() && y != R.zero() && R.mul(x, y) == R.zero()) {
          return true;
        }
      }
    }
    return false;
  }

  std::optional<Element> inverse_of(FiniteSemiring const& R, Element x) {
    for (Element y = 0; y < R.size(); ++y) {
      if (R.mul(x, y) == R.one()) {
        return y;
      }
    }
    return std::nullopt;
  }

  std::vector<Element> units(FiniteSemiring const& R) {
    std::vector<Element> out;
    for (Element x = 0; x < R.size(); ++x) {
      if (inverse_of(R, x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool is_unitgenerated(FiniteSemiring const& R) {
    auto us = units(R);
    for (Element x = 0; x < R.size(); ++x) {
      Element sum = R.zero();
      for (auto u : us) {
        if (R.leq(u, x)) {
          sum = R.add(sum, u);
        }
      }
      if (sum != x) {
        return false;
      }
    }
    return true;
  }

  bool is_submodule(FiniteSemiring const& A,
                    Subset const&         scalars,
                    Subset const&         members) {
    if (!members[A.zero()]) {
      return false;
    }
    for (Element x = 0; x < A.size(); ++x) {
      if (!members[x]) {
        continue;
      }
      for (Element y = 0; y < A.size(); ++y) {
        if (members[y] && !members[A.add(x, y)]) {
          return false;
        }
        if (scalars[y] && !members[A.mul(y, x)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::optional<Element> finite_module_generator(FiniteSemiring const& A,
                                                 Subset const&         scalars,
                                                 Subset const&         members) {
    for (Element x = 0; x < A.size(); ++x) {
      if (!members[x]) {
        continue;
      }
      bool bounds_all = true;
      for (Element y = 0; y < A.size() && bounds_all; ++y) {
        if (!members[y]) {
          continue;
        }
        bool found = false;
        for (Element r = 0; r < A.size() && !found; ++r) {
          found = scalars[r] && A.leq(y, A.mul(r, x));
        }
        bounds_all = found;
      }
      if (bounds_all) {
        return x;
      }
    }
    return std::nullopt;
  }

  bool is_finite_module(FiniteSemiring const& A,
                        Subset const&         scalars,
                        Subset const&         members) {
    if (std::none_of(members.begin(), members.end(), [](bool b) { return b; })) {
      return true;
    }
    return finite_module_generator(A, scalars, members).has_value();
  }

  std::vector<Subset> saturated_submodules(FiniteSemiring const& A,
                                           Subset const&         scalars,
                                           Subset const&         members) {
    std::vector<Element> carrier;
    for (Element x = 0; x < A.size(); ++x) {
      if (members[x]) {
        carrier.push_back(x);
      }
    }
    if (carrier.size() > kSubmoduleGuard) {
      throw std::length_error("submodule enumeration is limited to "
                              + std::to_string(kSubmoduleGuard) + " elements");
    }
    std::vector<Subset> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << carrier.size());
         ++mask) {
      Subset N = A.empty_subset();
      for (std::size_t i = 0; i < carrier.size(); ++i) {
        N[carrier[i]] = (mask >> i) & 1U;
      }
      if (is_submodule(A, scalars, N) && is_saturated(A, N, members)) {
        out.push_back(std::move(N));
      }
    }
    return out;
  }

  bool is_noetherian(FiniteSemiring const& A,
                     Subset const&         scalars,
                     Subset const&         members) {
    auto subs = saturated_submodules(A, scalars, members);
    return std::all_of(subs.begin(), subs.end(), [&](Subset const& N) {
      return is_finite_module(A, scalars, N);
    });
  }

}  // namespace charone
