#pragma once

#include <string>
#include <utility>

namespace charone {

  // Outcome of an exhaustive check.  The counterexample names elements, never
  // indices.
  struct Verdict {
    bool        holds = true;
    std::string counterexample;

    static Verdict pass() {
      return {};
    }

    static Verdict fail(std::string why) {
      return {false, std::move(why)};
    }

    explicit operator bool() const noexcept {
      return holds;
    }
  };

}  // namespace charone
