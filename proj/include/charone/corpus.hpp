// Semiring tables shipped with the library.

#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "charone/finite_semiring.hpp"

namespace charone {

  struct CorpusEntry {
    std::string_view file;
    std::string_view text;
  };

  std::vector<CorpusEntry> const& bundled_corpus();

  // Looks up "b_z2.sr" (or "b_z2") among the bundled tables.
  std::optional<std::string_view> bundled_table(std::string_view name);

  // A file on disk if it exists, otherwise a bundled table of that basename.
  // Throws ParseError when neither is found.
  FiniteSemiring load_semiring_or_bundled(std::string const& path);

}  // namespace charone
