#pragma once

#include <optional>
#include <string>
#include <vector>

namespace skeinlab {

/// One bundled-census row. `expectedJones` pins a regression value in the
/// library's textual rendering; `unknot` marks knot entries whose
/// triviality-check outcome is known.
struct CensusEntry {
  std::string name;
  std::string notation;
  std::optional<std::string> expectedJones;
  std::optional<bool> unknot;
};

/// Reads a JSON array of {name, notation, jones?, unknot?} objects. Throws
/// IoError when the file cannot be read and ParseError (naming the entry
/// index) on malformed rows or notation that does not parse.
std::vector<CensusEntry> loadTable(const std::string& path);

}  // namespace skeinlab
