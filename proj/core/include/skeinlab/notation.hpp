#pragma once

#include <string>
#include <vector>

#include "skeinlab/diagram.hpp"

namespace skeinlab {

/// Braid word on `strandCount` strands; letters are signed generator
/// indices i with 1 <= |i| <= strandCount - 1, sign = crossing sign.
struct BraidWord {
  int strandCount = 0;
  std::vector<int> letters;
};

/// Grammar (whitespace ignored):
///   diagram := term (";" term)*
///   term    := "X[" int "," int "," int "," int "]" | "O*" int
Diagram parsePd(const std::string& text);

/// Grammar: "braid:" int "|" int (" " int)* ; the diagram is the trace
/// closure of the braid.
Diagram parseBraid(const std::string& text);

BraidWord parseBraidWord(const std::string& text);

/// Dispatches on the "braid:" prefix.
Diagram parseNotation(const std::string& text);

/// Round trip: parsePd(serializeDiagram(d)) has the canonical key of d.
std::string serializeDiagram(const Diagram& d);

}  // namespace skeinlab
