#pragma once

#include <stdexcept>
#include <string>

namespace skeinlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// notation / diagram
struct MalformedToken : Error { using Error::Error; };
struct ArcCountError : Error { using Error::Error; };
struct OrientationError : Error { using Error::Error; };
struct GeneratorOutOfRange : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };

// polynomial ring
struct VariableMismatch : Error { using Error::Error; };
struct NotDivisible : Error { using Error::Error; };
struct ZeroPolynomial : Error { using Error::Error; };
struct NotLaurent : Error { using Error::Error; };

// engines / determination
struct DiagramTooLarge : Error { using Error::Error; };
struct SizeMismatch : Error { using Error::Error; };
struct NotAKnot : Error { using Error::Error; };

// harness
struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };

}  // namespace skeinlab
