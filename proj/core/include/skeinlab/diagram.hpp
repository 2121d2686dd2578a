#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace skeinlab {

/// One PD crossing: the four incident arc labels listed counterclockwise
/// starting from the incoming under-strand. The over-strand occupies
/// positions 1 and 3; overIn records where it enters. Sign is +1 exactly
/// when the over-strand enters at position 3.
struct PDCrossing {
  std::array<int, 4> arcs{};
  int overIn = 3;  // 1 or 3

  int sign() const { return overIn == 3 ? +1 : -1; }
  int overOut() const { return overIn ^ 2; }
  bool operator==(const PDCrossing&) const = default;
};

enum class SmoothMode { Oriented, Disoriented };

struct DiagramStats {
  long c = 0;
  long cPlus = 0;
  long cMinus = 0;
  long writhe = 0;
  long g = 0;               // connected pieces of the projection, free loops included
  long linkComponents = 0;  // circles of the link, free loops included
  long seifertCircles = 0;
};

struct SimplifyResult;

/// Immutable combinatorial link diagram: PD crossings plus crossingless
/// free loops. All operations return new values.
class Diagram {
 public:
  Diagram() = default;

  /// Validates arc counts and solves strand orientations.
  /// `underAnchored = true` keeps position 0 of every tuple as the incoming
  /// under-strand exactly as written (the PD text convention); otherwise
  /// tuples may be rotated by two and overIn reassigned to reach a
  /// consistent trace (used after disoriented smoothings and by generators).
  static Diagram make(std::vector<PDCrossing> crossings, long freeLoops, bool underAnchored);

  const std::vector<PDCrossing>& crossings() const { return crossings_; }
  long freeLoops() const { return freeLoops_; }
  long crossingCount() const { return static_cast<long>(crossings_.size()); }
  bool empty() const { return crossings_.empty() && freeLoops_ == 0; }

  DiagramStats stats() const;

  /// Circle count of the state that smooths positive crossings parallel-wise
  /// and negative crossings transversely.
  long murasugiStateComponents() const;

  Diagram switchCrossing(std::size_t i) const;
  Diagram smoothCrossing(std::size_t i, SmoothMode mode) const;
  Diagram mirrored() const;

  /// Adds one R1 curl of the given sign (+1/-1) on the lowest-labeled arc,
  /// or converts a free loop into a one-crossing curl when crossingless.
  Diagram withKink(int sign) const;

  /// Removes R1/R2 moves until none is available (faces of the projection
  /// are recomputed each pass). Split pieces are never merged. The removed
  /// kink signs are always collected; ambient-isotropy callers ignore them.
  SimplifyResult simplify() const;

  /// Key equal for diagrams related by arc relabeling and crossing
  /// reordering; distinct signs or structure give distinct keys.
  std::string canonicalKey() const;

  /// First crossing met on its under-strand in the base-point traversal
  /// (components ordered by lowest arc label, each walked from its lowest
  /// arc). nullopt means the diagram is descending.
  std::optional<std::size_t> firstNonDescending() const;

  /// Sum of signs over crossings whose both passes belong to one link
  /// component.
  long selfWritheSum() const;

  /// Link-component index for every crossing's under and over pass:
  /// pairs (componentOfUnder, componentOfOver) indexed by crossing.
  std::vector<std::pair<int, int>> passComponents() const;

  /// True when crossings alternate over/under along every component.
  bool isAlternating() const;

  bool operator==(const Diagram&) const = default;

 private:
  std::vector<PDCrossing> crossings_;
  long freeLoops_ = 0;
};

struct SimplifyResult {
  Diagram diagram;
  long kinkPlus = 0;
  long kinkMinus = 0;
  long kinkSum() const { return kinkPlus - kinkMinus; }
  long kinkCount() const { return kinkPlus + kinkMinus; }
};

}  // namespace skeinlab
