#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "arcop/rational.hpp"

namespace arcop {

// Oriented surface signature F_{g,r}^s with labeled boundaries 0..r-1.
struct SurfaceSig {
  int genus = 0;
  int punctures = 0;
  int boundaries = 1;

  bool admissible() const {
    return boundaries >= 1 && genus >= 0 && punctures >= 0 &&
           6 * genus - 7 + 4 * boundaries + 2 * punctures >= 0;
  }
  auto operator<=>(const SurfaceSig&) const = default;
};

// One arc endpoint: slot k (1-based) in the window order of a boundary.
struct EndpointRef {
  int boundary = 0;
  int slot = 1;
  auto operator<=>(const EndpointRef&) const = default;
};

// A side token of a complementary region cycle.
//   ArcSide: arc `arc` traversed away from endpoint `from_end` (0 or 1).
//   BoundarySegment: gap `gap` of boundary `boundary`; gap k lies between
//   slot k and slot k+1, gap 0 holds the window complement.
struct Side {
  enum Kind { ArcSide, BoundarySegment } kind = ArcSide;
  int arc = -1;
  int from_end = 0;
  int boundary = -1;
  int gap = 0;

  static Side arc_side(int arc, int from_end) {
    Side s;
    s.kind = ArcSide;
    s.arc = arc;
    s.from_end = from_end;
    return s;
  }
  static Side boundary_segment(int boundary, int gap) {
    Side s;
    s.kind = BoundarySegment;
    s.boundary = boundary;
    s.gap = gap;
    return s;
  }
  auto operator<=>(const Side&) const = default;
};

// Complementary region: cycles of sides plus the topological type data
// that the cycles alone do not determine.
struct Region {
  int genus = 0;
  int punctures = 0;
  std::vector<std::vector<Side>> cycles;
};

struct Arc {
  EndpointRef end[2];
};

// Combinatorial model of an arc family: window orders, matching, regions.
struct ArcCombinatorics {
  SurfaceSig sig;
  std::vector<int> endpoint_counts;  // per boundary
  std::vector<Arc> arcs;
  std::vector<Region> regions;
};

struct WeightedArcFamily {
  ArcCombinatorics comb;
  std::vector<Rat> weights;  // one positive rational per arc
};

// A weighted family whose weights sum to 1.
struct ProjectiveArcFamily {
  WeightedArcFamily fam;
};

}  // namespace arcop
