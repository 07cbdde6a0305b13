#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcop/surface.hpp"

namespace arcop {

// Deterministic region-boundary traversal. From an ArcSide the walk exits at
// the far endpoint; at boundary 0 it then advances forward in window order,
// at boundaries >= 1 backward (the planar drawing convention with boundary 0
// outermost and every circle parameterized counterclockwise). Boundaries with
// no endpoints contribute a single [gap 0] cycle.
std::vector<std::vector<Side>> derive_regions(const std::vector<int>& endpoint_counts,
                                              const std::vector<Arc>& arcs);

struct Violation {
  std::string rule;     // e.g. "parallel arcs"
  std::string witness;  // human-readable locator
};

// Checks every structural invariant; empty result means valid.
std::vector<Violation> validate_family(const WeightedArcFamily& f);
bool is_valid(const WeightedArcFamily& f);

// Sum of weights of arcs incident on boundary i, both-end arcs counted twice.
Rat total_weight(const WeightedArcFamily& f, int i);

struct EndCell {
  int arc = -1;
  int end = 0;  // which end of the arc sits here
  Rat width;
};

// Band footprints at boundary i in window order; empty iff the boundary is unmet.
std::vector<EndCell> end_interval(const WeightedArcFamily& f, int i);

bool is_exhaustive(const ArcCombinatorics& c);

// Boundary relabeling: new label of old boundary b is sigma[b]. A boundary
// moving into or out of label 0 has its slot order reversed (the window
// encoding of label 0 runs with the induced orientation, the others against
// it). Regions are transported; throws on invalid input.
WeightedArcFamily relabel(const WeightedArcFamily& f, const std::vector<int>& sigma);

// Canonical encoding: arcs renumbered by least EndpointRef, region cycles
// rotated/sorted, weights in arc order. Structural equality is byte equality.
std::string canonical_form(const WeightedArcFamily& f);
bool equals(const WeightedArcFamily& a, const WeightedArcFamily& b);

ProjectiveArcFamily projectivize(const WeightedArcFamily& f);
bool equals_projective(const WeightedArcFamily& a, const WeightedArcFamily& b);

struct IncidenceSpec {
  // allowed[i][j] != 0 permits arcs between boundaries i and j;
  // required[k] != 0 demands boundary k be met.
  std::vector<std::vector<int>> allowed;
  std::vector<int> required;
};

enum class Predicate {
  Exhaustive,
  Trees,
  LinearTrees,
  ChineseTrees,
  CyclicChineseTrees,
};

bool membership(const WeightedArcFamily& f, Predicate p);
bool membership_incidence(const WeightedArcFamily& f, const IncidenceSpec& spec);

// The one-arc cylinder family with the given weight (the operad unit at w=1).
WeightedArcFamily unit_cylinder(const Rat& weight = Rat(1));

// The crossed two-arc cylinder family with weights (s, 1-s) scaled by `scale`;
// requires 0 < s < 1.
WeightedArcFamily delta_family(const Rat& s, const Rat& scale = Rat(1));

// The two-arc family on F_{0,3}: arcs 0-1 and 0-2, weights (1,1).
WeightedArcFamily dot_family();

}  // namespace arcop
