#include "arcop/arc_core.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arcop {

namespace {

std::string side_str(const Side& s) {
  std::ostringstream os;
  if (s.kind == Side::ArcSide)
    os << "A(" << s.arc << "," << s.from_end << ")";
  else
    os << "B(" << s.boundary << "," << s.gap << ")";
  return os.str();
}

// (boundary, slot) -> (arc, end) lookup; returns false on duplicate/missing slots.
bool build_slot_map(const std::vector<int>& counts, const std::vector<Arc>& arcs,
                    std::map<std::pair<int, int>, std::pair<int, int>>& out) {
  out.clear();
  for (int a = 0; a < (int)arcs.size(); ++a) {
    for (int e = 0; e < 2; ++e) {
      const EndpointRef& r = arcs[a].end[e];
      if (r.boundary < 0 || r.boundary >= (int)counts.size()) return false;
      if (r.slot < 1 || r.slot > counts[r.boundary]) return false;
      if (!out.emplace(std::make_pair(r.boundary, r.slot), std::make_pair(a, e)).second)
        return false;
    }
  }
  int total = 0;
  for (int c : counts) total += c;
  return total == 2 * (int)arcs.size();
}

std::vector<Side> rotate_to_least(std::vector<Side> cycle) {
  if (cycle.empty()) return cycle;
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

std::vector<std::vector<Side>> normalize_cycles(std::vector<std::vector<Side>> cycles) {
  for (auto& c : cycles) c = rotate_to_least(std::move(c));
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace

std::vector<std::vector<Side>> derive_regions(const std::vector<int>& counts,
                                              const std::vector<Arc>& arcs) {
  std::map<std::pair<int, int>, std::pair<int, int>> slot_map;
  if (!build_slot_map(counts, arcs, slot_map)) throw std::invalid_argument("malformed matching");

  std::vector<std::vector<Side>> cycles;
  std::set<std::pair<int, int>> used;  // (arc, from_end)
  for (int a0 = 0; a0 < (int)arcs.size(); ++a0) {
    for (int e0 = 0; e0 < 2; ++e0) {
      if (used.count({a0, e0})) continue;
      std::vector<Side> cycle;
      int a = a0, e = e0;
      do {
        used.insert({a, e});
        cycle.push_back(Side::arc_side(a, e));
        EndpointRef far = arcs[a].end[1 - e];
        int b = far.boundary, k = far.slot, c = counts[b];
        int gap, next_slot;
        if (b == 0) {  // forward in window order
          gap = (k == c) ? 0 : k;
          next_slot = (k == c) ? 1 : k + 1;
        } else {  // backward
          gap = (k == 1) ? 0 : k - 1;
          next_slot = (k == 1) ? c : k - 1;
        }
        cycle.push_back(Side::boundary_segment(b, gap));
        auto [na, ne] = slot_map.at({b, next_slot});
        a = na;
        e = ne;
      } while (!(a == a0 && e == e0));
      cycles.push_back(std::move(cycle));
    }
  }
  for (int b = 0; b < (int)counts.size(); ++b)
    if (counts[b] == 0) cycles.push_back({Side::boundary_segment(b, 0)});
  return cycles;
}

Rat total_weight(const WeightedArcFamily& f, int i) {
  if (i < 0 || i >= f.comb.sig.boundaries) throw std::out_of_range("boundary index");
  Rat t = 0;
  for (int a = 0; a < (int)f.comb.arcs.size(); ++a)
    for (int e = 0; e < 2; ++e)
      if (f.comb.arcs[a].end[e].boundary == i) t += f.weights[a];
  return t;
}

std::vector<EndCell> end_interval(const WeightedArcFamily& f, int i) {
  std::vector<EndCell> cells(f.comb.endpoint_counts[i]);
  for (int a = 0; a < (int)f.comb.arcs.size(); ++a)
    for (int e = 0; e < 2; ++e) {
      const EndpointRef& r = f.comb.arcs[a].end[e];
      if (r.boundary == i) cells[r.slot - 1] = EndCell{a, e, f.weights[a]};
    }
  return cells;
}

bool is_exhaustive(const ArcCombinatorics& c) {
  for (int n : c.endpoint_counts)
    if (n == 0) return false;
  return true;
}

std::vector<Violation> validate_family(const WeightedArcFamily& f) {
  std::vector<Violation> v;
  const ArcCombinatorics& c = f.comb;
  if (!c.sig.admissible()) {
    v.push_back({"surface signature", "6g-7+4r+2s < 0 or r < 1"});
    return v;
  }
  if ((int)c.endpoint_counts.size() != c.sig.boundaries) {
    v.push_back({"endpoint counts", "size mismatch with boundary count"});
    return v;
  }
  std::map<std::pair<int, int>, std::pair<int, int>> slot_map;
  if (!build_slot_map(c.endpoint_counts, c.arcs, slot_map)) {
    v.push_back({"matching", "endpoints not a perfect matching of window slots"});
    return v;
  }
  if (f.weights.size() != c.arcs.size()) {
    v.push_back({"weights", "weight count != arc count"});
    return v;
  }
  for (int a = 0; a < (int)f.weights.size(); ++a)
    if (f.weights[a] <= 0) v.push_back({"positive weights", "arc " + std::to_string(a)});

  // Region cycles must be exactly the traversal-derived ones.
  std::vector<std::vector<Side>> declared;
  for (const auto& r : c.regions) {
    if (r.genus < 0 || r.punctures < 0)
      v.push_back({"region type", "negative genus or punctures"});
    for (const auto& cyc : r.cycles) declared.push_back(cyc);
  }
  auto derived = normalize_cycles(derive_regions(c.endpoint_counts, c.arcs));
  if (normalize_cycles(declared) != derived) {
    v.push_back({"region cycles", "cycles differ from derive_regions output"});
    return v;
  }

  // Euler identity and puncture budget.
  long chi_sum = 0;
  long punct_sum = 0;
  for (const auto& r : c.regions) {
    chi_sum += 2 - 2 * (long)r.genus - (long)r.cycles.size() - r.punctures;
    punct_sum += r.punctures;
  }
  long chi_surface = 2 - 2 * (long)c.sig.genus - c.sig.boundaries - c.sig.punctures;
  if (chi_sum != chi_surface + (long)c.arcs.size())
    v.push_back({"euler identity", "sum chi(R) != chi(F) + #arcs"});
  if (punct_sum != c.sig.punctures) v.push_back({"puncture count", "sum s_R != s"});

  // Which region holds each side.
  std::map<Side, int> region_of;
  for (int ri = 0; ri < (int)c.regions.size(); ++ri)
    for (const auto& cyc : c.regions[ri].cycles)
      for (const Side& s : cyc)
        if (!region_of.emplace(s, ri).second)
          v.push_back({"region cycles", "side appears twice: " + side_str(s)});

  // Connectivity: regions linked across each arc and along each boundary.
  if (!c.regions.empty()) {
    std::vector<int> parent(c.regions.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int a = 0; a < (int)c.arcs.size(); ++a) {
      auto l = region_of.find(Side::arc_side(a, 0));
      auto r = region_of.find(Side::arc_side(a, 1));
      if (l != region_of.end() && r != region_of.end()) unite(l->second, r->second);
    }
    for (int b = 0; b < c.sig.boundaries; ++b) {
      int gaps = std::max(1, c.endpoint_counts[b]);
      int prev = -1;
      for (int g = 0; g < gaps; ++g) {
        auto it = region_of.find(Side::boundary_segment(b, g));
        if (it == region_of.end()) continue;
        if (prev >= 0) unite(prev, it->second);
        prev = it->second;
      }
    }
    int root = find(0);
    for (int ri = 1; ri < (int)c.regions.size(); ++ri)
      if (find(ri) != root) {
        v.push_back({"connectivity", "region adjacency graph disconnected"});
        break;
      }
  }

  // Essential arcs: no disk region bounded by one arc side and one gap != 0.
  for (const auto& r : c.regions) {
    if (r.genus != 0 || r.punctures != 0 || r.cycles.size() != 1) continue;
    const auto& cyc = r.cycles[0];
    if (cyc.size() == 2) {
      const Side *as = nullptr, *bs = nullptr;
      for (const Side& s : cyc) (s.kind == Side::ArcSide ? as : bs) = &s;
      if (as && bs && bs->gap != 0)
        v.push_back({"inessential arc", "arc " + std::to_string(as->arc)});
    }
    if (cyc.size() == 4) {
      std::vector<const Side*> as, bs;
      for (const Side& s : cyc) (s.kind == Side::ArcSide ? as : bs).push_back(&s);
      if (as.size() == 2 && bs.size() == 2 && as[0]->arc != as[1]->arc && bs[0]->gap != 0 &&
          bs[1]->gap != 0)
        v.push_back({"parallel arcs", "arcs " + std::to_string(as[0]->arc) + "," +
                                          std::to_string(as[1]->arc)});
    }
  }
  return v;
}

bool is_valid(const WeightedArcFamily& f) { return validate_family(f).empty(); }

WeightedArcFamily relabel(const WeightedArcFamily& f, const std::vector<int>& sigma) {
  int r = f.comb.sig.boundaries;
  if ((int)sigma.size() != r) throw std::invalid_argument("permutation size");
  std::vector<int> seen(r, 0);
  for (int x : sigma) {
    if (x < 0 || x >= r || seen[x]++) throw std::invalid_argument("not a permutation");
  }

  WeightedArcFamily g;
  g.comb.sig = f.comb.sig;
  g.weights = f.weights;
  g.comb.endpoint_counts.assign(r, 0);
  for (int b = 0; b < r; ++b) g.comb.endpoint_counts[sigma[b]] = f.comb.endpoint_counts[b];

  auto flips = [&](int b) { return (b == 0) != (sigma[b] == 0); };
  auto map_ref = [&](const EndpointRef& e) {
    int c = f.comb.endpoint_counts[e.boundary];
    int slot = flips(e.boundary) ? c + 1 - e.slot : e.slot;
    return EndpointRef{sigma[e.boundary], slot};
  };
  g.comb.arcs.resize(f.comb.arcs.size());
  for (int a = 0; a < (int)f.comb.arcs.size(); ++a)
    for (int e = 0; e < 2; ++e) g.comb.arcs[a].end[e] = map_ref(f.comb.arcs[a].end[e]);

  auto map_side = [&](const Side& s) {
    if (s.kind == Side::ArcSide) return s;
    int c = f.comb.endpoint_counts[s.boundary];
    int gap = (flips(s.boundary) && s.gap != 0) ? c - s.gap : s.gap;
    return Side::boundary_segment(sigma[s.boundary], gap);
  };

  // Transport region types through the re-derived cycles.
  auto new_cycles = derive_regions(g.comb.endpoint_counts, g.comb.arcs);
  std::map<Side, int> cycle_of;
  for (int ci = 0; ci < (int)new_cycles.size(); ++ci)
    for (const Side& s : new_cycles[ci]) cycle_of[s] = ci;

  std::vector<int> cycle_region(new_cycles.size(), -1);
  g.comb.regions.resize(f.comb.regions.size());
  for (int ri = 0; ri < (int)f.comb.regions.size(); ++ri) {
    g.comb.regions[ri].genus = f.comb.regions[ri].genus;
    g.comb.regions[ri].punctures = f.comb.regions[ri].punctures;
    std::set<int> assigned;
    for (const auto& cyc : f.comb.regions[ri].cycles) {
      int target = -1;
      for (const Side& s : cyc) {
        int t = cycle_of.at(map_side(s));
        if (target == -1) target = t;
        if (t != target) throw std::logic_error("relabel: region cycle split");
      }
      if (assigned.insert(target).second) {
        if (cycle_region[target] != -1) throw std::logic_error("relabel: cycle claimed twice");
        cycle_region[target] = ri;
        g.comb.regions[ri].cycles.push_back(new_cycles[target]);
      }
    }
  }
  for (int x : cycle_region)
    if (x == -1) throw std::logic_error("relabel: unclaimed cycle");
  return g;
}

std::string canonical_form(const WeightedArcFamily& f) {
  int n_arcs = (int)f.comb.arcs.size();
  // Orient each arc so end[0] is the smaller endpoint.
  std::vector<Arc> arcs = f.comb.arcs;
  std::vector<int> flipped(n_arcs, 0);
  for (int a = 0; a < n_arcs; ++a)
    if (arcs[a].end[1] < arcs[a].end[0]) {
      std::swap(arcs[a].end[0], arcs[a].end[1]);
      flipped[a] = 1;
    }
  std::vector<int> order(n_arcs);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::make_pair(arcs[x].end[0], arcs[x].end[1]) <
           std::make_pair(arcs[y].end[0], arcs[y].end[1]);
  });
  std::vector<int> new_id(n_arcs);
  for (int i = 0; i < n_arcs; ++i) new_id[order[i]] = i;

  auto map_side = [&](Side s) {
    if (s.kind == Side::ArcSide) {
      s.from_end ^= flipped[s.arc];
      s.arc = new_id[s.arc];
    }
    return s;
  };

  std::ostringstream os;
  os << "sig " << f.comb.sig.genus << " " << f.comb.sig.punctures << " "
     << f.comb.sig.boundaries << "\ncounts";
  for (int c : f.comb.endpoint_counts) os << " " << c;
  os << "\n";
  for (int i = 0; i < n_arcs; ++i) {
    const Arc& a = arcs[order[i]];
    os << "arc " << a.end[0].boundary << "." << a.end[0].slot << "-" << a.end[1].boundary << "."
       << a.end[1].slot << " w " << rat_str(f.weights[order[i]]) << "\n";
  }
  std::vector<std::string> region_strs;
  for (const auto& r : f.comb.regions) {
    std::vector<std::vector<Side>> cycles;
    for (const auto& cyc : r.cycles) {
      std::vector<Side> m;
      for (const Side& s : cyc) m.push_back(map_side(s));
      cycles.push_back(rotate_to_least(std::move(m)));
    }
    std::sort(cycles.begin(), cycles.end());
    std::ostringstream rs;
    rs << "region g " << r.genus << " s " << r.punctures;
    for (const auto& cyc : cycles) {
      rs << " [";
      for (const Side& s : cyc) rs << " " << side_str(s);
      rs << " ]";
    }
    region_strs.push_back(rs.str());
  }
  std::sort(region_strs.begin(), region_strs.end());
  for (const auto& s : region_strs) os << s << "\n";
  return os.str();
}

bool equals(const WeightedArcFamily& a, const WeightedArcFamily& b) {
  return canonical_form(a) == canonical_form(b);
}

ProjectiveArcFamily projectivize(const WeightedArcFamily& f) {
  Rat total = 0;
  for (const auto& w : f.weights) total += w;
  if (total <= 0) throw std::invalid_argument("empty or non-positive family");
  ProjectiveArcFamily p;
  p.fam = f;
  for (auto& w : p.fam.weights) w /= total;
  return p;
}

bool equals_projective(const WeightedArcFamily& a, const WeightedArcFamily& b) {
  return equals(projectivize(a).fam, projectivize(b).fam);
}

bool membership_incidence(const WeightedArcFamily& f, const IncidenceSpec& spec) {
  const auto& c = f.comb;
  for (const Arc& a : c.arcs) {
    int i = a.end[0].boundary, j = a.end[1].boundary;
    if (spec.allowed[i][j] == 0) return false;
  }
  for (int b = 0; b < c.sig.boundaries; ++b) {
    bool met = c.endpoint_counts[b] > 0;
    if (met != (spec.required[b] != 0)) return false;
  }
  return true;
}

namespace {

IncidenceSpec star_spec(int r) {
  IncidenceSpec s;
  s.allowed.assign(r, std::vector<int>(r, 0));
  for (int i = 1; i < r; ++i) s.allowed[0][i] = s.allowed[i][0] = 1;
  s.required.assign(r, 1);
  return s;
}

// Block condition at boundary i >= 1 of a star-incidence family: the 0-ends
// of its arcs form a cyclic interval of 0-slots and appear there in boundary
// i's own cyclic window order. `linear` additionally forbids wrapping and
// rotation (the linear orders must literally match).
bool block_condition(const WeightedArcFamily& f, int i, bool linear) {
  const auto& c = f.comb;
  int ci = c.endpoint_counts[i];
  int c0 = c.endpoint_counts[0];
  std::vector<int> owner(c0 + 1, 0);  // owner[p] = i-slot partnered at 0-slot p
  for (const Arc& a : c.arcs)
    for (int e = 0; e < 2; ++e)
      if (a.end[e].boundary == i) owner[a.end[1 - e].slot] = a.end[e].slot;
  std::vector<int> islots, ps;
  for (int p = 1; p <= c0; ++p)
    if (owner[p]) {
      islots.push_back(owner[p]);
      ps.push_back(p);
    }
  if ((int)islots.size() != ci) return false;
  int holes = 0;
  for (int t = 0; t < (int)ps.size(); ++t) {
    int cur = ps[t], nxt = ps[(t + 1) % ps.size()];
    if ((nxt - cur + c0) % c0 != 1) ++holes;
  }
  if (holes > 1) return false;
  int start = -1;
  for (int t = 0; t < (int)islots.size(); ++t)
    if (islots[t] == 1) start = t;
  if (start < 0) return false;
  for (int t = 0; t < (int)islots.size(); ++t)
    if (islots[(start + t) % islots.size()] != t + 1) return false;
  if (!linear) return true;
  for (int t = 1; t < (int)ps.size(); ++t)
    if (ps[t] != ps[t - 1] + 1) return false;
  return islots.front() == 1;
}

}  // namespace

bool membership(const WeightedArcFamily& f, Predicate p) {
  const auto& c = f.comb;
  switch (p) {
    case Predicate::Exhaustive:
      return is_exhaustive(c);
    case Predicate::ChineseTrees:
      return is_exhaustive(c) && membership_incidence(f, star_spec(c.sig.boundaries));
    case Predicate::Trees:
      return c.sig.genus == 0 && c.sig.punctures == 0 &&
             membership(f, Predicate::ChineseTrees);
    case Predicate::CyclicChineseTrees: {
      if (!membership(f, Predicate::ChineseTrees)) return false;
      for (int i = 1; i < c.sig.boundaries; ++i)
        if (!block_condition(f, i, false)) return false;
      return true;
    }
    case Predicate::LinearTrees: {
      if (!membership(f, Predicate::Trees)) return false;
      for (int i = 1; i < c.sig.boundaries; ++i)
        if (!block_condition(f, i, true)) return false;
      return true;
    }
  }
  return false;
}

namespace {

WeightedArcFamily with_derived_disk_regions(WeightedArcFamily f) {
  auto cycles = derive_regions(f.comb.endpoint_counts, f.comb.arcs);
  f.comb.regions.clear();
  for (auto& cyc : cycles) {
    Region r;
    r.cycles.push_back(std::move(cyc));
    f.comb.regions.push_back(std::move(r));
  }
  return f;
}

}  // namespace

WeightedArcFamily unit_cylinder(const Rat& weight) {
  WeightedArcFamily f;
  f.comb.sig = {0, 0, 2};
  f.comb.endpoint_counts = {1, 1};
  f.comb.arcs.push_back({EndpointRef{0, 1}, EndpointRef{1, 1}});
  f.weights = {weight};
  return with_derived_disk_regions(std::move(f));
}

WeightedArcFamily delta_family(const Rat& s, const Rat& scale) {
  if (s <= 0 || s >= 1) throw std::invalid_argument("delta parameter must be in (0,1)");
  WeightedArcFamily f;
  f.comb.sig = {0, 0, 2};
  f.comb.endpoint_counts = {2, 2};
  f.comb.arcs.push_back({EndpointRef{0, 1}, EndpointRef{1, 2}});
  f.comb.arcs.push_back({EndpointRef{0, 2}, EndpointRef{1, 1}});
  f.weights = {s * scale, (1 - s) * scale};
  return with_derived_disk_regions(std::move(f));
}

WeightedArcFamily dot_family() {
  WeightedArcFamily f;
  f.comb.sig = {0, 0, 3};
  f.comb.endpoint_counts = {2, 1, 1};
  f.comb.arcs.push_back({EndpointRef{0, 1}, EndpointRef{1, 1}});
  f.comb.arcs.push_back({EndpointRef{0, 2}, EndpointRef{2, 1}});
  f.weights = {Rat(1), Rat(1)};
  return with_derived_disk_regions(std::move(f));
}

}  // namespace arcop
