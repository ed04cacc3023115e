#ifndef TAUTILT_FAN_HPP
#define TAUTILT_FAN_HPP

#include "tautilt/exchange_graph.hpp"

namespace tautilt {

// Simplicial cone spanned by the g-vectors of one tau-tilting pair.
struct Cone {
  std::vector<GVec> gens;      // rows of a unimodular integer matrix
  std::vector<GVec> owner_key;
};

enum class ConePosition { Interior, Boundary, Outside };

Cone node_cone(const ExchangeGraph& g, int node);

// Determinant of the generator matrix; +-1 for cones of tau-tilting pairs.
Rat cone_det(const Cone& c);

// Exact trichotomy: solve theta = sum k_i gens_i and read the signs of k.
ConePosition cone_membership(const Cone& c, const std::vector<Rat>& theta);

// Strict feasibility of a homogeneous system rows * x > 0 (componentwise),
// decided by Fourier-Motzkin elimination over the rationals.
bool strict_system_feasible(std::vector<std::vector<Rat>> rows, int nvars);

struct FanReport {
  std::vector<std::string> violations;
  int pairs_checked = 0;
  int edges_checked = 0;
  bool ok() const { return violations.empty(); }
};

// (i) interiors of distinct cones are disjoint; (ii) cones of adjacent
// nodes share exactly n-1 generators and lie on opposite sides of the
// shared facet; on complete graphs also the converse: facet-adjacent cones
// must be joined by an edge.
FanReport check_fan(const ExchangeGraph& g);

struct RayExclusion {
  std::vector<Rat> direction;
  Rat radius;  // angular radius in radians, < pi/2
};

struct CoverageReport {
  long long seed = 0;
  int samples = 0;
  int excluded = 0;
  int inside = 0;
  Rat fraction;  // inside / (samples - excluded); 1 when all excluded
  std::vector<std::vector<Rat>> missed;  // sample points outside the fan
};

// Deterministic low-discrepancy directions (Halton cube, normalized in
// floating point, then rationalized on a 2^-32 grid); a sample counts as
// covered when it lies in some explored cone, boundary included.
CoverageReport coverage(const ExchangeGraph& g, int directions,
                        const std::vector<RayExclusion>& excluded,
                        long long seed);

std::vector<Rat> sample_direction(long long index, int dim);

struct ConeWitness {
  std::vector<GVec> b_key;
  bool witnessed = false;
  std::vector<Rat> point;       // witnessing sample, when found
  std::vector<GVec> a_key;      // A-cone containing it
  int samples_tried = 0;
};

struct ContainmentReport {
  std::vector<ConeWitness> cones;
  int unwitnessed = 0;
  bool all_witnessed() const { return unwitnessed == 0; }
};

// For each explored B-cone, deterministically samples interior points and
// reports whether one lands in the interior of an explored A-cone.
ContainmentReport chamber_containment(const ExchangeGraph& ga,
                                      const ExchangeGraph& gb,
                                      int samples_per_cone);

}  // namespace tautilt

#endif
