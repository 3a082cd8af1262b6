#ifndef CSPAR_HARDNESS_HPP
#define CSPAR_HARDNESS_HPP

#include <vector>

#include "cspar/csp.hpp"
#include "cspar/graph.hpp"
#include "cspar/predicate.hpp"

namespace cspar {

/// Constraint-count limit for the exact branch-and-bound hitting set.
inline constexpr int kExactHittingSetCap = 64;

/// Certifies a size lower bound for every epsilon-sparsifier of an instance:
/// each family assignment has positive value, so any sparsifier must retain a
/// constraint from each assignment's satisfied set; the minimum hitting set
/// over those sets therefore bounds the retained count from below, for every
/// epsilon in (0,1). bound is that minimum when exact is true, and only the
/// greedy heuristic value (no longer a certified bound) when it is false.
struct LowerBoundCertificate {
  std::vector<Assignment> family;
  std::vector<std::vector<int>> support_sets;  // satisfied constraint indices
  int bound = 0;
  bool exact = false;
};

struct GridInstance {
  CspInstance instance;
  std::vector<Assignment> family;  // n*n assignments, value 1 cell each
};

/// The 2n-variable, n^2-constraint grid that forces full retention whenever
/// the predicate has a singleton 2x2 restriction: variables x1..xn, y1..yn,
/// one constraint per (x_i, y_j) pair in row-major order. Assignment A_ij puts
/// the witness cell on (x_i, y_j) and the off-cell labels everywhere else, so
/// it satisfies exactly that one constraint. weights, when nonempty, must
/// hold n^2 positive entries in constraint order; default is unit weights.
GridInstance grid_instance(const KaryPredicate& p, const SingletonWitness& witness,
                           int n, std::vector<double> weights = {});

struct CubeInstance {
  KUniformHypergraph hypergraph;
  std::vector<Assignment> family;  // q^l assignments
};

/// Complete k-partite hypergraph on k parts of q vertices (all q^k cross
/// hyperedges, unit weights) together with the assignment family that pins
/// every combination of cube-position vertices, giving an Omega(q^l) bound
/// for a predicate containing a singleton l-cube.
CubeInstance cube_hypergraph(const KaryPredicate& p, const CubeWitness& witness, int q);

/// Exact minimum hitting set over the family's satisfied-constraint sets via
/// branch and bound (greedy upper bound, deterministic branch order), for up
/// to kExactHittingSetCap constraints. Beyond the cap the greedy value is
/// reported with exact = false, unless require_exact forces a too_large error.
LowerBoundCertificate hitting_lower_bound(const CspInstance& inst,
                                          const std::vector<Assignment>& family,
                                          bool require_exact = false);

/// Lower bound from an unused label z: for each constraint, assign the
/// lexicographically smallest supported tuple on its scope and z elsewhere.
/// The resulting bound is checked against the |E| / k! guarantee.
LowerBoundCertificate unused_label_bound(const CspInstance& inst, Label z);

}  // namespace cspar

#endif
