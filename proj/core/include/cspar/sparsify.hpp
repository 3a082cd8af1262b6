#ifndef CSPAR_SPARSIFY_HPP
#define CSPAR_SPARSIFY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cspar/cover.hpp"
#include "cspar/csp.hpp"
#include "cspar/graph.hpp"

namespace cspar {

enum class VerifyStatus {
  exhaustive_pass,
  exhaustive_fail,
  unverified,
};

/// Outcome of one sparsification run. retained indexes into the original
/// edge / constraint list; new_weights is aligned with retained.
struct SparsifierReport {
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> retained;
  std::vector<double> new_weights;
  VerifyStatus verified = VerifyStatus::unverified;
  int oversampling_rounds = 0;
};

struct SparsifyOptions {
  std::uint64_t max_bruteforce = kDefaultBruteforceCap;
  int jobs = 1;  // verification workers
};

/// Oversampling constant in rho = ceil(C * eps^-2 * ln n). Edges with forest
/// strength estimate below rho are kept with probability 1, so this fixes the
/// scale at which sampling starts to thin the graph. Correctness never depends
/// on it: runs inside the brute-force cap are re-verified and resampled with a
/// doubled rho until the cut bound holds exactly.
inline constexpr double kStrengthOversamplingC = 0.03125;

/// Strength estimate per edge: its forest index in a maximum-spanning-forest
/// decomposition (heavier edges enter earlier forests, ties by edge index).
std::vector<int> estimate_edge_strengths(const WeightedGraph& g);

/// Benczur-Karger style cut sparsifier: keep edge e with probability
/// p_e = min(1, rho / strength_e) at weight w_e / p_e. When 2^n fits the
/// brute-force cap the result is verified against every vertex subset and
/// resampled with doubled rho (round t reseeds with seed ^ t) until it passes;
/// rho >= max strength reproduces the input exactly, so the loop terminates.
std::pair<WeightedGraph, SparsifierReport> sparsify_cut(
    const WeightedGraph& g, double epsilon, std::uint64_t seed,
    const SparsifyOptions& options = {});

/// Project a sparsifier of the double cover back onto the base graph:
/// (u,v) survives iff {u^(0), v^(1)} survived, with the cover weight.
WeightedGraph pull_back(const WeightedGraph& g, const WeightedGraph& cover_sparsifier,
                        const CoverMap& m);

/// End-to-end pipeline for a sparsifiable binary predicate: build the double
/// cover of the instance's graph, cut-sparsify it, pull the result back, and
/// re-verify the (1 +- eps) bound over all assignments (falling back to the
/// cut-level check, then to unverified, as the brute-force cap allows).
/// Resampling rounds reseed with seed ^ t.
std::pair<CspInstance, SparsifierReport> sparsify_csp(
    const CspInstance& inst, double epsilon, std::uint64_t seed,
    const SparsifyOptions& options = {});

struct VerifyResult {
  bool pass = false;
  std::optional<Assignment> witness;  // lexicographically first failure
};

/// Exhaustively check Val_sparse(A) in (1 +- eps) * Val_full(A) for every
/// assignment, requiring exact zero where Val_full(A) = 0. jobs > 1 shards the
/// assignment space; the reported witness is the lexicographically smallest
/// either way.
VerifyResult verify_sparsifier(const CspInstance& full, const CspInstance& sparse,
                               double epsilon,
                               std::uint64_t cap = kDefaultBruteforceCap,
                               int jobs = 1);

/// Sparsify a constraint-language instance given as per-predicate parts over
/// shared variables: each part is sparsified independently with a derived
/// seed, and the union of the results sparsifies the union.
std::vector<std::pair<CspInstance, SparsifierReport>> sparsify_language(
    const std::vector<CspInstance>& parts, double epsilon, std::uint64_t seed,
    const SparsifyOptions& options = {});

}  // namespace cspar

#endif
