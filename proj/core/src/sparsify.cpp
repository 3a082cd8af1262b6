#include "cspar/sparsify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "cspar/cuts.hpp"
#include "union_find.hpp"

namespace cspar {

namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0) || !(epsilon < 1.0))
    fail(errc::bad_epsilon, "epsilon must lie in (0, 1)");
}

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Two-sided bound with a small relative slack for float noise; a zero
// reference value admits exactly zero.
bool within_bound(double full, double sparse, double epsilon) {
  if (full == 0.0) return sparse == 0.0;
  const double slack = 1e-9 * full;
  return sparse >= (1.0 - epsilon) * full - slack &&
         sparse <= (1.0 + epsilon) * full + slack;
}

std::uint64_t base_rho(double epsilon, int vertex_count) {
  const double ln_n = std::log(static_cast<double>(std::max(vertex_count, 2)));
  const double rho =
      std::ceil(kStrengthOversamplingC * ln_n / (epsilon * epsilon));
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(rho));
}

// rho0 * 2^round, saturating well above any strength estimate so the retry
// loop always reaches the keep-everything regime.
std::uint64_t round_rho(std::uint64_t rho0, int round) {
  const std::uint64_t cap = std::uint64_t{1} << 62;
  if (round >= 62 || rho0 >= (cap >> round)) return cap;
  return rho0 << round;
}

struct Sample {
  std::vector<int> kept;          // edge indices, ascending
  std::vector<double> weights;    // reweighted, aligned with kept
};

Sample sample_edges(const WeightedGraph& g, const std::vector<int>& strengths,
                    std::uint64_t rho, std::mt19937_64& rng) {
  Sample s;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    const double p =
        std::min(1.0, static_cast<double>(rho) / strengths[i]);
    if (uniform01(rng) < p) {
      s.kept.push_back(static_cast<int>(i));
      s.weights.push_back(g.edges()[i].weight / p);
    }
  }
  return s;
}

// Compares Cut(S) of the sample against the original over all 2^n subsets.
bool cuts_preserved(const WeightedGraph& g, const Sample& s, double epsilon) {
  const int n = g.vertex_count();
  const std::uint64_t subsets = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    double full = 0.0;
    for (const Edge& e : g.edges())
      if (((mask >> e.u) ^ (mask >> e.v)) & 1) full += e.weight;
    double sparse = 0.0;
    for (std::size_t i = 0; i < s.kept.size(); ++i) {
      const Edge& e = g.edges()[s.kept[i]];
      if (((mask >> e.u) ^ (mask >> e.v)) & 1) sparse += s.weights[i];
    }
    if (!within_bound(full, sparse, epsilon)) return false;
  }
  return true;
}

WeightedGraph subgraph_from_sample(const WeightedGraph& g, const Sample& s) {
  std::vector<Edge> edges;
  edges.reserve(s.kept.size());
  for (std::size_t i = 0; i < s.kept.size(); ++i) {
    Edge e = g.edges()[s.kept[i]];
    e.weight = s.weights[i];
    edges.push_back(e);
  }
  return WeightedGraph(g.vertex_count(), g.directed(), std::move(edges),
                       g.left_size());
}

Assignment unrank_assignment(std::uint64_t idx, const std::vector<int>& domains) {
  Assignment a(domains.size());
  for (int i = static_cast<int>(domains.size()) - 1; i >= 0; --i) {
    a[i] = static_cast<Label>(idx % domains[i]);
    idx /= domains[i];
  }
  return a;
}

}  // namespace

std::vector<int> estimate_edge_strengths(const WeightedGraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<int> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return g.edges()[a].weight > g.edges()[b].weight;
  });

  std::vector<int> strength(m, 0);
  std::size_t assigned = 0;
  int forest = 0;
  while (assigned < m) {
    ++forest;
    detail::UnionFind uf(g.vertex_count());
    for (int idx : order) {
      if (strength[idx]) continue;
      const Edge& e = g.edges()[idx];
      if (uf.unite(e.u, e.v)) {
        strength[idx] = forest;
        ++assigned;
      }
    }
  }
  return strength;
}

std::pair<WeightedGraph, SparsifierReport> sparsify_cut(
    const WeightedGraph& g, double epsilon, std::uint64_t seed,
    const SparsifyOptions& options) {
  check_epsilon(epsilon);
  const auto strengths = estimate_edge_strengths(g);
  const std::uint64_t rho0 = base_rho(epsilon, g.vertex_count());
  const bool verifiable =
      g.vertex_count() < 63 &&
      (std::uint64_t{1} << g.vertex_count()) <= options.max_bruteforce;

  for (int round = 0;; ++round) {
    const std::uint64_t rho = round_rho(rho0, round);
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(round));
    Sample s = sample_edges(g, strengths, rho, rng);

    SparsifierReport report;
    report.epsilon = epsilon;
    report.seed = seed;
    report.retained = s.kept;
    report.new_weights = s.weights;
    report.oversampling_rounds = round;

    if (!verifiable) {
      report.verified = VerifyStatus::unverified;
      return {subgraph_from_sample(g, s), std::move(report)};
    }
    if (cuts_preserved(g, s, epsilon)) {
      report.verified = VerifyStatus::exhaustive_pass;
      return {subgraph_from_sample(g, s), std::move(report)};
    }
    // Doubling rho eventually forces p = 1 on every edge, which reproduces
    // g exactly and passes.
  }
}

WeightedGraph pull_back(const WeightedGraph& g, const WeightedGraph& cover_sparsifier,
                        const CoverMap& m) {
  if (m.layers != 2)
    fail(errc::bad_parameters, "pull-back needs a two-layer cover");
  if (!g.directed())
    fail(errc::bad_parameters, "pull-back needs the directed base graph");
  if (g.vertex_count() != m.base_vertices ||
      cover_sparsifier.vertex_count() != m.cover_vertex_count())
    fail(errc::not_a_subgraph_of_cover, "vertex counts do not match the cover map");

  std::map<std::pair<int, int>, int> edge_index;
  for (std::size_t i = 0; i < g.edge_count(); ++i)
    edge_index[{g.edges()[i].u, g.edges()[i].v}] = static_cast<int>(i);

  const int n = m.base_vertices;
  std::map<int, double> kept_weight;  // base edge index -> new weight
  for (const Edge& e : cover_sparsifier.edges()) {
    const int x = std::min(e.u, e.v);
    const int y = std::max(e.u, e.v);
    if (x >= n || y < n)
      fail(errc::not_a_subgraph_of_cover,
           "cover edge does not join layer 0 to layer 1");
    auto it = edge_index.find({x, y - n});
    if (it == edge_index.end())
      fail(errc::not_a_subgraph_of_cover,
           "cover edge (" + std::to_string(x) + "," + std::to_string(y) +
               ") has no base edge");
    kept_weight[it->second] = e.weight;
  }

  std::vector<Edge> edges;
  edges.reserve(kept_weight.size());
  for (const auto& [idx, w] : kept_weight) {
    Edge e = g.edges()[idx];
    e.weight = w;
    edges.push_back(e);
  }
  return WeightedGraph(g.vertex_count(), /*directed=*/true, std::move(edges));
}

namespace {

// Scans assignments [begin_idx, end_idx) in lexicographic order for the first
// bound violation, bailing out once someone else found an earlier one.
void verify_block(const CspInstance& full, const CspInstance& sparse,
                  double epsilon, std::uint64_t begin_idx, std::uint64_t end_idx,
                  std::atomic<std::uint64_t>& first_fail) {
  if (begin_idx >= end_idx) return;
  Assignment a = unrank_assignment(begin_idx, full.domains());
  for (std::uint64_t idx = begin_idx; idx < end_idx; ++idx) {
    if ((idx & 0x3ff) == 0 && first_fail.load() <= idx) return;
    if (!within_bound(value(full, a), value(sparse, a), epsilon)) {
      std::uint64_t seen = first_fail.load();
      while (idx < seen && !first_fail.compare_exchange_weak(seen, idx)) {
      }
      return;
    }
    next_assignment(a, full.domains());
  }
}

}  // namespace

VerifyResult verify_sparsifier(const CspInstance& full, const CspInstance& sparse,
                               double epsilon, std::uint64_t cap, int jobs) {
  check_epsilon(epsilon);
  if (sparse.variables() != full.variables() || sparse.domains() != full.domains() ||
      !(sparse.predicate() == full.predicate()))
    fail(errc::not_a_subinstance, "instances disagree on variables or predicate");
  std::set<std::vector<int>> scopes;
  for (const Constraint& c : full.constraints()) scopes.insert(c.scope);
  for (const Constraint& c : sparse.constraints())
    if (!scopes.count(c.scope))
      fail(errc::not_a_subinstance, "sparse instance has a scope the full one lacks");

  const std::uint64_t total = assignment_count(full.domains());
  if (total > cap)
    fail(errc::too_large, "assignment space exceeds the brute-force cap");

  std::atomic<std::uint64_t> first_fail{total};
  const int workers = std::max(1, std::min<int>(jobs, 64));
  if (workers == 1 || total < 2048) {
    verify_block(full, sparse, epsilon, 0, total, first_fail);
  } else {
    const std::uint64_t block = (total + workers - 1) / workers;
    std::vector<std::thread> threads;
    for (int j = 0; j < workers; ++j) {
      const std::uint64_t lo = std::min<std::uint64_t>(total, j * block);
      const std::uint64_t hi = std::min<std::uint64_t>(total, lo + block);
      threads.emplace_back(verify_block, std::cref(full), std::cref(sparse),
                           epsilon, lo, hi, std::ref(first_fail));
    }
    for (auto& t : threads) t.join();
  }

  VerifyResult result;
  result.pass = first_fail.load() == total;
  if (!result.pass)
    result.witness = unrank_assignment(first_fail.load(), full.domains());
  return result;
}

std::pair<CspInstance, SparsifierReport> sparsify_csp(
    const CspInstance& inst, double epsilon, std::uint64_t seed,
    const SparsifyOptions& options) {
  check_epsilon(epsilon);
  auto cls = classify(inst.predicate());
  if (!cls.sparsifiable)
    fail(errc::not_sparsifiable,
         "predicate has a singleton 2x2 restriction and cannot be sparsified");

  const WeightedGraph g = graph_of(inst);
  auto [cover, cover_map] = bipartite_double_cover(g);
  (void)biclique_colouring(inst.predicate());  // asserts the structure the
                                               // cut reduction rests on
  const auto strengths = estimate_edge_strengths(cover);
  const std::uint64_t rho0 = base_rho(epsilon, cover.vertex_count());

  const bool csp_verifiable = assignment_count(inst.domains()) <= options.max_bruteforce;
  const bool cut_verifiable =
      cover.vertex_count() < 63 &&
      (std::uint64_t{1} << cover.vertex_count()) <= options.max_bruteforce;

  for (int round = 0;; ++round) {
    const std::uint64_t rho = round_rho(rho0, round);
    std::mt19937_64 rng(seed ^ static_cast<std::uint64_t>(round));
    Sample s = sample_edges(cover, strengths, rho, rng);

    const WeightedGraph g_eps =
        pull_back(g, subgraph_from_sample(cover, s), cover_map);
    std::vector<Constraint> constraints;
    constraints.reserve(s.kept.size());
    for (std::size_t i = 0; i < s.kept.size(); ++i)
      constraints.push_back(
          {inst.constraints()[s.kept[i]].scope, s.weights[i]});
    CspInstance sparse(inst.variables(), inst.domains(), inst.predicate(),
                       std::move(constraints));
    if (g_eps.edge_count() != sparse.constraint_count())
      fail(errc::not_a_subgraph_of_cover, "pull-back lost edges");

    SparsifierReport report;
    report.epsilon = epsilon;
    report.seed = seed;
    report.retained = s.kept;
    report.new_weights = s.weights;
    report.oversampling_rounds = round;

    if (csp_verifiable) {
      if (verify_sparsifier(inst, sparse, epsilon, options.max_bruteforce,
                            options.jobs)
              .pass) {
        report.verified = VerifyStatus::exhaustive_pass;
        return {std::move(sparse), std::move(report)};
      }
    } else if (cut_verifiable) {
      if (cuts_preserved(cover, s, epsilon)) {
        report.verified = VerifyStatus::exhaustive_pass;
        return {std::move(sparse), std::move(report)};
      }
    } else {
      report.verified = VerifyStatus::unverified;
      return {std::move(sparse), std::move(report)};
    }
  }
}

std::vector<std::pair<CspInstance, SparsifierReport>> sparsify_language(
    const std::vector<CspInstance>& parts, double epsilon, std::uint64_t seed,
    const SparsifyOptions& options) {
  check_epsilon(epsilon);
  for (std::size_t i = 1; i < parts.size(); ++i)
    if (parts[i].variables() != parts[0].variables() ||
        parts[i].domains() != parts[0].domains())
      fail(errc::bad_parameters, "language parts must share the variable set");
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!(parts[i].predicate() == parts[j].predicate())) continue;
      std::set<std::vector<int>> scopes;
      for (const Constraint& c : parts[i].constraints()) scopes.insert(c.scope);
      for (const Constraint& c : parts[j].constraints())
        if (scopes.count(c.scope))
          fail(errc::bad_parameters,
               "two parts repeat a scope with the same predicate");
    }

  std::vector<std::pair<CspInstance, SparsifierReport>> out;
  out.reserve(parts.size());
  for (std::size_t i = 0; i < parts.size(); ++i)
    out.push_back(sparsify_csp(parts[i], epsilon,
                               seed + static_cast<std::uint64_t>(i), options));
  return out;
}

}  // namespace cspar
