#include "cspar/hardness.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

namespace cspar {

namespace {

void check_singleton_witness(const KaryPredicate& p, const SingletonWitness& w) {
  if (p.arity() != 2) fail(errc::not_binary, "grid construction needs a binary predicate");
  const int r = p.domain_size(0);
  const int s = p.domain_size(1);
  const auto& b = w.left_pair;
  const auto& c = w.right_pair;
  if (b.lo >= b.hi || b.lo < 0 || b.hi >= r || c.lo >= c.hi || c.lo < 0 || c.hi >= s)
    fail(errc::invalid_witness, "witness pairs leave the domains");
  int count = 0;
  bool cell_supported = false;
  for (Label x : {b.lo, b.hi})
    for (Label y : {c.lo, c.hi})
      if (p.holds({x, y})) {
        ++count;
        if (std::pair{x, y} == w.supported_cell) cell_supported = true;
      }
  if (count != 1 || !cell_supported)
    fail(errc::invalid_witness, "restriction onto the witness pairs is not a "
                                "singleton at the claimed cell");
}

void check_cube_witness(const KaryPredicate& p, const CubeWitness& w) {
  const int k = p.arity();
  const int ell = static_cast<int>(w.positions.size());
  if (ell < 2 || ell > k) fail(errc::invalid_witness, "cube dimension out of range");
  if (w.subdomains.size() != w.positions.size() || w.picked.size() != w.positions.size() ||
      w.filler.size() != static_cast<std::size_t>(k - ell))
    fail(errc::invalid_witness, "witness field sizes are inconsistent");
  for (int j = 0; j < ell; ++j) {
    if (j > 0 && w.positions[j] <= w.positions[j - 1])
      fail(errc::invalid_witness, "cube positions must be ascending");
    if (w.positions[j] < 0 || w.positions[j] >= k)
      fail(errc::invalid_witness, "cube position out of range");
    const auto& d = w.subdomains[j];
    if (d.lo >= d.hi || d.lo < 0 || d.hi >= p.domain_size(w.positions[j]))
      fail(errc::invalid_witness, "cube subdomain leaves the domain");
    if (w.picked[j] != 0 && w.picked[j] != 1)
      fail(errc::invalid_witness, "picked corner entries must be bits");
  }
  const Tuple base = witness_tuple(w, k);
  for (int pos = 0; pos < k; ++pos)
    if (base[pos] < 0 || base[pos] >= p.domain_size(pos))
      fail(errc::invalid_witness, "witness filler leaves the domain");
  if (!p.holds(base))
    fail(errc::invalid_witness, "witness corner tuple is not supported");
  for (const Tuple& t : p.support()) {
    bool in_box = true;
    bool on_corner = true;
    for (int j = 0; j < ell && in_box; ++j) {
      const Label x = t[w.positions[j]];
      const Label want = w.picked[j] ? w.subdomains[j].hi : w.subdomains[j].lo;
      if (x != w.subdomains[j].lo && x != w.subdomains[j].hi)
        in_box = false;
      else if (x != want)
        on_corner = false;
    }
    if (in_box && !on_corner)
      fail(errc::invalid_witness, "cube box holds a supported tuple off the corner");
  }
}

}  // namespace

GridInstance grid_instance(const KaryPredicate& p, const SingletonWitness& witness,
                           int n, std::vector<double> weights) {
  check_singleton_witness(p, witness);
  if (n < 1) fail(errc::bad_parameters, "grid size must be positive");
  if (!weights.empty() && weights.size() != static_cast<std::size_t>(n) * n)
    fail(errc::bad_parameters, "need one weight per constraint");

  std::vector<std::string> names;
  std::vector<int> domains;
  names.reserve(2 * n);
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= n; ++j) names.push_back("y" + std::to_string(j));
  domains.insert(domains.end(), n, p.domain_size(0));
  domains.insert(domains.end(), n, p.domain_size(1));

  std::vector<Constraint> constraints;
  constraints.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double w = weights.empty() ? 1.0 : weights[i * n + j];
      constraints.push_back({{i, n + j}, w});
    }
  CspInstance inst(std::move(names), std::move(domains), p, std::move(constraints));

  const Label b = witness.supported_cell.first;
  const Label c = witness.supported_cell.second;
  const Label b_off = b == witness.left_pair.lo ? witness.left_pair.hi : witness.left_pair.lo;
  const Label c_off = c == witness.right_pair.lo ? witness.right_pair.hi : witness.right_pair.lo;

  std::vector<Assignment> family;
  family.reserve(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Assignment a(2 * n);
      for (int v = 0; v < n; ++v) a[v] = v == i ? b : b_off;
      for (int v = 0; v < n; ++v) a[n + v] = v == j ? c : c_off;
      family.push_back(std::move(a));
    }
  return {std::move(inst), std::move(family)};
}

CubeInstance cube_hypergraph(const KaryPredicate& p, const CubeWitness& witness, int q) {
  check_cube_witness(p, witness);
  if (q < 1) fail(errc::bad_parameters, "part size must be positive");
  const int k = p.arity();
  const int ell = static_cast<int>(witness.positions.size());
  const int n = k * q;

  // Part t holds vertices [t*q, (t+1)*q); hyperedges take one vertex per part.
  std::vector<HyperEdge> edges;
  std::vector<int> pick(k, 0);
  while (true) {
    HyperEdge e;
    e.weight = 1.0;
    e.vertices.reserve(k);
    for (int t = 0; t < k; ++t) e.vertices.push_back(t * q + pick[t]);
    edges.push_back(std::move(e));
    int t = k - 1;
    while (t >= 0 && pick[t] == q - 1) pick[t--] = 0;
    if (t < 0) break;
    ++pick[t];
  }
  KUniformHypergraph h(n, k, std::move(edges));

  // Labels off the cube: position t of the witness tuple everywhere on part t;
  // on cube parts, the picked label marks one chosen vertex and the opposite
  // subdomain label the rest.
  const Tuple base = witness_tuple(witness, k);
  std::vector<Assignment> family;
  std::vector<int> chosen(ell, 0);
  while (true) {
    Assignment a(n);
    for (int t = 0; t < k; ++t)
      for (int v = 0; v < q; ++v) a[t * q + v] = base[t];
    for (int j = 0; j < ell; ++j) {
      const int t = witness.positions[j];
      const Label off = witness.picked[j] ? witness.subdomains[j].lo
                                          : witness.subdomains[j].hi;
      for (int v = 0; v < q; ++v)
        if (v != chosen[j]) a[t * q + v] = off;
    }
    family.push_back(std::move(a));
    int j = ell - 1;
    while (j >= 0 && chosen[j] == q - 1) chosen[j--] = 0;
    if (j < 0) break;
    ++chosen[j];
  }
  return {std::move(h), std::move(family)};
}

namespace {

int greedy_hitting_set_size(std::vector<std::vector<int>> sets) {
  int size = 0;
  while (!sets.empty()) {
    // Element covering the most remaining sets, smallest index on ties.
    std::map<int, int> freq;
    for (const auto& s : sets)
      for (int e : s) ++freq[e];
    int best = -1, best_count = 0;
    for (const auto& [e, count] : freq)
      if (count > best_count) {
        best = e;
        best_count = count;
      }
    ++size;
    std::vector<std::vector<int>> rest;
    for (auto& s : sets)
      if (std::find(s.begin(), s.end(), best) == s.end())
        rest.push_back(std::move(s));
    sets = std::move(rest);
  }
  return size;
}

// Exact branch and bound over bitmask sets (element universe <= 64).
struct HittingSearch {
  int best;

  // Lower bound: greedily count pairwise disjoint uncovered sets.
  static int disjoint_bound(const std::vector<std::uint64_t>& uncovered) {
    std::uint64_t used = 0;
    int count = 0;
    for (std::uint64_t s : uncovered)
      if ((s & used) == 0) {
        ++count;
        used |= s;
      }
    return count;
  }

  void branch(const std::vector<std::uint64_t>& uncovered, int chosen) {
    if (uncovered.empty()) {
      best = std::min(best, chosen);
      return;
    }
    if (chosen + disjoint_bound(uncovered) >= best) return;
    // Branch on the smallest uncovered set, elements in ascending order.
    std::uint64_t pick = uncovered.front();
    for (std::uint64_t s : uncovered)
      if (std::popcount(s) < std::popcount(pick)) pick = s;
    while (pick) {
      const int e = std::countr_zero(pick);
      pick &= pick - 1;
      std::vector<std::uint64_t> rest;
      rest.reserve(uncovered.size());
      for (std::uint64_t s : uncovered)
        if (!(s >> e & 1)) rest.push_back(s);
      branch(rest, chosen + 1);
    }
  }
};

int exact_hitting_set_size(const std::vector<std::uint64_t>& sets, int upper) {
  HittingSearch search;
  search.best = upper;
  search.branch(sets, 0);
  return search.best;
}

}  // namespace

LowerBoundCertificate hitting_lower_bound(const CspInstance& inst,
                                          const std::vector<Assignment>& family,
                                          bool require_exact) {
  LowerBoundCertificate cert;
  cert.family = family;
  Tuple t(inst.predicate().arity());
  for (const Assignment& a : family) {
    if (!is_valid_assignment(inst, a))
      fail(errc::invalid_assignment, "family assignment does not fit the instance");
    std::vector<int> satisfied;
    for (std::size_t i = 0; i < inst.constraint_count(); ++i) {
      const Constraint& c = inst.constraints()[i];
      for (std::size_t pos = 0; pos < c.scope.size(); ++pos) t[pos] = a[c.scope[pos]];
      if (inst.predicate().holds(t)) satisfied.push_back(static_cast<int>(i));
    }
    if (satisfied.empty())
      fail(errc::zero_value_assignment,
           "family assignment satisfies no constraint");
    cert.support_sets.push_back(std::move(satisfied));
  }

  if (cert.support_sets.empty()) {
    cert.bound = 0;
    cert.exact = true;
    return cert;
  }

  const int m = static_cast<int>(inst.constraint_count());
  const int greedy = greedy_hitting_set_size(cert.support_sets);
  if (m > kExactHittingSetCap) {
    if (require_exact)
      fail(errc::too_large, "instance exceeds the exact hitting-set cap of " +
                                std::to_string(kExactHittingSetCap));
    cert.bound = greedy;
    cert.exact = false;
    return cert;
  }

  std::vector<std::uint64_t> masks;
  masks.reserve(cert.support_sets.size());
  for (const auto& s : cert.support_sets) {
    std::uint64_t mask = 0;
    for (int e : s) mask |= std::uint64_t{1} << e;
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  cert.bound = exact_hitting_set_size(masks, greedy);
  cert.exact = true;
  return cert;
}

LowerBoundCertificate unused_label_bound(const CspInstance& inst, Label z) {
  const KaryPredicate& p = inst.predicate();
  const auto uniform = p.uniform_domain();
  if (!uniform)
    fail(errc::non_uniform_domains, "unused-label bound needs a single domain");
  const int r = *uniform;
  find_unused_label(p);  // raises on empty support
  std::vector<bool> used(r, false);
  for (const Tuple& t : p.support())
    for (Label x : t) used[x] = true;
  if (z < 0 || z >= r || used[z])
    fail(errc::no_unused_label,
         "label " + std::to_string(z) + " appears in the support");
  for (int d : inst.domains())
    if (d != r)
      fail(errc::non_uniform_domains, "instance domains must match the predicate");

  const Tuple a = p.sorted_support().front();
  std::vector<Assignment> family;
  family.reserve(inst.constraint_count());
  for (const Constraint& c : inst.constraints()) {
    Assignment assignment(inst.variable_count(), z);
    for (std::size_t pos = 0; pos < c.scope.size(); ++pos)
      assignment[c.scope[pos]] = a[pos];
    family.push_back(std::move(assignment));
  }

  LowerBoundCertificate cert = hitting_lower_bound(inst, family);
  if (cert.exact) {
    // The k! guarantee: every assignment's satisfied set has at most k!
    // members, all on the same vertex set.
    std::uint64_t factorial = 1;
    for (int i = 2; i <= p.arity(); ++i) factorial *= static_cast<std::uint64_t>(i);
    if (static_cast<std::uint64_t>(cert.bound) * factorial <
        static_cast<std::uint64_t>(inst.constraint_count()))
      throw std::logic_error("unused-label bound fell below |E|/k!");
  }
  return cert;
}

}  // namespace cspar
