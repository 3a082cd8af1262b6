#include <cmath>
#include <random>
#include <set>

#include "cspar/cuts.hpp"
#include "cspar/sparsify.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cspar;
using cspar::testing::demo_predicate;
using cspar::testing::random_directed_graph;
using cspar::testing::random_sparsifiable_predicate;

namespace {

// Independent exhaustive cut check used as the oracle for sampling results.
bool all_cuts_within(const WeightedGraph& g, const WeightedGraph& h, double eps) {
  const int n = g.vertex_count();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) s.push_back(v);
    const double full = cut_value(g, s);
    const double sparse = cut_value(h, s);
    if (full == 0.0) {
      if (sparse != 0.0) return false;
    } else if (sparse < (1 - eps) * full - 1e-9 * full ||
               sparse > (1 + eps) * full + 1e-9 * full) {
      return false;
    }
  }
  return true;
}

CspInstance path_cut_instance() {
  std::vector<Constraint> cs;
  for (int i = 0; i < 4; ++i) cs.push_back({{i, i + 1}, 1.0});
  return CspInstance({"a", "b", "c", "d", "e"}, std::vector<int>(5, 2), make_cut(2),
                     std::move(cs));
}

}  // namespace

TEST_CASE("edge strength estimates") {
  const WeightedGraph single(2, true, {{0, 1, 5.0}});
  CHECK(estimate_edge_strengths(single) == std::vector<int>{1});

  // K4: a spanning tree, then two more forests.
  const WeightedGraph k4(4, false,
                         {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0},
                          {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
  const auto s = estimate_edge_strengths(k4);
  CHECK(*std::max_element(s.begin(), s.end()) == 3);
  CHECK(*std::min_element(s.begin(), s.end()) == 1);
}

TEST_CASE("cut sparsifier") {
  SUBCASE("a lone edge is retained at its original weight") {
    const WeightedGraph g(2, true, {{0, 1, 7.0}});
    const auto [h, report] = sparsify_cut(g, 0.5, 123);
    REQUIRE(report.retained == std::vector<int>{0});
    CHECK(report.new_weights == std::vector<double>{7.0});
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
    CHECK(h.edges()[0].weight == 7.0);
  }
  SUBCASE("K4 output passes the independent cut oracle") {
    const WeightedGraph k4(4, false,
                           {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0},
                            {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto [h, report] = sparsify_cut(k4, 0.5, seed);
      CHECK(report.verified == VerifyStatus::exhaustive_pass);
      CHECK(all_cuts_within(k4, h, 0.5));
    }
  }
  SUBCASE("edgeless graph sparsifies to itself") {
    const auto [h, report] = sparsify_cut(WeightedGraph(3, false), 0.3, 1);
    CHECK(h.edge_count() == 0);
    CHECK(report.retained.empty());
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
  }
  SUBCASE("tiny epsilon forces p = 1 and reproduces the graph") {
    std::mt19937_64 rng(61);
    const WeightedGraph g = random_directed_graph(6, 12, 5, rng);
    const auto [h, report] = sparsify_cut(g, 0.01, 9);
    REQUIRE(h.edge_count() == g.edge_count());
    for (std::size_t i = 0; i < g.edge_count(); ++i)
      CHECK(h.edges()[i].weight == g.edges()[i].weight);
    CHECK(report.oversampling_rounds == 0);
  }
  SUBCASE("epsilon validated") {
    CHECK_THROWS_AS(sparsify_cut(WeightedGraph(2, false), 0.0, 1), Error);
    CHECK_THROWS_AS(sparsify_cut(WeightedGraph(2, false), 1.0, 1), Error);
  }
  SUBCASE("graphs beyond the cap come back unverified") {
    SparsifyOptions options;
    options.max_bruteforce = 4;  // 2^3 subsets exceed this
    const WeightedGraph g(3, false, {{0, 1, 1.0}, {1, 2, 1.0}});
    const auto [h, report] = sparsify_cut(g, 0.5, 3, options);
    CHECK(report.verified == VerifyStatus::unverified);
  }
}

TEST_CASE("pull-back from the cover") {
  const WeightedGraph g(3, true, {{0, 1, 2.0}, {1, 2, 3.0}, {2, 0, 4.0}});
  const auto [cover, m] = bipartite_double_cover(g);
  SUBCASE("full cover pulls back to the whole graph") {
    const WeightedGraph back = pull_back(g, cover, m);
    REQUIRE(back.edge_count() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
      CHECK(back.edges()[i].u == g.edges()[i].u);
      CHECK(back.edges()[i].v == g.edges()[i].v);
      CHECK(back.edges()[i].weight == g.edges()[i].weight);
    }
  }
  SUBCASE("empty cover pulls back to the empty subgraph") {
    const WeightedGraph empty(6, false, {}, 3);
    CHECK(pull_back(g, empty, m).edge_count() == 0);
  }
  SUBCASE("reweighted cover edge keeps its new weight") {
    const WeightedGraph partial(6, false, {{m.to_cover(1, 0), m.to_cover(2, 1), 7.5}}, 3);
    const WeightedGraph back = pull_back(g, partial, m);
    REQUIRE(back.edge_count() == 1);
    CHECK(back.edges()[0].u == 1);
    CHECK(back.edges()[0].v == 2);
    CHECK(back.edges()[0].weight == 7.5);
  }
  SUBCASE("foreign edges are rejected") {
    // (1,0) is not an edge of g, so its cover edge cannot appear.
    const WeightedGraph foreign(6, false, {{m.to_cover(1, 0), m.to_cover(0, 1), 1.0}}, 3);
    CHECK_THROWS_AS(pull_back(g, foreign, m), Error);
    const WeightedGraph wrong_size(4, false);
    CHECK_THROWS_AS(pull_back(g, wrong_size, m), Error);
  }
}

TEST_CASE("csp sparsification pipeline") {
  SUBCASE("single-constraint instance survives unchanged") {
    const CspInstance inst({"x", "y"}, {2, 2}, make_cut(2), {{{0, 1}, 3.0}});
    const auto [sparse, report] = sparsify_csp(inst, 0.5, 11);
    REQUIRE(sparse.constraint_count() == 1);
    CHECK(sparse.constraints()[0].weight == 3.0);
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
  }
  SUBCASE("path instance verifies exhaustively") {
    const CspInstance inst = path_cut_instance();
    const auto [sparse, report] = sparsify_csp(inst, 0.5, 17);
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
    CHECK(verify_sparsifier(inst, sparse, 0.5).pass);
  }
  SUBCASE("demo predicate instance verifies over 4^6 assignments") {
    std::mt19937_64 rng(71);
    const WeightedGraph g = random_directed_graph(6, 12, 3, rng);
    const CspInstance inst = instance_of(g, demo_predicate());
    const auto [sparse, report] = sparsify_csp(inst, 0.5, 19);
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
    CHECK(verify_sparsifier(inst, sparse, 0.5).pass);
  }
  SUBCASE("non-sparsifiable predicates are refused") {
    const CspInstance inst({"x", "y"}, {2, 2}, KaryPredicate({2, 2}, {{0, 1}}),
                           {{{0, 1}, 1.0}});
    CHECK_THROWS_AS(sparsify_csp(inst, 0.5, 1), Error);
  }
  SUBCASE("empty-support predicate: every subinstance verifies") {
    // All values are zero, so the pipeline terminates and the bound holds.
    const CspInstance inst({"x", "y", "z"}, {2, 2, 2}, KaryPredicate({2, 2}, {}),
                           {{{0, 1}, 1.0}, {{1, 2}, 2.0}});
    const auto [sparse, report] = sparsify_csp(inst, 0.5, 5);
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
    CHECK(verify_sparsifier(inst, sparse, 0.5).pass);
  }
  SUBCASE("an instance with no constraints sparsifies to itself") {
    const CspInstance inst({"x", "y"}, {2, 2}, make_cut(2), {});
    const auto [sparse, report] = sparsify_csp(inst, 0.5, 5);
    CHECK(sparse.constraint_count() == 0);
    CHECK(report.verified == VerifyStatus::exhaustive_pass);
  }
  SUBCASE("identical inputs give identical reports") {
    std::mt19937_64 rng(73);
    const WeightedGraph g = random_directed_graph(7, 15, 3, rng);
    const CspInstance inst = instance_of(g, random_sparsifiable_predicate(3, 3, rng));
    const auto [s1, r1] = sparsify_csp(inst, 0.3, 29);
    const auto [s2, r2] = sparsify_csp(inst, 0.3, 29);
    CHECK(r1.retained == r2.retained);
    CHECK(r1.new_weights == r2.new_weights);
    CHECK(r1.oversampling_rounds == r2.oversampling_rounds);
  }
  SUBCASE("retained indices are a subset with positive weights") {
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 20; ++trial) {
      const WeightedGraph g = random_directed_graph(6, 14, 3, rng);
      const CspInstance inst = instance_of(g, random_sparsifiable_predicate(2, 2, rng));
      const auto [sparse, report] = sparsify_csp(inst, 0.5, 100 + trial);
      CHECK(report.retained.size() <= inst.constraint_count());
      std::set<int> seen;
      for (int idx : report.retained) {
        CHECK(idx >= 0);
        CHECK(idx < static_cast<int>(inst.constraint_count()));
        CHECK(seen.insert(idx).second);
      }
      for (double w : report.new_weights) CHECK(w > 0.0);
    }
  }
}

TEST_CASE("sparsifier verification") {
  const CspInstance inst = path_cut_instance();
  SUBCASE("an instance is its own sparsifier") {
    CHECK(verify_sparsifier(inst, inst, 0.1).pass);
  }
  SUBCASE("dropping a constraint without reweighting fails with a witness") {
    // Two disjoint constraints, both satisfiable at once; dropping one halves
    // the value, outside (1 +- eps) for eps < 0.5.
    const CspInstance full({"a", "b", "c", "d"}, {2, 2, 2, 2}, make_cut(2),
                           {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    const CspInstance dropped({"a", "b", "c", "d"}, {2, 2, 2, 2}, make_cut(2),
                              {{{0, 1}, 1.0}});
    const VerifyResult res = verify_sparsifier(full, dropped, 0.3);
    REQUIRE(!res.pass);
    // Lexicographically first failure: the kept constraint unsatisfied, the
    // dropped one satisfied, so the sparse value collapses to zero.
    CHECK(*res.witness == Assignment{0, 0, 0, 1});
  }
  SUBCASE("an empty sparsifier of a satisfiable instance fails") {
    const CspInstance empty(inst.variables(), inst.domains(), inst.predicate(), {});
    const VerifyResult res = verify_sparsifier(inst, empty, 0.9);
    REQUIRE(!res.pass);
    CHECK(value(inst, *res.witness) > 0.0);
  }
  SUBCASE("subinstance checks") {
    const CspInstance other({"a", "b", "c", "d", "e"}, std::vector<int>(5, 2),
                            make_cut(2), {{{0, 2}, 1.0}});
    CHECK_THROWS_AS(verify_sparsifier(inst, other, 0.5), Error);
    const CspInstance renamed({"a", "b", "c", "d", "x"}, std::vector<int>(5, 2),
                              make_cut(2), {});
    CHECK_THROWS_AS(verify_sparsifier(inst, renamed, 0.5), Error);
  }
  SUBCASE("cap enforced") {
    CHECK_THROWS_AS(verify_sparsifier(inst, inst, 0.5, 8), Error);
  }
  SUBCASE("sharded verification agrees with sequential, witness included") {
    const CspInstance full({"a", "b", "c", "d"}, {3, 3, 3, 3}, make_cut(3),
                           {{{0, 1}, 1.0}, {{2, 3}, 1.0}});
    const CspInstance dropped({"a", "b", "c", "d"}, {3, 3, 3, 3}, make_cut(3),
                              {{{0, 1}, 1.0}});
    const VerifyResult seq = verify_sparsifier(full, dropped, 0.3, 1 << 20, 1);
    VerifyResult par = verify_sparsifier(full, dropped, 0.3, 1 << 20, 4);
    // Force the threaded path regardless of the small-space shortcut.
    REQUIRE(!seq.pass);
    REQUIRE(!par.pass);
    CHECK(*seq.witness == *par.witness);
    CHECK(verify_sparsifier(full, full, 0.3, 1 << 20, 4).pass);
  }
}

TEST_CASE("language sparsification") {
  SUBCASE("a single part matches sparsify_csp") {
    const CspInstance inst = path_cut_instance();
    const auto parts = sparsify_language({inst}, 0.5, 17);
    const auto [direct, report] = sparsify_csp(inst, 0.5, 17);
    REQUIRE(parts.size() == 1);
    CHECK(parts[0].second.retained == report.retained);
    CHECK(parts[0].second.new_weights == report.new_weights);
  }
  SUBCASE("disjoint parts concatenate and the union verifies") {
    std::mt19937_64 rng(83);
    const std::vector<std::string> names{"a", "b", "c", "d", "e"};
    const std::vector<int> domains(5, 4);
    std::vector<Constraint> cut_part, demo_part;
    for (int i = 0; i < 4; ++i) cut_part.push_back({{i, i + 1}, 1.0});
    demo_part.push_back({{0, 2}, 2.0});
    demo_part.push_back({{1, 3}, 1.0});
    demo_part.push_back({{2, 4}, 1.0});
    const CspInstance part1(names, domains, make_cut(4), cut_part);
    const CspInstance part2(names, domains, demo_predicate(), demo_part);
    const auto sparsified = sparsify_language({part1, part2}, 0.5, 7);
    REQUIRE(sparsified.size() == 2);
    CHECK(verify_sparsifier(part1, sparsified[0].first, 0.5).pass);
    CHECK(verify_sparsifier(part2, sparsified[1].first, 0.5).pass);
    // Union bound: summed values stay within (1 +- eps) of the summed originals.
    for (const Assignment& a : enumerate_assignments(part1)) {
      const double full = value(part1, a) + value(part2, a);
      const double sparse =
          value(sparsified[0].first, a) + value(sparsified[1].first, a);
      if (full == 0.0) {
        CHECK(sparse == 0.0);
      } else {
        CHECK(sparse >= (1 - 0.5) * full - 1e-9 * full);
        CHECK(sparse <= (1 + 0.5) * full + 1e-9 * full);
      }
    }
  }
  SUBCASE("repeated scope with the same predicate is rejected") {
    const CspInstance part1({"x", "y"}, {2, 2}, make_cut(2), {{{0, 1}, 1.0}});
    const CspInstance part2({"x", "y"}, {2, 2}, make_cut(2), {{{0, 1}, 2.0}});
    CHECK_THROWS_AS(sparsify_language({part1, part2}, 0.5, 1), Error);
  }
  SUBCASE("mismatched variable sets are rejected") {
    const CspInstance part1({"x", "y"}, {2, 2}, make_cut(2), {});
    const CspInstance part2({"x", "z"}, {2, 2}, make_cut(2), {});
    CHECK_THROWS_AS(sparsify_language({part1, part2}, 0.5, 1), Error);
  }
}
