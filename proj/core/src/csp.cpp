#include "cspar/csp.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>

namespace cspar {

CspInstance::CspInstance(std::vector<std::string> variables, std::vector<int> domains,
                         KaryPredicate predicate, std::vector<Constraint> constraints)
    : variables_(std::move(variables)), domains_(std::move(domains)),
      predicate_(std::move(predicate)), constraints_(std::move(constraints)) {
  const int n = static_cast<int>(variables_.size());
  if (domains_.size() != variables_.size())
    fail(errc::bad_parameters, "one domain size per variable required");
  std::unordered_set<std::string> names(variables_.begin(), variables_.end());
  if (static_cast<int>(names.size()) != n)
    fail(errc::bad_parameters, "variable names must be distinct");
  for (int d : domains_)
    if (d < 1) fail(errc::bad_parameters, "variable domains must be nonempty");

  const int k = predicate_.arity();
  std::set<std::vector<int>> scopes;
  for (const Constraint& c : constraints_) {
    if (static_cast<int>(c.scope.size()) != k)
      fail(errc::arity_mismatch, "constraint scope arity differs from predicate");
    std::set<int> distinct;
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      const int v = c.scope[i];
      if (v < 0 || v >= n)
        fail(errc::bad_parameters, "scope variable index out of range");
      if (!distinct.insert(v).second)
        fail(errc::bad_parameters, "scope variables must be distinct");
      if (domains_[v] != predicate_.domain_size(static_cast<int>(i)))
        fail(errc::domain_conflict,
             "variable " + variables_[v] + " has domain size " +
                 std::to_string(domains_[v]) + " but occupies position " +
                 std::to_string(i) + " of a predicate expecting " +
                 std::to_string(predicate_.domain_size(static_cast<int>(i))));
    }
    if (!(c.weight > 0.0))
      fail(errc::bad_parameters, "constraint weights must be positive");
    if (!scopes.insert(c.scope).second)
      fail(errc::bad_parameters, "duplicate constraint scope");
  }
}

bool is_valid_assignment(const CspInstance& inst, const Assignment& a) {
  if (static_cast<int>(a.size()) != inst.variable_count()) return false;
  for (int v = 0; v < inst.variable_count(); ++v)
    if (a[v] < 0 || a[v] >= inst.domains()[v]) return false;
  return true;
}

double value(const CspInstance& inst, const Assignment& a) {
  if (!is_valid_assignment(inst, a))
    fail(errc::invalid_assignment, "assignment does not fit the instance");
  double total = 0.0;
  Tuple t(inst.predicate().arity());
  for (const Constraint& c : inst.constraints()) {
    for (std::size_t i = 0; i < c.scope.size(); ++i) t[i] = a[c.scope[i]];
    if (inst.predicate().holds(t)) total += c.weight;
  }
  return total;
}

WeightedGraph graph_of(const CspInstance& inst) {
  if (inst.predicate().arity() != 2)
    fail(errc::not_binary, "corresponding graph needs a binary instance");
  std::vector<Edge> edges;
  edges.reserve(inst.constraint_count());
  for (const Constraint& c : inst.constraints())
    edges.push_back({c.scope[0], c.scope[1], c.weight});
  return WeightedGraph(inst.variable_count(), /*directed=*/true, std::move(edges));
}

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int v = 0; v < n; ++v) names.push_back("v" + std::to_string(v));
  return names;
}

// Per-vertex domains from the positions each vertex occupies.
std::vector<int> position_domains(int n, const KaryPredicate& p,
                                  const std::vector<Constraint>& constraints) {
  std::vector<int> domains(n, 0);
  for (const Constraint& c : constraints)
    for (std::size_t i = 0; i < c.scope.size(); ++i) {
      const int want = p.domain_size(static_cast<int>(i));
      int& d = domains[c.scope[i]];
      if (d == 0) {
        d = want;
      } else if (d != want) {
        fail(errc::domain_conflict,
             "vertex " + std::to_string(c.scope[i]) +
                 " occupies positions with different domain sizes");
      }
    }
  for (int& d : domains)
    if (d == 0) d = p.domain_size(0);
  return domains;
}

}  // namespace

CspInstance instance_of(const WeightedGraph& g, const KaryPredicate& p) {
  if (p.arity() != 2)
    fail(errc::arity_mismatch, "graph edges are binary, predicate is not");
  std::vector<Constraint> constraints;
  constraints.reserve(g.edge_count());
  for (const Edge& e : g.edges()) constraints.push_back({{e.u, e.v}, e.weight});
  auto domains = position_domains(g.vertex_count(), p, constraints);
  return CspInstance(default_names(g.vertex_count()), std::move(domains), p,
                     std::move(constraints));
}

CspInstance instance_of(const KUniformHypergraph& h, const KaryPredicate& p) {
  if (p.arity() != h.arity())
    fail(errc::arity_mismatch, "predicate arity differs from hyperedge arity");
  std::vector<Constraint> constraints;
  constraints.reserve(h.edge_count());
  for (const HyperEdge& e : h.edges()) constraints.push_back({e.vertices, e.weight});
  auto domains = position_domains(h.vertex_count(), p, constraints);
  return CspInstance(default_names(h.vertex_count()), std::move(domains), p,
                     std::move(constraints));
}

std::uint64_t assignment_count(const std::vector<int>& domains) {
  const std::uint64_t limit = std::uint64_t{1} << 63;
  std::uint64_t count = 1;
  for (int d : domains) {
    if (d == 0) return 0;
    if (count > limit / static_cast<std::uint64_t>(d)) return limit;
    count *= static_cast<std::uint64_t>(d);
  }
  return count;
}

bool next_assignment(Assignment& a, const std::vector<int>& domains) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
    if (++a[i] < domains[i]) return true;
    a[i] = 0;
  }
  return false;
}

AssignmentRange::AssignmentRange(std::vector<int> domains, std::uint64_t cap)
    : domains_(std::move(domains)) {
  if (assignment_count(domains_) > cap)
    fail(errc::too_large, "assignment space exceeds the brute-force cap");
  domains_empty_ = false;
  for (int d : domains_)
    if (d == 0) domains_empty_ = true;
}

AssignmentRange::iterator::iterator(const std::vector<int>* domains, bool done)
    : domains_(domains), done_(done) {
  if (!done_) current_.assign(domains_->size(), 0);
}

AssignmentRange::iterator& AssignmentRange::iterator::operator++() {
  if (!next_assignment(current_, *domains_)) done_ = true;
  return *this;
}

AssignmentRange enumerate_assignments(const CspInstance& inst, std::uint64_t cap) {
  return AssignmentRange(inst.domains(), cap);
}

}  // namespace cspar
