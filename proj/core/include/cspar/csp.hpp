#ifndef CSPAR_CSP_HPP
#define CSPAR_CSP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "cspar/graph.hpp"
#include "cspar/predicate.hpp"

namespace cspar {

inline constexpr std::uint64_t kDefaultBruteforceCap = std::uint64_t{1} << 20;

/// One label per variable, in variable order.
using Assignment = std::vector<Label>;

struct Constraint {
  std::vector<int> scope;  // variable indices, pairwise distinct
  double weight = 1.0;
};

/// A CSP(P) instance: named variables with per-variable domain sizes, one
/// predicate, and weighted constraints with pairwise distinct scopes.
class CspInstance {
 public:
  CspInstance(std::vector<std::string> variables, std::vector<int> domains,
              KaryPredicate predicate, std::vector<Constraint> constraints);

  int variable_count() const { return static_cast<int>(variables_.size()); }
  const std::vector<std::string>& variables() const { return variables_; }
  const std::vector<int>& domains() const { return domains_; }
  const KaryPredicate& predicate() const { return predicate_; }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  std::size_t constraint_count() const { return constraints_.size(); }

 private:
  std::vector<std::string> variables_;
  std::vector<int> domains_;
  KaryPredicate predicate_;
  std::vector<Constraint> constraints_;
};

bool is_valid_assignment(const CspInstance& inst, const Assignment& a);

/// Total weight of satisfied constraints.
double value(const CspInstance& inst, const Assignment& a);

/// The corresponding directed graph of a binary instance: one edge per
/// constraint, in constraint order.
WeightedGraph graph_of(const CspInstance& inst);

/// The corresponding CSP(P) instance of a graph / hypergraph: one constraint
/// per edge, in edge order, with variables named v0..v{n-1}. Each vertex's
/// domain is the predicate's domain at the positions it occupies; vertices in
/// no edge default to the position-0 domain.
CspInstance instance_of(const WeightedGraph& g, const KaryPredicate& p);
CspInstance instance_of(const KUniformHypergraph& h, const KaryPredicate& p);

/// Number of valid assignments (saturating at 2^63).
std::uint64_t assignment_count(const std::vector<int>& domains);

/// Advance to the next assignment in lexicographic order; false after the last.
bool next_assignment(Assignment& a, const std::vector<int>& domains);

/// Lexicographic stream over all valid assignments. Construction fails with
/// too_large when the assignment count exceeds the cap.
class AssignmentRange {
 public:
  AssignmentRange(std::vector<int> domains, std::uint64_t cap);

  class iterator {
   public:
    using value_type = Assignment;

    const Assignment& operator*() const { return current_; }
    iterator& operator++();
    bool operator!=(const iterator& other) const { return done_ != other.done_; }

   private:
    friend class AssignmentRange;
    iterator(const std::vector<int>* domains, bool done);
    const std::vector<int>* domains_;
    Assignment current_;
    bool done_;
  };

  iterator begin() const { return iterator(&domains_, domains_empty_); }
  iterator end() const { return iterator(&domains_, true); }

 private:
  std::vector<int> domains_;
  bool domains_empty_;  // some domain is empty: no valid assignment at all
};

AssignmentRange enumerate_assignments(const CspInstance& inst,
                                      std::uint64_t cap = kDefaultBruteforceCap);

}  // namespace cspar

#endif
