#ifndef CSPAR_PREDICATE_HPP
#define CSPAR_PREDICATE_HPP

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "cspar/errors.hpp"

namespace cspar {

using Label = int;
using Tuple = std::vector<Label>;

struct TupleHash {
  std::size_t operator()(const Tuple& t) const noexcept {
    std::size_t h = 0xcbf29ce484222325ull ^ t.size();
    for (Label x : t) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull;
      h *= 0x100000001b3ull;
    }
    return h;
  }
};

using TupleSet = std::unordered_set<Tuple, TupleHash>;

/// A k-ary 0/1 predicate over finite domains, stored as its support set.
/// Position i ranges over labels [0, domain_size(i)). The binary case with
/// domain sizes (r, s) covers both single-domain and multisorted predicates.
class KaryPredicate {
 public:
  KaryPredicate(std::vector<int> domain_sizes, const std::vector<Tuple>& support);

  int arity() const { return static_cast<int>(domain_sizes_.size()); }
  int domain_size(int position) const { return domain_sizes_[position]; }
  const std::vector<int>& domain_sizes() const { return domain_sizes_; }

  const TupleSet& support() const { return support_; }
  std::size_t support_size() const { return support_.size(); }
  bool holds(const Tuple& t) const { return support_.count(t) != 0; }

  /// Support tuples in lexicographic order (serialization, deterministic scans).
  std::vector<Tuple> sorted_support() const;

  /// All positions share one domain size, if so.
  std::optional<int> uniform_domain() const;

  bool operator==(const KaryPredicate& other) const {
    return domain_sizes_ == other.domain_sizes_ && support_ == other.support_;
  }

 private:
  std::vector<int> domain_sizes_;
  TupleSet support_;
};

// Builtin predicate families.
KaryPredicate make_cut(int r);                 // binary, support {(x,y) : x != y}
KaryPredicate make_nae(int k, int r);          // tuples with at least two distinct entries
KaryPredicate make_nor(int k, int r);          // single all-zero tuple
KaryPredicate make_parity(int k, int r);       // tuples with even label sum

/// Unordered two-element subdomain, stored with lo < hi.
struct LabelPair {
  Label lo = 0;
  Label hi = 0;
};

/// A 2x2 restriction of a binary predicate whose support is a single cell.
/// Its presence is exactly what rules out sparsification.
struct SingletonWitness {
  LabelPair left_pair;                  // B, subset of the left domain
  LabelPair right_pair;                 // C, subset of the right domain
  std::pair<Label, Label> supported_cell;  // the lone supported (b, c)
};

struct Classification {
  bool sparsifiable = false;
  std::optional<SingletonWitness> witness;  // set iff not sparsifiable
};

/// An l-dimensional Boolean sub-box with a unique forced supported corner.
/// positions are the ascending coordinate indices the box lives on; subdomain
/// j attaches to positions[j]; picked[j] selects lo/hi as the forced corner;
/// filler holds one label per remaining position, ascending.
struct CubeWitness {
  std::vector<int> positions;
  std::vector<LabelPair> subdomains;
  std::vector<int> picked;
  std::vector<Label> filler;
};

/// Restriction of a binary predicate onto B x C, relabelled onto {0,1}^2
/// order-preservingly.
KaryPredicate restrict_predicate(const KaryPredicate& p, LabelPair b, LabelPair c);

bool is_singleton(const KaryPredicate& p);

/// Scans all (B, C) pairs in lexicographic order for a singleton 2x2
/// restriction. Requires a binary predicate with both domains of size >= 2.
std::optional<SingletonWitness> find_singleton_subpredicate(const KaryPredicate& p);

/// Sparsifiable iff no 2x2 restriction is a singleton.
Classification classify(const KaryPredicate& p);

/// Exhaustive search for a singleton ell-cube, first witness in lexicographic
/// order over (positions, subdomains, picked corner, filler).
std::optional<CubeWitness> find_singleton_lcube(const KaryPredicate& p, int ell);

/// The supported tuple a cube witness points at.
Tuple witness_tuple(const CubeWitness& w, int arity);

/// Smallest label appearing in no supported tuple at any position.
/// Defined for uniform domains and nonempty support only.
std::optional<Label> find_unused_label(const KaryPredicate& p);

}  // namespace cspar

#endif
