#include "cspar/predicate.hpp"

#include <algorithm>
#include <string>

namespace cspar {

namespace {

std::string tuple_str(const Tuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace

KaryPredicate::KaryPredicate(std::vector<int> domain_sizes,
                             const std::vector<Tuple>& support)
    : domain_sizes_(std::move(domain_sizes)) {
  if (domain_sizes_.empty())
    fail(errc::bad_parameters, "predicate arity must be positive");
  for (int r : domain_sizes_)
    if (r < 1) fail(errc::bad_parameters, "domain sizes must be positive");
  const auto k = domain_sizes_.size();
  support_.reserve(support.size());
  for (const Tuple& t : support) {
    if (t.size() != k)
      fail(errc::bad_parameters,
           "support tuple " + tuple_str(t) + " has wrong arity");
    for (std::size_t i = 0; i < k; ++i)
      if (t[i] < 0 || t[i] >= domain_sizes_[i])
        fail(errc::bad_parameters,
             "support tuple " + tuple_str(t) + " leaves the domain at position " +
                 std::to_string(i));
    if (!support_.insert(t).second)
      fail(errc::bad_parameters, "duplicate support tuple " + tuple_str(t));
  }
}

std::vector<Tuple> KaryPredicate::sorted_support() const {
  std::vector<Tuple> out(support_.begin(), support_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<int> KaryPredicate::uniform_domain() const {
  int r = domain_sizes_.front();
  for (int s : domain_sizes_)
    if (s != r) return std::nullopt;
  return r;
}

KaryPredicate make_cut(int r) {
  if (r < 2) fail(errc::bad_parameters, "cut predicate needs domain size >= 2");
  std::vector<Tuple> support;
  for (Label x = 0; x < r; ++x)
    for (Label y = 0; y < r; ++y)
      if (x != y) support.push_back({x, y});
  return KaryPredicate({r, r}, support);
}

namespace {

// Applies fn to every tuple of [r]^k in lexicographic order.
template <typename Fn>
void for_each_tuple(int k, int r, Fn&& fn) {
  Tuple t(k, 0);
  while (true) {
    fn(t);
    int i = k - 1;
    while (i >= 0 && t[i] == r - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
}

void check_kr(int k, int r, const char* what) {
  if (k < 2 || r < 2)
    fail(errc::bad_parameters,
         std::string(what) + " predicate needs arity >= 2 and domain size >= 2");
}

}  // namespace

KaryPredicate make_nae(int k, int r) {
  check_kr(k, r, "nae");
  std::vector<Tuple> support;
  for_each_tuple(k, r, [&](const Tuple& t) {
    if (std::adjacent_find(t.begin(), t.end(), std::not_equal_to<>()) != t.end())
      support.push_back(t);
  });
  return KaryPredicate(std::vector<int>(k, r), support);
}

KaryPredicate make_nor(int k, int r) {
  check_kr(k, r, "nor");
  return KaryPredicate(std::vector<int>(k, r), {Tuple(k, 0)});
}

KaryPredicate make_parity(int k, int r) {
  check_kr(k, r, "parity");
  std::vector<Tuple> support;
  for_each_tuple(k, r, [&](const Tuple& t) {
    long sum = 0;
    for (Label x : t) sum += x;
    if (sum % 2 == 0) support.push_back(t);
  });
  return KaryPredicate(std::vector<int>(k, r), support);
}

namespace {

void require_binary(const KaryPredicate& p) {
  if (p.arity() != 2)
    fail(errc::not_binary, "operation needs a binary predicate, got arity " +
                               std::to_string(p.arity()));
}

void check_pair(LabelPair pr, int domain, const char* side) {
  if (pr.lo >= pr.hi || pr.lo < 0 || pr.hi >= domain)
    fail(errc::pair_out_of_range,
         std::string(side) + " pair {" + std::to_string(pr.lo) + "," +
             std::to_string(pr.hi) + "} is not a two-element subset of [" +
             std::to_string(domain) + ")");
}

}  // namespace

KaryPredicate restrict_predicate(const KaryPredicate& p, LabelPair b, LabelPair c) {
  require_binary(p);
  check_pair(b, p.domain_size(0), "left");
  check_pair(c, p.domain_size(1), "right");
  std::vector<Tuple> support;
  const Label bs[2] = {b.lo, b.hi};
  const Label cs[2] = {c.lo, c.hi};
  for (Label i = 0; i < 2; ++i)
    for (Label j = 0; j < 2; ++j)
      if (p.holds({bs[i], cs[j]})) support.push_back({i, j});
  return KaryPredicate({2, 2}, support);
}

bool is_singleton(const KaryPredicate& p) { return p.support_size() == 1; }

std::optional<SingletonWitness> find_singleton_subpredicate(const KaryPredicate& p) {
  require_binary(p);
  const int r = p.domain_size(0);
  const int s = p.domain_size(1);
  if (r < 2 || s < 2)
    fail(errc::domain_too_small, "both domains must have size >= 2");
  for (Label b0 = 0; b0 < r; ++b0)
    for (Label b1 = b0 + 1; b1 < r; ++b1)
      for (Label c0 = 0; c0 < s; ++c0)
        for (Label c1 = c0 + 1; c1 < s; ++c1) {
          const Label bs[2] = {b0, b1};
          const Label cs[2] = {c0, c1};
          int count = 0;
          std::pair<Label, Label> cell;
          for (Label x : bs)
            for (Label y : cs)
              if (p.holds({x, y})) {
                ++count;
                cell = {x, y};
              }
          if (count == 1)
            return SingletonWitness{{b0, b1}, {c0, c1}, cell};
        }
  return std::nullopt;
}

Classification classify(const KaryPredicate& p) {
  auto witness = find_singleton_subpredicate(p);
  if (witness) return {false, witness};
  return {true, std::nullopt};
}

namespace {

// Odometer over mixed radixes; false once wrapped around.
bool advance(std::vector<int>& digits, const std::vector<int>& radixes) {
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) {
    if (++digits[i] < radixes[i]) return true;
    digits[i] = 0;
  }
  return false;
}

// Lexicographically next l-combination of {0..k-1}; false after the last.
bool next_combination(std::vector<int>& comb, int k) {
  const int l = static_cast<int>(comb.size());
  int i = l - 1;
  while (i >= 0 && comb[i] == k - l + i) --i;
  if (i < 0) return false;
  ++comb[i];
  for (int j = i + 1; j < l; ++j) comb[j] = comb[j - 1] + 1;
  return true;
}

}  // namespace

Tuple witness_tuple(const CubeWitness& w, int arity) {
  Tuple t(arity, -1);
  for (std::size_t j = 0; j < w.positions.size(); ++j)
    t[w.positions[j]] = w.picked[j] ? w.subdomains[j].hi : w.subdomains[j].lo;
  std::size_t f = 0;
  for (int pos = 0; pos < arity; ++pos)
    if (t[pos] < 0) t[pos] = w.filler[f++];
  return t;
}

std::optional<CubeWitness> find_singleton_lcube(const KaryPredicate& p, int ell) {
  const int k = p.arity();
  if (ell < 2 || ell > k)
    fail(errc::bad_cube_dim, "cube dimension must lie in [2, arity]");
  if (p.support().empty()) return std::nullopt;

  std::vector<int> positions(ell);
  for (int j = 0; j < ell; ++j) positions[j] = j;
  do {
    // Count of two-element subdomains per chosen position.
    std::vector<int> pair_counts(ell);
    bool feasible = true;
    for (int j = 0; j < ell; ++j) {
      const int d = p.domain_size(positions[j]);
      pair_counts[j] = d * (d - 1) / 2;
      if (pair_counts[j] == 0) feasible = false;
    }
    if (!feasible) continue;

    std::vector<int> rest;
    for (int pos = 0, j = 0; pos < k; ++pos) {
      if (j < ell && positions[j] == pos) {
        ++j;
      } else {
        rest.push_back(pos);
      }
    }

    std::vector<int> pair_idx(ell, 0);
    do {
      std::vector<LabelPair> subdomains(ell);
      for (int j = 0; j < ell; ++j) {
        // pair index -> (lo, hi) in lexicographic order over lo < hi
        int idx = pair_idx[j];
        const int d = p.domain_size(positions[j]);
        Label lo = 0;
        while (idx >= d - 1 - lo) {
          idx -= d - 1 - lo;
          ++lo;
        }
        subdomains[j] = {lo, static_cast<Label>(lo + 1 + idx)};
      }

      std::vector<int> picked(ell, 0);
      const std::vector<int> two(ell, 2);
      do {
        // Unique-corner check: every supported tuple inside the box must sit
        // on the picked corner.
        bool unique = true;
        for (const Tuple& t : p.support()) {
          bool in_box = true;
          bool on_corner = true;
          for (int j = 0; j < ell && in_box; ++j) {
            const Label x = t[positions[j]];
            const Label want = picked[j] ? subdomains[j].hi : subdomains[j].lo;
            if (x != subdomains[j].lo && x != subdomains[j].hi)
              in_box = false;
            else if (x != want)
              on_corner = false;
          }
          if (in_box && !on_corner) {
            unique = false;
            break;
          }
        }
        if (unique) {
          // Find the lexicographically first filler realizing the corner.
          std::vector<int> filler_radix(rest.size());
          for (std::size_t i = 0; i < rest.size(); ++i)
            filler_radix[i] = p.domain_size(rest[i]);
          std::vector<int> filler(rest.size(), 0);
          Tuple t(k);
          for (int j = 0; j < ell; ++j)
            t[positions[j]] = picked[j] ? subdomains[j].hi : subdomains[j].lo;
          bool more = true;
          while (more) {
            for (std::size_t i = 0; i < rest.size(); ++i) t[rest[i]] = filler[i];
            if (p.holds(t)) {
              CubeWitness w;
              w.positions = positions;
              w.subdomains = subdomains;
              w.picked = picked;
              w.filler.assign(filler.begin(), filler.end());
              return w;
            }
            more = !rest.empty() && advance(filler, filler_radix);
          }
        }
      } while (advance(picked, two));
    } while (advance(pair_idx, pair_counts));
  } while (next_combination(positions, k));
  return std::nullopt;
}

std::optional<Label> find_unused_label(const KaryPredicate& p) {
  if (p.support().empty())
    fail(errc::empty_support, "unused-label search needs nonempty support");
  auto r = p.uniform_domain();
  if (!r)
    fail(errc::non_uniform_domains, "unused-label search needs a single domain");
  std::vector<bool> used(*r, false);
  for (const Tuple& t : p.support())
    for (Label x : t) used[x] = true;
  for (Label z = 0; z < *r; ++z)
    if (!used[z]) return z;
  return std::nullopt;
}

}  // namespace cspar
