#ifndef CSPAR_SRC_UNION_FIND_HPP
#define CSPAR_SRC_UNION_FIND_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace cspar::detail {

// Roots are always the smallest member of their component.
struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

}  // namespace cspar::detail

#endif
