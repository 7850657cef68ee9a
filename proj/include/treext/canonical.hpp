#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "treext/tree.hpp"

namespace treext {

/// The one or two centroids (vertices minimising the largest component of T-v).
inline std::vector<int> centroids(const Tree& t) {
  int n = t.size();
  std::vector<int> size(n, 1), order, parent(n, -1);
  order.reserve(n);
  order.push_back(0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (int w : t.neighbors(order[i]))
      if (w != parent[order[i]]) {
        parent[w] = order[i];
        order.push_back(w);
      }
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (parent[*it] >= 0) size[parent[*it]] += size[*it];
  std::vector<int> best;
  int best_val = n + 1;
  for (int v = 0; v < n; ++v) {
    int val = n - size[v];
    for (int w : t.neighbors(v))
      if (w != parent[v]) val = std::max(val, size[w]);
    if (val < best_val) {
      best_val = val;
      best.assign(1, v);
    } else if (val == best_val) {
      best.push_back(v);
    }
  }
  return best;
}

/// AHU code of the component of T containing `root` after deleting the edge
/// to `banned` (banned = -1 encodes the whole tree).  Children codes sorted.
inline std::string rooted_code(const Tree& t, int root, int banned = -1) {
  auto recurse = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> child_codes;
    for (int w : t.neighbors(v))
      if (w != parent && w != banned) child_codes.push_back(self(self, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "(";
    for (auto& c : child_codes) out += c;
    out += ')';
    return out;
  };
  return recurse(recurse, root, banned);
}

/// Complete isomorphism invariant: equal codes iff isomorphic.  Rooted at the
/// centroid; a bicentroidal tree is split at the central edge and the two
/// half-codes are combined in sorted order.
inline std::string canonical_code(const Tree& t) {
  std::vector<int> c = centroids(t);
  if (c.size() == 1) return "C" + rooted_code(t, c[0]);
  std::string a = rooted_code(t, c[0], c[1]);
  std::string b = rooted_code(t, c[1], c[0]);
  if (b < a) std::swap(a, b);
  return "B" + a + b;
}

/// Deterministic canonical root: the centroid (for a bicentroid, the endpoint
/// whose half-code is not larger).
inline int canonical_root(const Tree& t) {
  std::vector<int> c = centroids(t);
  if (c.size() == 1) return c[0];
  std::string a = rooted_code(t, c[0], c[1]);
  std::string b = rooted_code(t, c[1], c[0]);
  return a <= b ? c[0] : c[1];
}

}  // namespace treext
