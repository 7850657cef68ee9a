#pragma once

#include <utility>
#include <vector>

#include "treext/errors.hpp"
#include "treext/tree.hpp"

namespace treext {

/// Decomposition T = [L_1,...,L_k] v H w [R_1,...,R_l]: the branches hanging
/// off v away from w, the branches hanging off w away from v, and the host
/// tree containing the v-w path (v and w are leaves of the host, or the host
/// is the single edge vw).
struct BranchSplit {
  std::vector<RootedTree> left_branches;
  std::vector<RootedTree> right_branches;
  Tree host;
  int host_v = 0;  // position of v in the host's numbering
  int host_w = 0;
};

namespace detail {

/// Extracts the induced subtree on `vertices` (which must be connected),
/// renumbering contiguously; returns the new index of `mark`.
inline std::pair<Tree, int> induced_subtree(const Tree& t, const std::vector<int>& vertices,
                                            int mark) {
  std::vector<int> index(t.size(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (int u : vertices)
    for (int w : t.neighbors(u))
      if (u < w && index[w] >= 0) edges.emplace_back(index[u], index[w]);
  return {Tree::from_edges(static_cast<int>(vertices.size()), edges), index[mark]};
}

/// Vertices of the component of T - center containing `start`.
inline std::vector<int> component_without(const Tree& t, int center, int start) {
  std::vector<int> comp{start};
  std::vector<char> seen(t.size(), 0);
  seen[center] = seen[start] = 1;
  for (std::size_t i = 0; i < comp.size(); ++i)
    for (int w : t.neighbors(comp[i]))
      if (!seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
  return comp;
}

}  // namespace detail

inline BranchSplit branch_split(const Tree& t, int v, int w) {
  if (v == w) throw SameVertex("branch_split needs two distinct vertices");
  std::vector<int> toward_w = bfs_parents(t, w);  // next hop toward w
  std::vector<int> toward_v = bfs_parents(t, v);

  auto branches_at = [&](int center, const std::vector<int>& toward_other) {
    std::vector<RootedTree> out;
    for (int nb : t.neighbors(center)) {
      if (nb == toward_other[center]) continue;  // path side stays in the host
      auto comp = detail::component_without(t, center, nb);
      auto [sub, root] = detail::induced_subtree(t, comp, nb);
      out.push_back(RootedTree{std::move(sub), root});
    }
    return out;
  };

  BranchSplit split{branches_at(v, toward_w), branches_at(w, toward_v), Tree::single_vertex(), 0, 0};

  std::vector<char> in_branch(t.size(), 0);
  auto mark_branches = [&](int center, const std::vector<int>& toward_other) {
    for (int nb : t.neighbors(center))
      if (nb != toward_other[center])
        for (int u : detail::component_without(t, center, nb)) in_branch[u] = 1;
  };
  mark_branches(v, toward_w);
  mark_branches(w, toward_v);
  std::vector<int> host_vertices;
  for (int u = 0; u < t.size(); ++u)
    if (!in_branch[u]) host_vertices.push_back(u);
  auto [host, hv] = detail::induced_subtree(t, host_vertices, v);
  split.host_v = hv;
  split.host = host;
  for (std::size_t i = 0; i < host_vertices.size(); ++i)
    if (host_vertices[i] == w) split.host_w = static_cast<int>(i);
  return split;
}

/// Rebuilds the original tree (up to isomorphism) from a split.
inline Tree reassemble(const BranchSplit& split) {
  std::vector<std::pair<int, int>> edges;
  int next = split.host.size();
  for (auto [u, w] : split.host.edges()) edges.emplace_back(u, w);
  auto attach = [&](const std::vector<RootedTree>& branches, int at) {
    for (const RootedTree& b : branches) {
      int base = next;
      next += b.tree.size();
      for (auto [u, w] : b.tree.edges()) edges.emplace_back(base + u, base + w);
      edges.emplace_back(at, base + b.root);
    }
  };
  attach(split.left_branches, split.host_v);
  attach(split.right_branches, split.host_w);
  return Tree::from_edges(next, edges);
}

}  // namespace treext
