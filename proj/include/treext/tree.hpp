#pragma once

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "treext/degree_sequence.hpp"
#include "treext/errors.hpp"

namespace treext {

/// Immutable tree on vertices 0..n-1, stored as sorted adjacency lists.
class Tree {
 public:
  static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw NotATree("vertex count must be >= 1");
    if (static_cast<int>(edges.size()) != n - 1)
      throw NotATree("expected " + std::to_string(n - 1) + " edges, got " +
                     std::to_string(edges.size()));
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw NotATree("edge endpoint out of range");
      if (u == v) throw NotATree("self-loop at vertex " + std::to_string(u));
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    for (auto& nb : adj) {
      std::sort(nb.begin(), nb.end());
      if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
        throw NotATree("duplicate edge");
    }
    // connectivity; with n-1 edges this also rules out cycles
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : adj[v])
        if (!seen[w]) {
          seen[w] = 1;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached != n) throw NotATree("graph is disconnected");
    return Tree(n, std::move(adj));
  }

  static Tree single_vertex() { return from_edges(1, {}); }

  static Tree path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
  }

  static Tree star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return from_edges(n, e);
  }

  int size() const { return n_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }

  bool adjacent(int u, int v) const {
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
  }

  /// Edges as (u,v) with u < v, lexicographically sorted.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (int u = 0; u < n_; ++u)
      for (int v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

 private:
  Tree(int n, std::vector<std::vector<int>> adj) : n_(n), adj_(std::move(adj)) {}
  int n_;
  std::vector<std::vector<int>> adj_;
};

struct RootedTree {
  Tree tree;
  int root = 0;
};

inline DegreeSequence degree_sequence(const Tree& t) {
  std::vector<int> d(t.size());
  for (int v = 0; v < t.size(); ++v) d[v] = t.degree(v);
  return DegreeSequence::validate(std::move(d));
}

/// S(T): one new degree-2 vertex on every edge.
inline Tree subdivision(const Tree& t) {
  int n = t.size();
  std::vector<std::pair<int, int>> out;
  int next = n;
  for (auto [u, v] : t.edges()) {
    out.emplace_back(u, next);
    out.emplace_back(next, v);
    ++next;
  }
  return Tree::from_edges(next, out);
}

inline std::vector<int> bfs_distances(const Tree& t, int src) {
  std::vector<int> dist(t.size(), -1);
  std::queue<int> q;
  dist[src] = 0;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

/// parent[v] = next hop from v toward src (parent[src] = -1).
inline std::vector<int> bfs_parents(const Tree& t, int src) {
  std::vector<int> parent(t.size(), -2);
  std::queue<int> q;
  parent[src] = -1;
  q.push(src);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : t.neighbors(v))
      if (parent[w] == -2) {
        parent[w] = v;
        q.push(w);
      }
  }
  return parent;
}

// --- edge-list format: first line "n", then n-1 lines "u v" (0-indexed) ---

inline Tree read_edge_list(std::istream& in) {
  int n = 0;
  if (!(in >> n)) throw ParseError("missing vertex count", 0);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw ParseError("missing edge " + std::to_string(i + 1), static_cast<std::size_t>(i + 1));
    edges.emplace_back(u, v);
  }
  return Tree::from_edges(n, edges);
}

inline void write_edge_list(std::ostream& out, const Tree& t) {
  out << t.size() << '\n';
  for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
}

inline Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

}  // namespace treext
