#pragma once

#include <algorithm>
#include <cassert>
#include <span>
#include <utility>
#include <vector>

#include "treext/degree_sequence.hpp"
#include "treext/tree.hpp"

namespace treext {

namespace detail {

enum class MTreeLeafPick { lowest_vertex, highest_vertex };

inline Tree greedy_tree_impl(const DegreeSequence& d) {
  int n = d.size();
  if (n == 1) return Tree::single_vertex();
  const std::vector<int>& deg = d.degrees();  // non-increasing
  std::vector<std::pair<int, int>> edges;
  std::vector<int> assigned{deg[0]};  // degree assigned to vertex i
  std::size_t next_degree = 1;        // next entry of deg to hand out
  std::vector<int> children_left{deg[0]};
  std::size_t processed = 0;  // vertices whose neighbourhood is complete

  while (next_degree < deg.size()) {
    // labelled vertex with the largest degree whose neighbours are not
    // complete yet; ties go to the first labelled (queue order)
    int pick = -1;
    for (std::size_t v = processed; v < assigned.size(); ++v) {
      if (children_left[v] == 0) continue;
      if (pick < 0 || assigned[v] > assigned[pick]) pick = static_cast<int>(v);
    }
    assert(pick >= 0);
    while (children_left[pick] > 0 && next_degree < deg.size()) {
      int child = static_cast<int>(assigned.size());
      assigned.push_back(deg[next_degree]);
      children_left.push_back(deg[next_degree] - 1);
      ++next_degree;
      edges.emplace_back(pick, child);
      --children_left[pick];
    }
    while (processed < assigned.size() && children_left[processed] == 0) ++processed;
  }
  return Tree::from_edges(n, edges);
}

// Recursive M-tree builder over a reduced degree sequence slice.  `labels`
// collects the v_1, v_2, ... vertices in label order; their degrees are
// non-decreasing by construction.
struct MTreeState {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> labels;
  int next_vertex = 0;

  int new_vertex() { return next_vertex++; }
  void add_leaves(int at, int count) {
    for (int i = 0; i < count; ++i) edges.emplace_back(at, new_vertex());
  }
};

inline void m_tree_build(MTreeState& st, std::span<const int> d, MTreeLeafPick pick) {
  int t = static_cast<int>(d.size());
  int d_last = d[t - 1];
  if (t <= d_last + 1) {
    // merge t-1 leaves of the star [1+d_t] with the roots of [d_1],...,[d_{t-1}];
    // label order v_1 = centre, then star roots by non-decreasing degree
    int centre = st.new_vertex();
    st.labels.push_back(centre);
    for (int j = t - 2; j >= 0; --j) {
      int r = st.new_vertex();
      st.edges.emplace_back(centre, r);
      st.add_leaves(r, d[j] - 1);
      st.labels.push_back(r);
    }
    st.add_leaves(centre, d_last - (t - 1));
    return;
  }
  // recursive case: build M(d_{d_t},...,d_{t-1}) first
  m_tree_build(st, d.subspan(d_last - 1, t - d_last), pick);

  std::vector<int> vertex_degree(st.next_vertex, 0);
  for (auto [u, v] : st.edges) {
    ++vertex_degree[u];
    ++vertex_degree[v];
  }
  // v_s: the smallest-index label adjacent to a leaf
  int attach = -1;
  for (int label : st.labels) {
    int best_leaf = -1;
    for (auto [u, v] : st.edges) {
      int other = (u == label) ? v : (v == label) ? u : -1;
      if (other < 0 || vertex_degree[other] != 1) continue;
      if (best_leaf < 0 || (pick == MTreeLeafPick::lowest_vertex ? other < best_leaf
                                                                 : other > best_leaf))
        best_leaf = other;
    }
    if (best_leaf >= 0) {
      attach = best_leaf;
      break;
    }
  }
  assert(attach >= 0);
  // merge the root of R_{d_t} = [[d_1],...,[d_{d_t-1}]] with that leaf;
  // the new pseudo-leaves are labelled in non-decreasing degree order
  for (int j = d_last - 2; j >= 0; --j) {
    int r = st.new_vertex();
    st.edges.emplace_back(attach, r);
    st.add_leaves(r, d[j] - 1);
    st.labels.push_back(r);
  }
}

inline Tree m_tree_impl(const DegreeSequence& d, MTreeLeafPick pick) {
  ReducedDegreeSequence red = reduce(d);
  if (red.internal_degrees.empty())
    return d.size() == 1 ? Tree::single_vertex() : Tree::path(2);
  MTreeState st;
  m_tree_build(st, red.internal_degrees, pick);
  Tree out = Tree::from_edges(st.next_vertex, st.edges);
  assert(degree_sequence(out) == d);
  return out;
}

}  // namespace detail

/// The greedy tree G(D): breadth-first construction that always hands the
/// largest remaining degrees to the children of the labelled vertex with the
/// largest degree.
inline Tree greedy_tree(const DegreeSequence& d) { return detail::greedy_tree_impl(d); }

/// The M-tree M(D): recursive star-merging construction in which large and
/// small degrees alternate.
inline Tree m_tree(const DegreeSequence& d) {
  return detail::m_tree_impl(d, detail::MTreeLeafPick::lowest_vertex);
}

}  // namespace treext
