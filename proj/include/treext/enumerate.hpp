#pragma once

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "treext/canonical.hpp"
#include "treext/degree_sequence.hpp"
#include "treext/errors.hpp"
#include "treext/numbers.hpp"
#include "treext/tree.hpp"

namespace treext {

/// Default vertex bound for exhaustive enumeration; overridable through the
/// TREEXT_ENUM_BOUND environment variable.
inline int default_enum_bound() {
  if (const char* env = std::getenv("TREEXT_ENUM_BOUND")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  return 16;
}

/// Number of labelled trees realizing D: (n-2)! / prod (d_i - 1)!.
inline BigInt labelled_tree_count(const DegreeSequence& d) {
  int n = d.size();
  if (n <= 2) return BigInt(1);
  BigInt count = factorial(n - 2);
  for (int v : d.degrees()) count /= factorial(v - 1);
  return count;
}

namespace detail {

/// Decodes a Pruefer sequence; vertex i ends up with degree = multiplicity + 1.
inline Tree prufer_decode(int n, const std::vector<int>& code) {
  std::vector<int> degree(n, 1);
  for (int v : code) ++degree[v];
  std::vector<std::pair<int, int>> edges;
  std::vector<char> used(n, 0);
  for (int v : code) {
    int leaf = 0;
    while (degree[leaf] != 1 || used[leaf]) ++leaf;
    edges.emplace_back(leaf, v);
    used[leaf] = 1;
    --degree[v];
  }
  int a = -1, b = -1;
  for (int v = 0; v < n; ++v)
    if (!used[v] && degree[v] == 1) (a < 0 ? a : b) = v;
  edges.emplace_back(a, b);
  return Tree::from_edges(n, edges);
}

}  // namespace detail

struct EnumerationResult {
  std::vector<Tree> classes;  // one per isomorphism class, sorted by canonical code
  BigInt labelled_count;      // Pruefer sequences visited before deduplication
};

/// All isomorphism classes of trees with degree sequence D, generated from
/// Pruefer sequences in which vertex i appears d_i - 1 times and deduplicated
/// by canonical code.
inline EnumerationResult trees_with_degrees_counted(const DegreeSequence& d,
                                                    int bound = default_enum_bound()) {
  int n = d.size();
  if (n > bound)
    throw SizeBoundExceeded("enumeration limited to n <= " + std::to_string(bound) +
                            ", got n = " + std::to_string(n));
  EnumerationResult result;
  if (n <= 2) {
    result.classes.push_back(n == 1 ? Tree::single_vertex() : Tree::path(2));
    result.labelled_count = 1;
    return result;
  }
  std::vector<int> symbols;
  for (int v = 0; v < n; ++v)
    symbols.insert(symbols.end(), d[v] - 1, v);
  std::sort(symbols.begin(), symbols.end());
  std::map<std::string, Tree> seen;
  BigInt visited(0);
  do {
    Tree t = detail::prufer_decode(n, symbols);
    ++visited;
    seen.emplace(canonical_code(t), std::move(t));
  } while (std::next_permutation(symbols.begin(), symbols.end()));
  if (visited != labelled_tree_count(d))
    throw Error("pruefer enumeration visited " + visited.get_str() +
                " labelled trees, expected " + labelled_tree_count(d).get_str());
  result.labelled_count = visited;
  for (auto& [code, tree] : seen) result.classes.push_back(std::move(tree));
  return result;
}

inline std::vector<Tree> trees_with_degrees(const DegreeSequence& d,
                                            int bound = default_enum_bound()) {
  return trees_with_degrees_counted(d, bound).classes;
}

/// All isomorphism classes of trees whose degree sequence is majorised by B.
inline std::vector<Tree> trees_majorised_by(const DegreeSequence& b,
                                            int bound = default_enum_bound()) {
  std::map<std::string, Tree> seen;
  for (const DegreeSequence& d : enumerate_majorised(b))
    for (Tree& t : trees_with_degrees(d, bound)) seen.emplace(canonical_code(t), std::move(t));
  std::vector<Tree> out;
  out.reserve(seen.size());
  for (auto& [code, tree] : seen) out.push_back(std::move(tree));
  return out;
}

/// All isomorphism classes of n-vertex trees.
inline std::vector<Tree> all_trees(int n, int bound = default_enum_bound()) {
  std::vector<int> star(n, 1);
  if (n == 1) star[0] = 0;
  else star[0] = n - 1;
  return trees_majorised_by(DegreeSequence::validate(star), bound);
}

}  // namespace treext
