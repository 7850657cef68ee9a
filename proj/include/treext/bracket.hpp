#pragma once

#include <algorithm>
#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "treext/errors.hpp"
#include "treext/tree.hpp"

namespace treext {

/// Nested-bracket form of a rooted tree: "[]" is a single vertex, children are
/// serialized in canonical (code-sorted) order, so the output doubles as a
/// rooted canonical code.
inline std::string serialize_bracket(const RootedTree& rt) {
  auto recurse = [&](auto&& self, int v, int parent) -> std::string {
    std::vector<std::string> child_codes;
    for (int w : rt.tree.neighbors(v))
      if (w != parent) child_codes.push_back(self(self, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string out = "[";
    for (std::size_t i = 0; i < child_codes.size(); ++i) {
      if (i) out += ',';
      out += child_codes[i];
    }
    out += ']';
    return out;
  };
  return recurse(recurse, rt.root, -1);
}

/// Inverse of serialize_bracket; vertices are numbered in preorder, root = 0.
/// Whitespace between brackets is ignored.
inline RootedTree parse_bracket(const std::string& text) {
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<std::pair<int, int>> edges;
  int next_vertex = 0;
  auto recurse = [&](auto&& self) -> int {
    skip_ws();
    if (pos >= text.size() || text[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    int me = next_vertex++;
    skip_ws();
    bool first = true;
    while (pos < text.size() && text[pos] != ']') {
      if (!first) {
        if (text[pos] != ',') throw ParseError("expected ',' or ']'", pos);
        ++pos;
        skip_ws();
      }
      int child = self(self);
      edges.emplace_back(me, child);
      skip_ws();
      first = false;
    }
    if (pos >= text.size() || text[pos] != ']') throw ParseError("expected ']'", pos);
    ++pos;
    return me;
  };
  int root = recurse(recurse);
  skip_ws();
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return RootedTree{Tree::from_edges(next_vertex, edges), root};
}

}  // namespace treext
