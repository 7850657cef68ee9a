#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "treext/errors.hpp"
#include "treext/numbers.hpp"
#include "treext/polynomial.hpp"
#include "treext/tree.hpp"

namespace treext {

namespace detail {

struct RootedView {
  std::vector<int> order;   // preorder; reverse for bottom-up passes
  std::vector<int> parent;  // -1 at the root
};

inline RootedView rooted_view(const Tree& t, int root) {
  RootedView view;
  view.parent.assign(t.size(), -2);
  view.order.reserve(t.size());
  view.order.push_back(root);
  view.parent[root] = -1;
  for (std::size_t i = 0; i < view.order.size(); ++i)
    for (int w : t.neighbors(view.order[i]))
      if (view.parent[w] == -2) {
        view.parent[w] = view.order[i];
        view.order.push_back(w);
      }
  return view;
}

/// Subtree sizes in the orientation rooted at `view`'s root.
inline std::vector<int> subtree_sizes(const Tree& t, const RootedView& view) {
  std::vector<int> size(t.size(), 1);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it)
    if (view.parent[*it] >= 0) size[view.parent[*it]] += size[*it];
  return size;
}

}  // namespace detail

// --------------------------------------------------------------------------
// distance-based invariants

/// Wiener index through the edge-split formula W = sum over edges of
/// |T_u| * |T_v|.
inline BigInt wiener(const Tree& t) {
  auto view = detail::rooted_view(t, 0);
  auto size = detail::subtree_sizes(t, view);
  BigInt total(0);
  for (int v : view.order)
    if (view.parent[v] >= 0) total += BigInt(size[v]) * BigInt(t.size() - size[v]);
  return total;
}

/// dist_counts[d] = number of unordered vertex pairs at distance d (d >= 1).
inline std::vector<BigInt> distance_distribution(const Tree& t) {
  std::vector<BigInt> counts(t.size(), BigInt(0));
  for (int v = 0; v < t.size(); ++v)
    for (int d : bfs_distances(t, v))
      if (d > 0) counts[d] += 1;
  for (auto& c : counts) c /= 2;
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

/// W_f = sum over pairs of f(dist); f must cover 1..diameter.
inline Ratio wiener_like(const Tree& t, const std::map<int, Ratio>& f) {
  Ratio total(0);
  auto counts = distance_distribution(t);
  for (int d = 1; d < static_cast<int>(counts.size()); ++d) {
    if (counts[d] == 0) continue;
    auto it = f.find(d);
    if (it == f.end())
      throw MissingDistanceValue("f has no value at distance " + std::to_string(d));
    total += it->second * Ratio(counts[d]);
  }
  return total;
}

/// W_{a,b}: pair distances weighted by a per leaf and b per internal vertex.
/// Computed as sum over edges of rho2(T_u) * rho2(T_v), where the component
/// root only counts as a leaf when it is the only vertex.
inline Ratio w_ab(const Tree& t, const Ratio& a, const Ratio& b) {
  if (a < 0 || b < 0) throw NonPositiveParameter("w_ab weights must be >= 0");
  auto view = detail::rooted_view(t, 0);
  auto size = detail::subtree_sizes(t, view);
  int n = t.size();
  std::vector<int> leaves_below(n, 0);
  int total_leaves = 0;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) {
      leaves_below[v] = 1;
      ++total_leaves;
    }
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it)
    if (view.parent[*it] >= 0) leaves_below[view.parent[*it]] += leaves_below[*it];

  auto side_weight = [&](int vertices, int leaves) -> Ratio {
    if (vertices == 1) return a;
    return a * Ratio(leaves) + b * Ratio(vertices - leaves);
  };
  Ratio total(0);
  for (int v : view.order) {
    if (view.parent[v] < 0) continue;
    int s = size[v], lb = leaves_below[v];
    // the child-side root v and parent-side root are never counted as leaves
    // unless alone; a non-singleton side root has degree >= 2 in T already
    total += side_weight(s, s == 1 ? 0 : lb) *
             side_weight(n - s, n - s == 1 ? 0 : total_leaves - lb);
  }
  return total;
}

/// Steiner r-Wiener index via SW_r = sum over edges of
/// C(n,r) - C(|T_u|,r) - C(|T_v|,r).
inline BigInt steiner_wiener(const Tree& t, int r) {
  int n = t.size();
  if (r < 1 || r > n)
    throw ROutOfRange("steiner r = " + std::to_string(r) + " outside 1.." + std::to_string(n));
  auto view = detail::rooted_view(t, 0);
  auto size = detail::subtree_sizes(t, view);
  BigInt total(0), whole = binomial(n, r);
  for (int v : view.order)
    if (view.parent[v] >= 0) total += whole - binomial(size[v], r) - binomial(n - size[v], r);
  return total;
}

// --------------------------------------------------------------------------
// subtree counts

/// Number of subtrees containing the root: eta = prod (1 + eta(branch)).
inline BigInt eta_root(const RootedTree& rt) {
  auto view = detail::rooted_view(rt.tree, rt.root);
  std::vector<BigInt> eta(rt.tree.size(), BigInt(1));
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it)
    if (view.parent[*it] >= 0) eta[view.parent[*it]] *= 1 + eta[*it];
  return eta[rt.root];
}

/// Total number of (connected, induced) subtrees.
inline BigInt subtree_count(const Tree& t) {
  auto view = detail::rooted_view(t, 0);
  std::vector<BigInt> eta(t.size(), BigInt(1));
  BigInt total(0);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    if (view.parent[*it] >= 0) eta[view.parent[*it]] *= 1 + eta[*it];
    total += eta[*it];  // subtrees whose vertex nearest the root is *it
  }
  return total;
}

// --------------------------------------------------------------------------
// matchings and independent sets

namespace detail {

struct MatchingPair {
  IntPolynomial all;       // matching generating polynomial of the subtree
  IntPolynomial root_free; // matchings that do not cover the subtree root
};

inline MatchingPair matching_pair(const RootedTree& rt) {
  auto view = rooted_view(rt.tree, rt.root);
  int n = rt.tree.size();
  std::vector<IntPolynomial> all(n, IntPolynomial{1}), root_free(n, IntPolynomial{1});
  const IntPolynomial x = IntPolynomial::x();
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    int v = *it;
    std::vector<int> children;
    for (int w : rt.tree.neighbors(v))
      if (w != view.parent[v]) children.push_back(w);
    IntPolynomial free_prod{1};
    for (int c : children) free_prod *= all[c];
    IntPolynomial covered;  // v matched into one child's subtree
    for (int c : children) {
      IntPolynomial term = x * root_free[c];
      for (int c2 : children)
        if (c2 != c) term *= all[c2];
      covered += term;
    }
    root_free[v] = free_prod;
    all[v] = free_prod + covered;
  }
  return {all[rt.root], root_free[rt.root]};
}

}  // namespace detail

/// M(T,x): coefficient of x^k counts the k-matchings.
inline IntPolynomial matching_poly(const Tree& t) {
  return detail::matching_pair({t, 0}).all;
}

/// M_0(T,x): matchings that do not cover the root.
inline IntPolynomial m0_poly(const RootedTree& rt) { return detail::matching_pair(rt).root_free; }

/// Hosoya index z(T) = M(T,1).
inline BigInt hosoya(const Tree& t) { return matching_poly(t).eval(BigInt(1)); }

namespace detail {

struct IndependencePair {
  BigInt total;      // sigma
  BigInt root_free;  // sigma_0
};

inline IndependencePair independence_pair(const RootedTree& rt) {
  auto view = rooted_view(rt.tree, rt.root);
  int n = rt.tree.size();
  std::vector<BigInt> without(n, BigInt(1)), with(n, BigInt(1));
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    int v = *it;
    for (int w : rt.tree.neighbors(v))
      if (w != view.parent[v]) {
        without[v] *= without[w] + with[w];
        with[v] *= without[w];
      }
  }
  return {without[rt.root] + with[rt.root], without[rt.root]};
}

}  // namespace detail

/// Merrifield-Simmons index: number of independent vertex subsets.
inline BigInt independence_count(const Tree& t) {
  return detail::independence_pair({t, 0}).total;
}

/// Independent subsets avoiding the root.
inline BigInt sigma0(const RootedTree& rt) { return detail::independence_pair(rt).root_free; }

// --------------------------------------------------------------------------
// marked spanning forests

namespace detail {

struct ForestPair {
  IntPolynomial rf;  // marked spanning forests, weight x^(#components)
  IntPolynomial f;   // all components marked except the root's
};

inline ForestPair forest_pair(const RootedTree& rt) {
  auto view = rooted_view(rt.tree, rt.root);
  int n = rt.tree.size();
  std::vector<IntPolynomial> rf(n), f(n);
  const IntPolynomial x = IntPolynomial::x();
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    int v = *it;
    std::vector<int> children;
    for (int w : rt.tree.neighbors(v))
      if (w != view.parent[v]) children.push_back(w);
    IntPolynomial prod{1};
    for (int c : children) prod *= rf[c] + f[c];
    IntPolynomial marked_below;  // root's component marked in one child branch
    for (int c : children) {
      IntPolynomial term = rf[c];
      for (int c2 : children)
        if (c2 != c) term *= rf[c2] + f[c2];
      marked_below += term;
    }
    f[v] = prod;
    rf[v] = x * prod + marked_below;
  }
  return {rf[rt.root], f[rt.root]};
}

}  // namespace detail

/// rf(T,x) = sum_k c_k(T) x^k = det(L(T) + x I): c_k counts marked spanning
/// forests with k components.  Root-independent.
inline IntPolynomial rsf_poly(const Tree& t) { return detail::forest_pair({t, 0}).rf; }

/// Auxiliary (rf, f) pair for a rooted tree; rho1 = rf / (rf + f).
inline std::pair<IntPolynomial, IntPolynomial> rsf_pair(const RootedTree& rt) {
  auto p = detail::forest_pair(rt);
  return {p.rf, p.f};
}

/// Characteristic polynomial det(xI - L) of the Laplacian L = D - A, computed
/// by fraction-free Bareiss elimination over the integer polynomial ring.
inline IntPolynomial laplacian_charpoly_oracle(const Tree& t, int bound = 12) {
  int n = t.size();
  if (n > bound)
    throw OracleSizeExceeded("laplacian oracle limited to n <= " + std::to_string(bound));
  std::vector<std::vector<IntPolynomial>> m(n, std::vector<IntPolynomial>(n));
  for (int i = 0; i < n; ++i) {
    m[i][i] = IntPolynomial{-t.degree(i), 1};  // x - deg(i)
    for (int j : t.neighbors(i)) m[i][j] = IntPolynomial{1};
  }
  IntPolynomial prev{1};
  for (int k = 0; k + 1 < n; ++k) {
    // pivots are monic leading principal minors of xI - L, never zero
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = IntPolynomial::exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return m[n - 1][n - 1];
}

// --------------------------------------------------------------------------
// solvability

struct SolvabilityPair {
  BigInt s;
  BigInt t;
};

/// (s,t) recursion: s = 8 prod s_i - 5 prod t_i, t = 8 prod s_i - 6 prod t_i,
/// with s(.) = 3 and t(.) = 2.  s is independent of the root.
inline SolvabilityPair solvability(const RootedTree& rt) {
  auto view = detail::rooted_view(rt.tree, rt.root);
  int n = rt.tree.size();
  std::vector<BigInt> s(n), t(n);
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    int v = *it;
    BigInt ps(1), pt(1);
    for (int w : rt.tree.neighbors(v))
      if (w != view.parent[v]) {
        ps *= s[w];
        pt *= t[w];
      }
    s[v] = 8 * ps - 5 * pt;
    t[v] = 8 * ps - 6 * pt;
  }
  return {s[rt.root], t[rt.root]};
}

/// Number of solvable pairs (a,b) of (A + diag(a))x = b over GF(2), by direct
/// rank enumeration: sum over a of 2^rank(A + diag(a)).
inline BigInt solvability_bruteforce(const Tree& t, int bound = 12) {
  int n = t.size();
  if (n > bound)
    throw OracleSizeExceeded("GF(2) oracle limited to n <= " + std::to_string(bound));
  std::vector<std::uint64_t> adjacency(n, 0);
  for (auto [u, v] : t.edges()) {
    adjacency[u] |= 1ull << v;
    adjacency[v] |= 1ull << u;
  }
  BigInt total(0);
  for (std::uint64_t a = 0; a < (1ull << n); ++a) {
    std::vector<std::uint64_t> rows = adjacency;
    for (int i = 0; i < n; ++i)
      if (a >> i & 1) rows[i] ^= 1ull << i;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
      int pivot = -1;
      for (int r = rank; r < n; ++r)
        if (rows[r] >> col & 1) {
          pivot = r;
          break;
        }
      if (pivot < 0) continue;
      std::swap(rows[rank], rows[pivot]);
      for (int r = 0; r < n; ++r)
        if (r != rank && (rows[r] >> col & 1)) rows[r] ^= rows[rank];
      ++rank;
    }
    total += BigInt(1) << rank;
  }
  return total;
}

// --------------------------------------------------------------------------
// rho functionals

enum class RhoKind { rho0, rho1, rho2, rho3, tau, rho4, rho5, eta };

struct RhoSelector {
  RhoKind kind = RhoKind::rho0;
  Ratio x = 1;  // rho1, tau
  Ratio a = 1;  // rho2
  Ratio b = 1;

  /// "rho0" | "rho1:x" | "rho2:a,b" | "rho3" | "tau:x" | "rho4" | "rho5" | "eta"
  static RhoSelector parse(const std::string& text) {
    RhoSelector sel;
    std::string name = text, args;
    if (auto colon = text.find(':'); colon != std::string::npos) {
      name = text.substr(0, colon);
      args = text.substr(colon + 1);
    }
    if (name == "rho0") sel.kind = RhoKind::rho0;
    else if (name == "rho1") sel.kind = RhoKind::rho1;
    else if (name == "rho2") sel.kind = RhoKind::rho2;
    else if (name == "rho3") sel.kind = RhoKind::rho3;
    else if (name == "tau") sel.kind = RhoKind::tau;
    else if (name == "rho4") sel.kind = RhoKind::rho4;
    else if (name == "rho5") sel.kind = RhoKind::rho5;
    else if (name == "eta") sel.kind = RhoKind::eta;
    else throw UnknownSelector("unknown rho selector '" + name + "'");
    if (sel.kind == RhoKind::rho1 || sel.kind == RhoKind::tau) {
      if (args.empty()) throw UnknownSelector("selector '" + name + "' needs :x");
      sel.x = ratio_from_string(args);
      if (sel.x <= 0) throw NonPositiveParameter("x must be positive");
    } else if (sel.kind == RhoKind::rho2) {
      auto comma = args.find(',');
      if (comma == std::string::npos)
        throw UnknownSelector("rho2 needs :a,b");
      sel.a = ratio_from_string(args.substr(0, comma));
      sel.b = ratio_from_string(args.substr(comma + 1));
      if (sel.a < 0 || sel.b < 0) throw NonPositiveParameter("a,b must be >= 0");
    } else if (!args.empty()) {
      throw UnknownSelector("selector '" + name + "' takes no parameters");
    }
    return sel;
  }

  std::string to_string() const {
    switch (kind) {
      case RhoKind::rho0: return "rho0";
      case RhoKind::rho1: return "rho1:" + treext::to_string(x);
      case RhoKind::rho2: return "rho2:" + treext::to_string(a) + "," + treext::to_string(b);
      case RhoKind::rho3: return "rho3";
      case RhoKind::tau: return "tau:" + treext::to_string(x);
      case RhoKind::rho4: return "rho4";
      case RhoKind::rho5: return "rho5";
      case RhoKind::eta: return "eta";
    }
    return "?";
  }
};

namespace detail {

/// Applies the recurrence rule of `sel` to the branch values.
inline Ratio rho_combine(const RhoSelector& sel, const std::vector<Ratio>& child_values) {
  switch (sel.kind) {
    case RhoKind::rho0: {
      Ratio s(1);
      for (const Ratio& v : child_values) s += v;
      return s;
    }
    case RhoKind::rho1: {
      Ratio s = sel.x;
      for (const Ratio& v : child_values) s += v;
      return s / (1 + s);
    }
    case RhoKind::rho2: {
      if (child_values.empty()) return sel.a;
      Ratio s = sel.b;
      for (const Ratio& v : child_values) s += v;
      return s;
    }
    case RhoKind::rho3: {
      Ratio s(1);
      for (const Ratio& v : child_values) s += v;
      return Ratio(1) / s;
    }
    case RhoKind::tau: {
      Ratio s(0);
      for (const Ratio& v : child_values) s += v;
      return Ratio(1) / (1 + sel.x * s);
    }
    case RhoKind::rho4: {
      Ratio p(1);
      for (const Ratio& v : child_values) p *= v;
      return 1 + Ratio(1) / p;
    }
    case RhoKind::rho5: {
      Ratio p(1);
      for (const Ratio& v : child_values) p *= v;
      return (8 * p - 5) / (8 * p - 6);
    }
    case RhoKind::eta: {
      Ratio p(1);
      for (const Ratio& v : child_values) p *= 1 + v;
      return p;
    }
  }
  throw UnknownSelector("bad rho kind");
}

}  // namespace detail

/// Exact bottom-up evaluation of the selected rho functional.
inline Ratio rho(const RootedTree& rt, const RhoSelector& sel) {
  auto view = detail::rooted_view(rt.tree, rt.root);
  std::vector<Ratio> value(rt.tree.size());
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    int v = *it;
    std::vector<Ratio> child_values;
    for (int w : rt.tree.neighbors(v))
      if (w != view.parent[v]) child_values.push_back(value[w]);
    value[v] = detail::rho_combine(sel, child_values);
  }
  return value[rt.root];
}

}  // namespace treext
