#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "treext/branch_split.hpp"
#include "treext/canonical.hpp"
#include "treext/construct.hpp"
#include "treext/enumerate.hpp"
#include "treext/invariants.hpp"
#include "treext/spectral.hpp"
#include "treext/tree.hpp"

namespace treext {

// --------------------------------------------------------------------------
// invariant values: exact integers/rationals, or floats with tie tolerance

constexpr double kFloatTolerance = 1e-8;

struct Value {
  std::variant<BigInt, Ratio, double> v;

  static Value of(BigInt z) { return {std::move(z)}; }
  static Value of(Ratio q) {
    q.canonicalize();
    return {std::move(q)};
  }
  static Value of(double f) { return {f}; }

  /// -1 / 0 / +1; floats within kFloatTolerance compare equal.
  int compare(const Value& o) const {
    if (v.index() != o.v.index()) throw Error("comparing values of different kinds");
    if (auto* z = std::get_if<BigInt>(&v)) {
      const BigInt& w = std::get<BigInt>(o.v);
      return *z < w ? -1 : (*z == w ? 0 : 1);
    }
    if (auto* q = std::get_if<Ratio>(&v)) {
      const Ratio& w = std::get<Ratio>(o.v);
      return *q < w ? -1 : (*q == w ? 0 : 1);
    }
    double a = std::get<double>(v), b = std::get<double>(o.v);
    if (std::abs(a - b) < kFloatTolerance) return 0;
    return a < b ? -1 : 1;
  }

  std::string to_string() const {
    if (auto* z = std::get_if<BigInt>(&v)) return z->get_str();
    if (auto* q = std::get_if<Ratio>(&v)) return q->get_str();
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", std::get<double>(v));
    return buf;
  }
};

// --------------------------------------------------------------------------
// exchange-extremality (Definition of rho-exchange-extremal trees)

struct ExchangeWitness {
  int v = -1, w = -1;  // decomposition endpoints violating the condition
  std::vector<Ratio> left_values, right_values;  // branch rho values at v and w
};

struct ExchangeResult {
  bool extremal = true;
  std::optional<ExchangeWitness> witness;
};

/// Checks every decomposition [L_1..L_k] v H w [R_1..R_l]: one side must
/// carry both the larger branch count and all the larger rho values.  Empty
/// sides pass vacuously.  Branch rho values are memoized per directed edge.
inline ExchangeResult is_exchange_extremal(const Tree& t, const RhoSelector& sel) {
  int n = t.size();
  if (n <= 2) return {};
  std::vector<int> head(n + 1, 0);  // directed edge ids: head[u] + index_of(v in N(u))
  for (int u = 0; u < n; ++u) head[u + 1] = head[u] + t.degree(u);
  auto edge_id = [&](int u, int v) {
    const auto& nb = t.neighbors(u);
    return head[u] + static_cast<int>(std::lower_bound(nb.begin(), nb.end(), v) - nb.begin());
  };
  std::vector<Ratio> branch_value(head[n]);
  std::vector<char> known(head[n], 0);
  // value of the branch rooted at v when approached from u
  auto value = [&](auto&& self, int u, int v) -> Ratio {
    int id = edge_id(u, v);
    if (known[id]) return branch_value[id];
    std::vector<Ratio> child_values;
    for (int w : t.neighbors(v))
      if (w != u) child_values.push_back(self(self, v, w));
    known[id] = 1;
    return branch_value[id] = detail::rho_combine(sel, child_values);
  };

  for (int v = 0; v < n; ++v) {
    auto toward_v = bfs_parents(t, v);
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      auto toward_w = bfs_parents(t, w);
      std::vector<Ratio> left, right;
      for (int nb : t.neighbors(v))
        if (nb != toward_w[v]) left.push_back(value(value, v, nb));
      for (int nb : t.neighbors(w))
        if (nb != toward_v[w]) right.push_back(value(value, w, nb));
      if (left.empty() || right.empty()) continue;
      auto [lmin, lmax] = std::minmax_element(left.begin(), left.end());
      auto [rmin, rmax] = std::minmax_element(right.begin(), right.end());
      bool ok = (left.size() >= right.size() && *lmin >= *rmax) ||
                (left.size() <= right.size() && *lmax <= *rmin);
      if (!ok) return {false, ExchangeWitness{v, w, std::move(left), std::move(right)}};
    }
  }
  return {};
}

// --------------------------------------------------------------------------
// claim table: which construction is extremal for which invariant

enum class Direction { minimise, maximise };
enum class ExtremalConstruction { greedy, mtree };

inline const std::vector<Ratio>& rational_grid() {
  static const std::vector<Ratio> grid{Ratio(1, 4), Ratio(1, 2), Ratio(1), Ratio(2), Ratio(4)};
  return grid;
}

struct Claim {
  std::string name;         // invariant identifier ("wiener", "rf", ...)
  std::string description;  // human-readable statement
  Direction direction = Direction::minimise;
  ExtremalConstruction construction = ExtremalConstruction::greedy;
  bool unique_claimed = true;
  std::function<Value(const Tree&)> evaluate;
  std::optional<RhoSelector> companion;  // rho whose exchange-extremality backs the claim
  std::vector<std::pair<std::string, std::string>> params;
};

namespace detail {

inline Claim make_claim(std::string name, std::string description, Direction dir,
                        ExtremalConstruction ctor, bool unique,
                        std::function<Value(const Tree&)> eval,
                        std::optional<RhoSelector> companion = {},
                        std::vector<std::pair<std::string, std::string>> params = {}) {
  Claim c;
  c.name = std::move(name);
  c.description = std::move(description);
  c.direction = dir;
  c.construction = ctor;
  c.unique_claimed = unique;
  c.evaluate = std::move(eval);
  c.companion = std::move(companion);
  c.params = std::move(params);
  return c;
}

}  // namespace detail

/// Expands an invariant selector ("wiener", "rf", "rf:1/2", "steiner:3",
/// "wab:1,0", ...) into the claims of the static table.  Bare "rf"/"matching"
/// expand over the rational grid.
inline std::vector<Claim> claims_for(const std::string& text) {
  using D = Direction;
  using C = ExtremalConstruction;
  std::string name = text, args;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    name = text.substr(0, colon);
    args = text.substr(colon + 1);
  }
  std::vector<Claim> out;
  auto rho2_of = [](Ratio a, Ratio b) {
    RhoSelector s;
    s.kind = RhoKind::rho2;
    s.a = std::move(a);
    s.b = std::move(b);
    return s;
  };
  auto rho1_of = [](Ratio x) {
    RhoSelector s;
    s.kind = RhoKind::rho1;
    s.x = std::move(x);
    return s;
  };
  auto tau_of = [](Ratio x) {
    RhoSelector s;
    s.kind = RhoKind::tau;
    s.x = std::move(x);
    return s;
  };
  auto plain = [](RhoKind k) {
    RhoSelector s;
    s.kind = k;
    return s;
  };

  if (name == "wiener") {
    out.push_back(detail::make_claim(
        "wiener", "greedy tree minimises the Wiener index", D::minimise, C::greedy, true,
        [](const Tree& t) { return Value::of(wiener(t)); }, plain(RhoKind::rho0)));
  } else if (name == "harary") {
    out.push_back(detail::make_claim(
        "harary", "greedy tree maximises the Harary index", D::maximise, C::greedy, false,
        [](const Tree& t) {
          std::map<int, Ratio> f;
          for (int d = 1; d <= t.size(); ++d) f[d] = Ratio(1, d);
          return Value::of(wiener_like(t, f));
        },
        plain(RhoKind::rho0)));
  } else if (name == "wab") {
    auto comma = args.find(',');
    if (comma == std::string::npos) throw UnknownSelector("wab needs :a,b");
    Ratio a = ratio_from_string(args.substr(0, comma));
    Ratio b = ratio_from_string(args.substr(comma + 1));
    if (a < 0 || b < 0) throw NonPositiveParameter("wab weights must be >= 0");
    bool unique = a > 0 && b > 0;  // limits a->0 / b->0 admit ties
    out.push_back(detail::make_claim(
        "wab", "greedy tree minimises W_{a,b}", D::minimise, C::greedy, unique,
        [a, b](const Tree& t) { return Value::of(w_ab(t, a, b)); }, rho2_of(a, b),
        {{"a", to_string(a)}, {"b", to_string(b)}}));
  } else if (name == "steiner") {
    int r = args.empty() ? 2 : std::atoi(args.c_str());
    if (r < 1) throw ROutOfRange("steiner needs :r with r >= 1");
    out.push_back(detail::make_claim(
        "steiner", "greedy tree minimises the Steiner " + std::to_string(r) + "-Wiener index",
        D::minimise, C::greedy, r == 2,  // uniqueness only claimed at r = 2 (Wiener)
        [r](const Tree& t) { return Value::of(steiner_wiener(t, r)); }, plain(RhoKind::rho0),
        {{"r", std::to_string(r)}}));
  } else if (name == "subtrees") {
    out.push_back(detail::make_claim(
        "subtrees", "greedy tree maximises the number of subtrees", D::maximise, C::greedy, true,
        [](const Tree& t) { return Value::of(subtree_count(t)); }, plain(RhoKind::eta)));
  } else if (name == "rf") {
    std::vector<Ratio> xs = args.empty() ? rational_grid()
                                         : std::vector<Ratio>{ratio_from_string(args)};
    for (const Ratio& x : xs) {
      if (x <= 0) throw NonPositiveParameter("rf needs x > 0");
      out.push_back(detail::make_claim(
          "rf", "greedy tree minimises the marked-spanning-forest polynomial rf(.,x)",
          D::minimise, C::greedy, true,
          [x](const Tree& t) { return Value::of(rsf_poly(t).eval(x)); }, rho1_of(x),
          {{"x", to_string(x)}}));
    }
  } else if (name == "hosoya") {
    out.push_back(detail::make_claim(
        "hosoya", "M-tree minimises the Hosoya index", D::minimise, C::mtree, true,
        [](const Tree& t) { return Value::of(hosoya(t)); }, plain(RhoKind::rho3)));
  } else if (name == "matching") {
    std::vector<Ratio> xs = args.empty() ? rational_grid()
                                         : std::vector<Ratio>{ratio_from_string(args)};
    for (const Ratio& x : xs) {
      if (x <= 0) throw NonPositiveParameter("matching needs x > 0");
      out.push_back(detail::make_claim(
          "matching", "M-tree minimises the matching generating polynomial M(.,x)",
          D::minimise, C::mtree, true,
          [x](const Tree& t) { return Value::of(matching_poly(t).eval(x)); }, tau_of(x),
          {{"x", to_string(x)}}));
    }
  } else if (name == "ms") {
    out.push_back(detail::make_claim(
        "ms", "M-tree maximises the Merrifield-Simmons index", D::maximise, C::mtree, true,
        [](const Tree& t) { return Value::of(independence_count(t)); }, plain(RhoKind::rho4)));
  } else if (name == "solvability") {
    out.push_back(detail::make_claim(
        "solvability", "M-tree minimises the solvability", D::minimise, C::mtree, true,
        [](const Tree& t) { return Value::of(solvability({t, 0}).s); }, plain(RhoKind::rho5)));
  } else if (name == "energy") {
    out.push_back(detail::make_claim(
        "energy", "M-tree minimises the graph energy", D::minimise, C::mtree, false,
        [](const Tree& t) { return Value::of(energy(t)); }));
  } else if (name == "lel") {
    out.push_back(detail::make_claim(
        "lel", "greedy tree minimises the Laplacian-energy-like invariant", D::minimise,
        C::greedy, false, [](const Tree& t) { return Value::of(lel(t)); }));
  } else {
    throw UnknownSelector("unknown invariant '" + name + "'");
  }
  return out;
}

/// The whole battery, as run by batch verification.
inline std::vector<Claim> all_claims() {
  std::vector<Claim> out;
  for (const char* name :
       {"wiener", "harary", "wab:1,1", "wab:2,3", "wab:1,0", "wab:0,1", "steiner:2", "steiner:3",
        "steiner:4", "subtrees", "rf", "hosoya", "matching", "ms", "solvability", "energy", "lel"})
    for (Claim& c : claims_for(name)) out.push_back(std::move(c));
  return out;
}

// --------------------------------------------------------------------------
// verification reports

struct VerificationReport {
  std::string claim;
  std::string description;
  std::string degree_sequence;
  bool majorised = false;
  long class_size = 0;
  std::string optimum;
  bool attained = false;
  bool unique = false;
  bool unique_claimed = false;
  std::vector<std::string> witnesses;  // canonical codes of co-optimal trees
  std::vector<std::pair<std::string, std::string>> params;
  long runtime_ms = 0;

  /// Attainment, and uniqueness where the claim asserts it.
  bool passed() const { return attained && (!unique_claimed || unique); }
};

namespace detail {

template <typename F>
void parallel_for(int jobs, int count, F&& body) {
  if (jobs <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) body(i);
    return;
  }
  std::vector<std::thread> workers;
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int w = 0; w < jobs; ++w)
    workers.emplace_back([&, w] {
      try {
        for (int i = w; i < count; i += jobs) body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : workers) t.join();
  if (error) std::rethrow_exception(error);
}

inline VerificationReport run_claim(const Claim& claim, const DegreeSequence& d, bool majorised,
                                    int bound, int jobs) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = claim.name;
  report.description = claim.description;
  report.degree_sequence = d.to_string();
  report.majorised = majorised;
  report.params = claim.params;
  report.unique_claimed = majorised ? false : claim.unique_claimed;

  std::vector<Tree> classes =
      majorised ? trees_majorised_by(d, bound) : trees_with_degrees(d, bound);
  report.class_size = static_cast<long>(classes.size());
  Tree constructed = claim.construction == ExtremalConstruction::greedy ? greedy_tree(d)
                                                                        : m_tree(d);
  std::string constructed_code = canonical_code(constructed);

  std::vector<Value> values(classes.size());
  parallel_for(jobs, static_cast<int>(classes.size()),
               [&](int i) { values[i] = claim.evaluate(classes[i]); });

  int best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    int cmp = values[i].compare(values[best]);
    if ((claim.direction == Direction::minimise && cmp < 0) ||
        (claim.direction == Direction::maximise && cmp > 0))
      best = static_cast<int>(i);
  }
  report.optimum = values[best].to_string();
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (values[i].compare(values[best]) == 0)
      report.witnesses.push_back(canonical_code(classes[i]));
  std::sort(report.witnesses.begin(), report.witnesses.end());
  report.attained = std::binary_search(report.witnesses.begin(), report.witnesses.end(),
                                       constructed_code);
  report.unique = report.witnesses.size() == 1;
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace detail

/// Enumerates the isomorphism classes with degree sequence D and checks that
/// the claim's construction attains the optimum (uniquely where claimed).
inline VerificationReport verify_extremality(const DegreeSequence& d, const Claim& claim,
                                             int bound = default_enum_bound(), int jobs = 1) {
  return detail::run_claim(claim, d, false, bound, jobs);
}

/// Same over the majorised class T_< B; attainment only (ties permitted).
inline VerificationReport verify_majorised(const DegreeSequence& b, const Claim& claim,
                                           int bound = default_enum_bound(), int jobs = 1) {
  return detail::run_claim(claim, b, true, bound, jobs);
}

/// Coefficientwise dominance side-report for polynomial claims: true when the
/// constructed tree's polynomial is dominated by every class member's.
inline bool coefficientwise_dominated(const DegreeSequence& d, bool use_matching_poly,
                                      int bound = default_enum_bound()) {
  Tree constructed = use_matching_poly ? m_tree(d) : greedy_tree(d);
  IntPolynomial base = use_matching_poly ? matching_poly(constructed) : rsf_poly(constructed);
  for (const Tree& t : trees_with_degrees(d, bound)) {
    IntPolynomial p = use_matching_poly ? matching_poly(t) : rsf_poly(t);
    int top = std::max(p.degree(), base.degree());
    for (int k = 0; k <= top; ++k)
      if (p.coeff(k) < base.coeff(k)) return false;
  }
  return true;
}

// --------------------------------------------------------------------------
// identity cross-checks (independent brute-force routes)

inline BigInt bfs_distance_sum(const Tree& t) {
  BigInt total(0);
  for (int v = 0; v < t.size(); ++v)
    for (int d : bfs_distances(t, v))
      if (d > 0) total += d;
  return total / 2;
}

/// Definition-side Steiner Wiener: sum over r-subsets of the edge count of the
/// minimal connecting subtree.
inline BigInt steiner_bruteforce(const Tree& t, int r) {
  int n = t.size();
  if (r < 1 || r > n) throw ROutOfRange("steiner r out of range");
  auto view = detail::rooted_view(t, 0);
  BigInt total(0);
  std::vector<int> subset;
  auto recurse = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == r) {
      std::vector<char> chosen(n, 0);
      for (int v : subset) chosen[v] = 1;
      // count vertices below each edge, in the rooted orientation
      std::vector<int> below(n, 0);
      for (int v = 0; v < n; ++v) below[v] = chosen[v];
      for (auto it = view.order.rbegin(); it != view.order.rend(); ++it)
        if (view.parent[*it] >= 0) below[view.parent[*it]] += below[*it];
      int edges = 0;
      for (int v : view.order)
        if (view.parent[v] >= 0 && below[v] > 0 && below[v] < r) ++edges;
      total += edges;
      return;
    }
    for (int v = from; v < n; ++v) {
      subset.push_back(v);
      self(self, v + 1);
      subset.pop_back();
    }
  };
  recurse(recurse, 0);
  return total;
}

/// Kel'mans sum over explicit spanning forests: delete each edge subset, and
/// weight the resulting forest by the product of its component sizes.
inline IntPolynomial kelmans_bruteforce(const Tree& t) {
  int n = t.size();
  auto all_edges = t.edges();
  int m = static_cast<int>(all_edges.size());
  std::vector<BigInt> coeff(n + 1, BigInt(0));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    // union-find over the kept edges
    std::vector<int> parent(n);
    for (int v = 0; v < n; ++v) parent[v] = v;
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (int e = 0; e < m; ++e)
      if (!(mask >> e & 1)) parent[find(all_edges[e].first)] = find(all_edges[e].second);
    std::vector<int> size(n, 0);
    int components = 0;
    for (int v = 0; v < n; ++v) {
      if (find(v) == v) ++components;
      ++size[find(v)];
    }
    BigInt gamma(1);
    for (int v = 0; v < n; ++v)
      if (find(v) == v) gamma *= size[v];
    coeff[components] += gamma;
  }
  return IntPolynomial(std::move(coeff));
}

inline IntPolynomial matching_bruteforce(const Tree& t) {
  auto all_edges = t.edges();
  int m = static_cast<int>(all_edges.size());
  std::vector<BigInt> coeff(m + 1, BigInt(0));
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<char> covered(t.size(), 0);
    bool ok = true;
    int picked = 0;
    for (int e = 0; e < m && ok; ++e)
      if (mask >> e & 1) {
        auto [u, v] = all_edges[e];
        if (covered[u] || covered[v]) ok = false;
        covered[u] = covered[v] = 1;
        ++picked;
      }
    if (ok) coeff[picked] += 1;
  }
  return IntPolynomial(std::move(coeff));
}

inline BigInt independence_bruteforce(const Tree& t) {
  int n = t.size();
  BigInt count(0);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : t.edges())
      if ((mask >> u & 1) && (mask >> v & 1)) ok = false;
    if (ok) count += 1;
  }
  return count;
}

inline BigInt subtree_bruteforce(const Tree& t) {
  int n = t.size();
  BigInt count(0);
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    int start = -1, members = 0;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) {
        start = v;
        ++members;
      }
    std::vector<int> stack{start};
    std::uint32_t seen = 1u << start;
    int reached = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : t.neighbors(v))
        if ((mask >> w & 1) && !(seen >> w & 1)) {
          seen |= 1u << w;
          ++reached;
          stack.push_back(w);
        }
    }
    if (reached == members) count += 1;
  }
  return count;
}

/// Test hooks: cross_check_identities re-checks whatever implementation is
/// plugged in here, so a corrupted one must surface a counterexample.
struct CrossCheckHooks {
  std::function<IntPolynomial(const Tree&)> rsf = [](const Tree& t) { return rsf_poly(t); };
};

/// Runs every identity of the invariants module over all trees with up to
/// n_max vertices (identity-specific caps apply) and reports the first
/// counterexample per identity.
inline VerificationReport cross_check_identities(int n_max, const CrossCheckHooks& hooks = {}) {
  auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.claim = "identities";
  report.description = "identity cross-checks over all trees";
  report.degree_sequence = "n<=" + std::to_string(n_max);
  long checked = 0;
  std::vector<std::string> failures;

  auto fail = [&](const std::string& identity, const Tree& t) {
    failures.push_back(identity + " at " + canonical_code(t));
  };
  auto done = [&](const std::string& identity) {
    for (const std::string& f : failures)
      if (f.rfind(identity + " at", 0) == 0) return true;
    return false;
  };

  for (int n = 1; n <= n_max; ++n) {
    std::vector<Tree> trees = all_trees(n);
    checked += static_cast<long>(trees.size());
    for (const Tree& t : trees) {
      IntPolynomial rf = hooks.rsf(t);

      // Wiener edge-split formula vs direct BFS distance sum
      if (!done("wiener-vs-bfs") && wiener(t) != bfs_distance_sum(t)) fail("wiener-vs-bfs", t);

      // Steiner: binomial formula vs subset enumeration
      if (n <= 9 && !done("steiner-vs-brute"))
        for (int r = 1; r <= std::min(5, n); ++r)
          if (steiner_wiener(t, r) != steiner_bruteforce(t, r)) {
            fail("steiner-vs-brute", t);
            break;
          }

      // c_k(T) = m(S(T), n-k): rf reversed equals the subdivision matching poly
      if (!done("rsf-vs-subdivision-matching")) {
        IntPolynomial sub_matching = matching_poly(subdivision(t));
        bool ok = rf.degree() == n;
        for (int k = 0; ok && k <= n; ++k)
          if (rf.coeff(k) != sub_matching.coeff(n - k)) ok = false;
        if (!ok) fail("rsf-vs-subdivision-matching", t);
      }

      // rf(T,x) = det(L+xI) = (-1)^n Lambda(T,-x)
      if (n <= 12 && !done("rsf-vs-laplacian-charpoly")) {
        IntPolynomial adjusted = laplacian_charpoly_oracle(t).substitute_neg_x();
        if (n % 2 == 1) adjusted = adjusted * BigInt(-1);
        if (rf != adjusted) fail("rsf-vs-laplacian-charpoly", t);
      }

      // Kel'mans forest sum
      if (!done("rsf-vs-kelmans") && rf != kelmans_bruteforce(t)) fail("rsf-vs-kelmans", t);

      // matching / independence / subtree counts vs subset enumeration
      if (!done("matching-vs-brute") && matching_poly(t) != matching_bruteforce(t))
        fail("matching-vs-brute", t);
      if (!done("independence-vs-brute") && independence_count(t) != independence_bruteforce(t))
        fail("independence-vs-brute", t);
      if (!done("subtrees-vs-brute") && subtree_count(t) != subtree_bruteforce(t))
        fail("subtrees-vs-brute", t);

      // solvability: recursion vs GF(2) rank sum, root independence of s
      if (n <= 9 && !done("solvability-vs-gf2")) {
        BigInt brute = solvability_bruteforce(t);
        bool ok = true;
        for (int root = 0; root < n && ok; ++root)
          if (solvability({t, root}).s != brute) ok = false;
        if (!ok) fail("solvability-vs-gf2", t);
      }

      // rho recurrences vs their ratio-of-counts definitions (all roots)
      if (!done("rho-vs-ratio")) {
        bool ok = true;
        for (int root = 0; root < n && ok; ++root) {
          RootedTree rt{t, root};
          BigInt z = hosoya(t);
          if (rho(rt, RhoSelector::parse("rho3")) != Ratio(m0_poly(rt).eval(BigInt(1))) / Ratio(z))
            ok = false;
          if (rho(rt, RhoSelector::parse("rho4")) !=
              Ratio(independence_count(t)) / Ratio(sigma0(rt)))
            ok = false;
          auto sp = solvability(rt);
          if (rho(rt, RhoSelector::parse("rho5")) != Ratio(sp.s) / Ratio(sp.t)) ok = false;
          if (rho(rt, RhoSelector::parse("eta")) != Ratio(eta_root(rt))) ok = false;
          if (rho(rt, RhoSelector::parse("rho0")) != Ratio(n)) ok = false;
          auto [rfp, fp] = rsf_pair(rt);
          for (const Ratio& x : rational_grid()) {
            RhoSelector r1;
            r1.kind = RhoKind::rho1;
            r1.x = x;
            if (rho(rt, r1) != rfp.eval(x) / (rfp.eval(x) + fp.eval(x))) ok = false;
            RhoSelector tx;
            tx.kind = RhoKind::tau;
            tx.x = x;
            if (rho(rt, tx) != Ratio(m0_poly(rt).eval(x)) / Ratio(matching_poly(t).eval(x)))
              ok = false;
          }
        }
        if (!ok) fail("rho-vs-ratio", t);
      }

      // base-case bounds for n >= 2, over all roots
      if (n >= 2 && !done("rho-base-bounds")) {
        bool ok = true;
        for (int root = 0; root < n && ok; ++root) {
          RootedTree rt{t, root};
          if (!(rho(rt, RhoSelector::parse("rho3")) < 1)) ok = false;
          if (!(rho(rt, RhoSelector::parse("rho4")) < 2)) ok = false;
          Ratio r5 = rho(rt, RhoSelector::parse("rho5"));
          if (!(Ratio(1) < r5 && r5 < Ratio(3, 2))) ok = false;
          for (const Ratio& x : rational_grid()) {
            RhoSelector r1;
            r1.kind = RhoKind::rho1;
            r1.x = x;
            if (!(rho(rt, r1) > x / (1 + x))) ok = false;
          }
        }
        if (!ok) fail("rho-base-bounds", t);
      }

      // Lel(T) = IE(T) = En(S(T)) / 2
      if (!done("lel-vs-half-subdivision-energy") &&
          std::abs(lel(t) - 0.5 * energy(subdivision(t))) >= kFloatTolerance)
        fail("lel-vs-half-subdivision-energy", t);
      if (!done("ie-vs-lel") && std::abs(incidence_energy(t) - lel(t)) >= kFloatTolerance)
        fail("ie-vs-lel", t);
    }
  }

  report.class_size = checked;
  report.attained = failures.empty();
  report.unique = failures.empty();
  report.witnesses = failures;
  report.optimum = failures.empty() ? "all identities hold" : "counterexample found";
  report.unique_claimed = false;
  report.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace treext
