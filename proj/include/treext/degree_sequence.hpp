#pragma once

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "treext/errors.hpp"

namespace treext {

/// Validated degree sequence of a tree: non-increasing, every entry >= 1,
/// sum = 2(n-1).  The single-vertex sequence (0) is admitted as a special case.
class DegreeSequence {
 public:
  static DegreeSequence validate(std::vector<int> raw) {
    if (raw.empty()) throw RejectsEmpty("degree sequence must be non-empty");
    std::sort(raw.begin(), raw.end(), std::greater<int>());
    long n = static_cast<long>(raw.size());
    long sum = std::accumulate(raw.begin(), raw.end(), 0L);
    if (n == 1) {
      if (raw[0] != 0)
        throw RejectsNonTree("single-vertex sequence must be (0), got sum " +
                             std::to_string(sum));
      return DegreeSequence(std::move(raw));
    }
    for (int d : raw)
      if (d < 1) throw RejectsNonTree("entry " + std::to_string(d) + " < 1");
    if (sum != 2 * (n - 1))
      throw RejectsNonTree("degree sum " + std::to_string(sum) + " != 2(n-1) = " +
                           std::to_string(2 * (n - 1)));
    return DegreeSequence(std::move(raw));
  }

  /// Comma-separated integers, order-insensitive ("4,4,3,3,1,1").
  static DegreeSequence parse_csv(const std::string& text) {
    std::vector<int> raw;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
        if (used != item.size()) throw std::invalid_argument(item);
        raw.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("invalid degree entry '" + item + "'", 0);
      }
    }
    return validate(std::move(raw));
  }

  const std::vector<int>& degrees() const { return degrees_; }
  int size() const { return static_cast<int>(degrees_.size()); }
  int operator[](int i) const { return degrees_[i]; }

  bool operator==(const DegreeSequence& other) const = default;
  bool operator<(const DegreeSequence& other) const { return degrees_ < other.degrees_; }

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(degrees_[i]);
    }
    return out;
  }

 private:
  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {}
  std::vector<int> degrees_;
};

/// The entries >= 2 of a degree sequence plus the leaf count; the two
/// determine each other through the handshake identity |L| = 2 - 2t + sum d_i.
struct ReducedDegreeSequence {
  std::vector<int> internal_degrees;  // non-increasing, each >= 2
  int leaf_count = 0;

  DegreeSequence expand() const {
    std::vector<int> raw = internal_degrees;
    if (raw.empty() && leaf_count == 0) raw.push_back(0);  // single vertex
    raw.insert(raw.end(), leaf_count, 1);
    return DegreeSequence::validate(std::move(raw));
  }
};

inline ReducedDegreeSequence reduce(const DegreeSequence& d) {
  ReducedDegreeSequence out;
  for (int v : d.degrees()) {
    if (v >= 2)
      out.internal_degrees.push_back(v);
    else if (v == 1)
      ++out.leaf_count;
  }
  return out;
}

/// A majorises B: equal sums and every prefix sum of A >= that of B.
inline bool majorises(const DegreeSequence& a, const DegreeSequence& b) {
  if (a.size() != b.size())
    throw LengthMismatch("majorisation needs equal lengths, got " +
                         std::to_string(a.size()) + " and " + std::to_string(b.size()));
  long pa = 0, pb = 0;
  for (int i = 0; i < a.size(); ++i) {
    pa += a[i];
    pb += b[i];
    if (pa < pb) return false;
  }
  return pa == pb;
}

/// All valid tree degree sequences of the same length majorised by B
/// (including B itself), generated by a full partition scan.
inline std::vector<DegreeSequence> enumerate_majorised(const DegreeSequence& bound) {
  std::vector<DegreeSequence> out;
  int n = bound.size();
  if (n == 1) {
    out.push_back(bound);
    return out;
  }
  long total = 2L * (n - 1);
  std::vector<int> parts;
  // non-increasing partitions of `total` into exactly n parts >= 1
  auto recurse = [&](auto&& self, long remaining, int slots, int max_part) -> void {
    if (slots == 0) {
      if (remaining != 0) return;
      DegreeSequence d = DegreeSequence::validate(parts);
      if (majorises(bound, d)) out.push_back(std::move(d));
      return;
    }
    for (int p = std::min<long>(max_part, remaining - (slots - 1)); p >= 1; --p) {
      parts.push_back(p);
      self(self, remaining - p, slots - 1, p);
      parts.pop_back();
    }
  };
  recurse(recurse, total, n, static_cast<int>(total));
  std::sort(out.begin(), out.end(),
            [](const DegreeSequence& a, const DegreeSequence& b) { return b < a; });
  return out;
}

}  // namespace treext
