#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "treext/errors.hpp"
#include "treext/numbers.hpp"

namespace treext {

/// Polynomial with arbitrary-precision integer coefficients, index = power.
/// Canonical form: no trailing zero coefficient; the zero polynomial is empty.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) c_.emplace_back(c);
    trim();
  }
  explicit IntPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

  static IntPolynomial constant(BigInt v) { return IntPolynomial(std::vector<BigInt>{std::move(v)}); }
  static IntPolynomial x() { return IntPolynomial({0, 1}); }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero

  BigInt coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return BigInt(0);
    return c_[k];
  }
  const std::vector<BigInt>& coeffs() const { return c_; }

  bool operator==(const IntPolynomial& o) const = default;

  IntPolynomial operator+(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return IntPolynomial(std::move(out));
  }
  IntPolynomial operator-(const IntPolynomial& o) const {
    std::vector<BigInt> out(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] -= o.c_[i];
    return IntPolynomial(std::move(out));
  }
  IntPolynomial operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<BigInt> out(c_.size() + o.c_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return IntPolynomial(std::move(out));
  }
  IntPolynomial operator*(const BigInt& s) const {
    std::vector<BigInt> out = c_;
    for (auto& v : out) v *= s;
    return IntPolynomial(std::move(out));
  }
  IntPolynomial& operator+=(const IntPolynomial& o) { return *this = *this + o; }
  IntPolynomial& operator*=(const IntPolynomial& o) { return *this = *this * o; }

  BigInt eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }
  Ratio eval(const Ratio& x) const {
    Ratio acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Ratio(*it);
    return acc;
  }

  /// p(-x): flips the sign of odd coefficients.
  IntPolynomial substitute_neg_x() const {
    std::vector<BigInt> out = c_;
    for (std::size_t i = 1; i < out.size(); i += 2) out[i] = -out[i];
    return IntPolynomial(std::move(out));
  }

  /// Quotient of an exact division; throws if the division leaves a remainder
  /// or a fractional coefficient.
  static IntPolynomial exact_div(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    if (a.is_zero()) return {};
    if (a.degree() < b.degree()) throw Error("inexact polynomial division");
    std::vector<BigInt> rem = a.c_;
    std::vector<BigInt> quot(a.degree() - b.degree() + 1, BigInt(0));
    const BigInt& lead = b.c_.back();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      BigInt top = rem[k + b.degree()];
      if (top == 0) continue;
      if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
        throw Error("inexact polynomial division");
      BigInt q = top / lead;
      quot[k] = q;
      for (int i = 0; i <= b.degree(); ++i) rem[k + i] -= q * b.c_[i];
    }
    for (const BigInt& r : rem)
      if (r != 0) throw Error("inexact polynomial division");
    return IntPolynomial(std::move(quot));
  }

  /// Coefficients as decimal strings, lowest power first (the JSON wire form).
  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(c_.size());
    for (const BigInt& v : c_) out.push_back(v.get_str());
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
      if (c_[k] == 0) continue;
      if (!out.empty()) out += (c_[k] > 0 ? " + " : " - ");
      else if (c_[k] < 0) out += "-";
      BigInt a = abs(c_[k]);
      if (a != 1 || k == 0) out += a.get_str();
      if (k >= 1) out += "x";
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<BigInt> c_;
};

}  // namespace treext
