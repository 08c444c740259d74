#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tropmod/errors.hpp"
#include "tropmod/rational.hpp"

namespace tropmod {

/// Cell-counting polynomial: coefficient d counts the d-dimensional cells.
/// Evaluating at -1 gives the (nonreduced) Euler characteristic.  All
/// arithmetic is exact and overflow-checked.
class CellPoly {
 public:
  CellPoly() = default;
  explicit CellPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }
  static CellPoly constant(std::int64_t v) { return CellPoly({v}); }
  static CellPoly one() { return constant(1); }

  const std::vector<std::int64_t>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(int d) const {
    return (d >= 0 && d < static_cast<int>(c_.size())) ? c_[d] : 0;
  }

  friend CellPoly operator+(const CellPoly& a, const CellPoly& b) {
    std::vector<std::int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i)
      r[i] = detail::checked_add(i < a.c_.size() ? a.c_[i] : 0, i < b.c_.size() ? b.c_[i] : 0);
    return CellPoly(std::move(r));
  }
  friend CellPoly operator-(const CellPoly& a, const CellPoly& b) { return a + (b * -1); }
  friend CellPoly operator*(const CellPoly& a, const CellPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return CellPoly();
    std::vector<std::int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        r[i + j] = detail::checked_add(r[i + j], detail::checked_mul(a.c_[i], b.c_[j]));
    return CellPoly(std::move(r));
  }
  friend CellPoly operator*(const CellPoly& a, std::int64_t s) {
    std::vector<std::int64_t> r(a.c_);
    for (auto& v : r) v = detail::checked_mul(v, s);
    return CellPoly(std::move(r));
  }
  CellPoly& operator+=(const CellPoly& o) { return *this = *this + o; }

  CellPoly pow(int n) const {
    if (n < 0) throw InvalidArgument("negative polynomial power");
    CellPoly r = one();
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Multiply by x^k (used to weight fibers by base-simplex dimension).
  CellPoly shifted(int k) const {
    if (c_.empty()) return CellPoly();
    std::vector<std::int64_t> r(c_.size() + k, 0);
    for (size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return CellPoly(std::move(r));
  }

  /// Divide every coefficient by d; throws InternalCheckFailure if inexact.
  CellPoly exact_div(std::int64_t d) const {
    std::vector<std::int64_t> r(c_);
    for (auto& v : r) {
      if (v % d != 0)
        throw InternalCheckFailure("orbit-count polynomial not divisible by group order");
      v /= d;
    }
    return CellPoly(std::move(r));
  }

  std::int64_t eval(std::int64_t x) const {
    std::int64_t acc = 0;
    for (size_t i = c_.size(); i-- > 0;)
      acc = detail::checked_add(detail::checked_mul(acc, x), c_[i]);
    return acc;
  }
  std::int64_t euler() const { return eval(-1); }

  friend bool operator==(const CellPoly& a, const CellPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const CellPoly& a, const CellPoly& b) { return !(a == b); }
  friend bool operator<(const CellPoly& a, const CellPoly& b) { return a.c_ < b.c_; }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (!s.empty()) s += " + ";
      s += std::to_string(c_[i]);
      if (i == 1) s += "x";
      if (i > 1) s += "x^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<std::int64_t> c_;
};

}  // namespace tropmod
