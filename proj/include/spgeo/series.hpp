#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "spgeo/rational.hpp"
#include "spgeo/upoly.hpp"

namespace spgeo {

// Truncated power series sum_{k<=N} c_k u^k over C. Binary operations
// truncate to the smaller order of the two operands.
template <class C>
class PowerSeries {
 public:
  explicit PowerSeries(int order) : c_(static_cast<size_t>(check(order)) + 1) {}
  PowerSeries(std::vector<C> c, int order) : c_(static_cast<size_t>(check(order)) + 1) {
    for (size_t i = 0; i < std::min(c.size(), c_.size()); ++i) c_[i] = std::move(c[i]);
  }
  static PowerSeries one(int order) {
    PowerSeries r(order);
    r.c_[0] = C(1);
    return r;
  }
  static PowerSeries from_poly(const UPoly<C>& p, int order) { return PowerSeries(p.coeffs(), order); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](int k) const { return c_[static_cast<size_t>(k)]; }
  C& operator[](int k) { return c_[static_cast<size_t>(k)]; }

  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] + b[k];
    return r;
  }
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int k = 0; k <= r.order(); ++k) r[k] = a[k] - b[k];
    return r;
  }
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
    PowerSeries r(std::min(a.order(), b.order()));
    for (int i = 0; i <= r.order(); ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= r.order(); ++j) r[i + j] += a[i] * b[j];
    }
    return r;
  }
  friend bool operator==(const PowerSeries&, const PowerSeries&) = default;

  // Multiplicative inverse; the constant term must be a unit of C.
  PowerSeries inverse() const {
    auto inv0 = exact_div(C(1), c_[0]);
    if (!inv0 || !(c_[0] * *inv0 == C(1)))
      throw std::domain_error("power series inverse needs a unit constant term");
    PowerSeries r(order());
    r[0] = *inv0;
    for (int n = 1; n <= order(); ++n) {
      C acc;
      for (int k = 1; k <= n; ++k) acc += c_[static_cast<size_t>(k)] * r[n - k];
      r[n] = -(acc * *inv0);
    }
    return r;
  }

  // Integer power, negative allowed when the constant term is a unit.
  PowerSeries pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    PowerSeries r = one(order()), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      e >>= 1;
      if (e) b = b * b;
    }
    return r;
  }

 private:
  static int check(int order) {
    if (order < 0) throw std::invalid_argument("negative truncation order");
    return order;
  }
  std::vector<C> c_;
};

// exp(f) for f(0) = 0, via n g_n = sum_{k=1..n} k f_k g_{n-k}.
template <class C>
PowerSeries<C> series_exp(const PowerSeries<C>& f) {
  if (!f[0].is_zero()) throw std::domain_error("series_exp needs constant term 0");
  PowerSeries<C> g = PowerSeries<C>::one(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    C acc;
    for (int k = 1; k <= n; ++k) acc += C(Rational(k)) * f[k] * g[n - k];
    g[n] = acc * C(Rational(1, n));
  }
  return g;
}

// log(f) for f(0) = 1, via n g_n = n f_n - sum_{k=1..n-1} k g_k f_{n-k}.
template <class C>
PowerSeries<C> series_log(const PowerSeries<C>& f) {
  if (!(f[0] == C(1))) throw std::domain_error("series_log needs constant term 1");
  PowerSeries<C> g(f.order());
  for (int n = 1; n <= f.order(); ++n) {
    C acc = C(Rational(n)) * f[n];
    for (int k = 1; k < n; ++k) acc -= C(Rational(k)) * g[k] * f[n - k];
    g[n] = acc * C(Rational(1, n));
  }
  return g;
}

}  // namespace spgeo
