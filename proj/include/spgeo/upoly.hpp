#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spgeo/laurent.hpp"
#include "spgeo/rational.hpp"

namespace spgeo {

// Univariate polynomial in u with coefficients in a commutative ring C
// (Rational, LaurentPoly). Coefficients ascending; no trailing zeros, so the
// zero polynomial has an empty coefficient vector and degree -1.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> c) : c_(std::move(c)) { trim(); }

  static UPoly constant(const C& c) { return UPoly(std::vector<C>{c}); }
  static UPoly monomial(const C& c, int deg) {
    std::vector<C> v(static_cast<size_t>(deg) + 1);
    v[static_cast<size_t>(deg)] = c;
    return UPoly(std::move(v));
  }
  static UPoly u() { return monomial(C(1), 1); }
  // 1 - r*u^k, the shape of every Euler factor in the zeta identities.
  static UPoly one_minus(const C& r, int k = 1) { return constant(C(1)) - monomial(r, k); }

  const std::vector<C>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  C coeff(int i) const {
    return i >= 0 && i < static_cast<int>(c_.size()) ? c_[static_cast<size_t>(i)] : C();
  }
  const C& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  UPoly operator-() const {
    UPoly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    std::vector<C> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(r));
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
  friend bool operator==(const UPoly&, const UPoly&) = default;

  UPoly scaled(const C& k) const {
    std::vector<C> r = c_;
    for (auto& x : r) x = x * k;
    return UPoly(std::move(r));
  }
  UPoly pow(int e) const {
    if (e < 0) throw std::domain_error("negative power of a polynomial");
    UPoly r = constant(C(1));
    for (int i = 0; i < e; ++i) r *= *this;
    return r;
  }
  // p(u^k).
  UPoly in_power(int k) const {
    if (c_.empty()) return UPoly();
    std::vector<C> r(static_cast<size_t>(degree() * k) + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[i * static_cast<size_t>(k)] = c_[i];
    return UPoly(std::move(r));
  }
  // u^n p(1/u); requires n >= degree.
  UPoly reversed(int n) const {
    if (n < degree()) throw std::domain_error("reversal degree below polynomial degree");
    std::vector<C> r(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(n) - i] = c_[i];
    return UPoly(std::move(r));
  }
  C eval(const C& x) const {
    C acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }
  template <class F>
  auto map(F f) const {
    using D = decltype(f(std::declval<C>()));
    std::vector<D> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(f(x));
    return UPoly<D>(std::move(r));
  }

  // Descending powers of u, e.g. "u^2 + (-v^4*x1 - 1)*u + v^8".
  std::string str(const std::function<std::string(const C&)>& fmt) const {
    if (c_.empty()) return "0";
    std::string out;
    for (size_t k = c_.size(); k-- > 0;) {
      if (c_[k].is_zero()) continue;
      std::string body = fmt(c_[k]);
      bool compound = body.find(" + ") != std::string::npos || body.find(" - ") != std::string::npos;
      std::string upow = k == 0 ? "" : (k == 1 ? "u" : "u^" + std::to_string(k));
      std::string term;
      if (upow.empty()) {
        term = body;
      } else if (body == "1") {
        term = upow;
      } else if (body == "-1") {
        term = "-" + upow;
      } else {
        term = (compound ? "(" + body + ")" : body) + "*" + upow;
      }
      if (!out.empty()) {
        if (term[0] == '-' && !compound) {
          out += " - " + term.substr(1);
          continue;
        }
        out += " + ";
      }
      out += term;
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

using RatPoly = UPoly<Rational>;
using LPoly = UPoly<LaurentPoly>;

inline std::string to_string(const RatPoly& p) {
  return p.str([](const Rational& r) { return r.str(); });
}
inline std::string to_string(const LPoly& p) {
  return p.str([](const LaurentPoly& r) { return r.str(); });
}

// Exact quotient a/b by long division when every leading-coefficient division
// is exact in C and the remainder vanishes; nullopt otherwise (not an error).
template <class C>
std::optional<UPoly<C>> poly_divides(const UPoly<C>& a, const UPoly<C>& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return UPoly<C>();
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<C> rem = a.coeffs();
  std::vector<C> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  const C& lb = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const C& top = rem[static_cast<size_t>(k + b.degree())];
    if (top.is_zero()) continue;
    auto t = exact_div(top, lb);
    if (!t) return std::nullopt;
    quo[static_cast<size_t>(k)] = *t;
    for (size_t j = 0; j < bc.size(); ++j) rem[static_cast<size_t>(k) + j] -= *t * bc[j];
  }
  for (const auto& r : rem)
    if (!r.is_zero()) return std::nullopt;
  return UPoly<C>(std::move(quo));
}

template <class C>
std::optional<UPoly<C>> exact_div(const UPoly<C>& a, const UPoly<C>& b) {
  return poly_divides(a, b);
}

}  // namespace spgeo
