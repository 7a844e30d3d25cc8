#pragma once

#include <complex>
#include <compare>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "spgeo/rational.hpp"

namespace spgeo {

// Exponent vector of a monomial v^ev * x1^ex1 * s^es. Ordered lexicographically
// by (ev, ex1, es), which is also the term order used for rendering and division.
struct Exponent {
  int v = 0;
  int x1 = 0;
  int s = 0;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

// Per-variable exponent bound; products that exceed it throw std::overflow_error.
inline constexpr int kMaxExponent = 64;

// Element of Q[v^±1, x1^±1, s^±1]. q = v^2; x2 is not a variable but the
// abbreviation x1^-1 s^-2, substituted when parsing. No zero coefficient is
// ever stored, so equality is term-map equality.
class LaurentPoly {
 public:
  using TermMap = std::map<Exponent, Rational>;

  LaurentPoly() = default;
  LaurentPoly(long c);             // NOLINT(google-explicit-constructor)
  LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const Rational& c, Exponent e);
  static LaurentPoly v() { return monomial(1, {1, 0, 0}); }
  static LaurentPoly q() { return monomial(1, {2, 0, 0}); }
  static LaurentPoly x1() { return monomial(1, {0, 1, 0}); }
  static LaurentPoly x2() { return monomial(1, {0, -1, -2}); }
  static LaurentPoly s() { return monomial(1, {0, 0, 1}); }
  // v^k, i.e. q^(k/2).
  static LaurentPoly vpow(int k) { return monomial(1, {k, 0, 0}); }

  // Drops zero coefficients; the only way to build from an arbitrary term map.
  static LaurentPoly from_terms(const TermMap& raw);

  // Parses the rendering format plus parentheses and the abbreviations q, x2.
  // Grammar: sums of products of powers; '^' takes a signed integer; '/' is
  // only allowed between integer literals. Throws std::invalid_argument.
  static LaurentPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_constant() const;
  Rational constant_term() const { return coeff({0, 0, 0}); }
  Rational coeff(const Exponent& e) const;
  // Largest exponent in lex order with its coefficient. Throws on zero.
  std::pair<Exponent, Rational> leading() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ < b.terms_; }

  // Negative powers are allowed only for monomials (the units of the ring).
  LaurentPoly pow(int e) const;

  // Ring homomorphism sending v, x1, s to the given images. Each image must be
  // a monomial so that negative exponents stay inside the ring.
  LaurentPoly substitute(const LaurentPoly& v_img, const LaurentPoly& x1_img,
                         const LaurentPoly& s_img) const;
  // The unramified quadratic twist: s -> -s.
  LaurentPoly twist_s() const;

  std::complex<double> evaluate(std::complex<double> v, std::complex<double> x1,
                                std::complex<double> s) const;

  // Terms in descending lex order of (ev, ex1, es), e.g. "3*v^3*x1*s^-1 + 1".
  std::string str() const;

 private:
  TermMap terms_;
};

LaurentPoly poly_normalize(const LaurentPoly::TermMap& raw);

// Exact quotient a/b in the Laurent ring, or nullopt if b does not divide a.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

// Monomial square root c*m with (c*m)^2 == x, when x is a monomial with even
// exponents and a square rational coefficient. Positive coefficient chosen.
std::optional<LaurentPoly> monomial_sqrt(const LaurentPoly& x);

}  // namespace spgeo
