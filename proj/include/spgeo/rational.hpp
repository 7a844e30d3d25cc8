#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace spgeo {

// Exact rational number. Always in lowest terms with a positive denominator;
// zero is 0/1. Thin value wrapper over mpq_class that never leaves a
// non-canonical value observable.
class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long n, long d);
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& n, const mpz_class& d);
  explicit Rational(mpq_class q);

  // Accepts "n" or "n/d" with optional leading sign. Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }
  // Only valid when is_integer() and the value fits; throws otherwise.
  long to_long() const;

  Rational abs() const;
  Rational inverse() const;  // throws std::domain_error on zero
  Rational pow(int e) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  // "n" for integers, "n/d" otherwise.
  std::string str() const;
  // Always "n/d", including "0/1" and "5/1"; used by the JSON reports.
  std::string fraction_str() const;

 private:
  mpq_class q_;
};

// Exact quotient in a field: nullopt only when dividing by zero. Matches the
// exact_div overload set used by the ring-generic templates.
std::optional<Rational> exact_div(const Rational& a, const Rational& b);

// Exponent of p in a nonzero rational. Caller handles zero.
int padic_valuation(const Rational& x, long p);
int padic_valuation(const mpz_class& x, long p);

// Largest r with r*r == x, if x is a perfect square of a rational.
std::optional<Rational> rational_sqrt(const Rational& x);

}  // namespace spgeo
