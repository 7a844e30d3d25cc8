#pragma once
// Hand-rolled random generators for the property tests. Seeds are fixed so a
// failing case reproduces; each test owns its own Gen.

#include <random>
#include <vector>

#include "spgeo/laurent.hpp"
#include "spgeo/localgroup.hpp"
#include "spgeo/matrix.hpp"
#include "spgeo/rational.hpp"

namespace spgeo::testgen {

class Gen {
 public:
  explicit Gen(uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(long bound = 9) {
    long d = integer(1, bound);
    return Rational(integer(-bound, bound), d);
  }

  // Up to `max_terms` terms, exponents in [-e, e].
  LaurentPoly laurent(int max_terms = 4, int e = 3) {
    LaurentPoly::TermMap t;
    int n = static_cast<int>(integer(0, max_terms));
    for (int i = 0; i < n; ++i) {
      Exponent ex{static_cast<int>(integer(-e, e)), static_cast<int>(integer(-e, e)),
                  static_cast<int>(integer(-e, e))};
      t[ex] = rational(5);
    }
    return LaurentPoly::from_terms(t);
  }

  Matrix<LaurentPoly> laurent_matrix(int n, int max_terms = 2, int e = 2) {
    Matrix<LaurentPoly> m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = laurent(max_terms, e);
    return m;
  }

  Matrix<Rational> int_matrix(int rows, int cols, long lo, long hi) {
    Matrix<Rational> m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m(i, j) = Rational(integer(lo, hi));
    return m;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Laplace expansion along the first row: an oracle independent of Bareiss.
template <class R>
R laplace_det(const Matrix<R>& m) {
  const int n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R acc;
  for (int j = 0; j < n; ++j) {
    if (m(0, j).is_zero()) continue;
    std::vector<int> rs, cs;
    for (int i = 1; i < n; ++i) rs.push_back(i);
    for (int k = 0; k < n; ++k)
      if (k != j) cs.push_back(k);
    R minor = laplace_det(m.submatrix(rs, cs));
    if (j % 2 == 0) {
      acc += m(0, j) * minor;
    } else {
      acc -= m(0, j) * minor;
    }
  }
  return acc;
}

// Symplectic unipotents read off the coset representatives (pi set to 1).
inline GroupElem siegel_unipotent(long a, long b, long c, long p) {
  return GroupElem(QMatrix(4, 4, {1, 0, b, a, 0, 1, c, b, 0, 0, 1, 0, 0, 0, 0, 1}), p);
}
inline GroupElem klingen_unipotent(long a, long b, long p) {
  return GroupElem(QMatrix(4, 4, {1, -a, 0, b, 0, 1, 0, 0, 0, 0, 1, a, 0, 0, 0, 1}), p);
}

// Random element of K: words in integral unipotents, Weyl elements and unit tori.
inline GroupElem random_K(Gen& g, long p) {
  auto W = weyl_elements(p);
  GroupElem x(QMatrix::identity(4), p);
  for (int k = 0; k < 4; ++k) {
    switch (g.integer(0, 3)) {
      case 0: x = x * siegel_unipotent(g.integer(-4, 4), g.integer(-4, 4), g.integer(-4, 4), p); break;
      case 1: x = x * klingen_unipotent(g.integer(-4, 4), g.integer(-4, 4), p); break;
      case 2: x = x * W[static_cast<size_t>(g.integer(0, 7))]; break;
      default: {
        long a = g.integer(1, p - 1), b = g.integer(1, p - 1), l = g.integer(1, p - 1);
        x = x * elem_diag({Rational(a), Rational(b), Rational(l, b), Rational(l, a)}, p);
      }
    }
  }
  return x;
}

inline GroupElem random_G(Gen& g, long p) {
  GroupElem x = random_K(g, p);
  for (int k = 0; k < 3; ++k) {
    switch (g.integer(0, 2)) {
      case 0: x = x * elem_tau(p); break;
      case 1: x = x * elem_diag({1, 1, p, p}, p); break;
      default: x = x * elem_t(p);
    }
    x = x * random_K(g, p);
  }
  return x;
}

}  // namespace spgeo::testgen
