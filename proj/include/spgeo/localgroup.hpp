#pragma once

#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spgeo/matrix.hpp"
#include "spgeo/rational.hpp"

namespace spgeo {

using QMatrix = Matrix<Rational>;

// Valuation of zero.
inline constexpr int kInfiniteValuation = std::numeric_limits<int>::max();

// An element of Q_p represented by a global rational; valuations are exact.
struct LocalScalar {
  Rational value;
  long p = 2;
  int valuation() const { return value.is_zero() ? kInfiniteValuation : padic_valuation(value, p); }
};

enum class SubgroupId { K, I, P1, P2, P02, B, Z, G0 };
std::string to_string(SubgroupId h);

class NotSimilitudeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The Gram matrix of the symplectic basis (e1, e2, f1, f2):
// <e1,f2> = <e2,f1> = 1, antidiagonal (1, 1, -1, -1).
const QMatrix& symplectic_form();

// lambda with g^T J g = lambda J, or nullopt if g is not a similitude.
std::optional<Rational> similitude_factor(const QMatrix& g);
// Throws NotSimilitudeError when g^T J g is not a nonzero multiple of J.
LocalScalar similitude(const QMatrix& g, long p);

// Inverse over Q by Gauss-Jordan; throws std::domain_error if singular.
QMatrix qinverse(const QMatrix& m);

// Element of GSp4(Q_p) with its similitude factor cached. Construction
// validates the similitude relation, so every GroupElem is in GSp4.
class GroupElem {
 public:
  GroupElem(QMatrix m, long p);

  const QMatrix& matrix() const { return m_; }
  long p() const { return p_; }
  const Rational& lambda() const { return lambda_; }
  LocalScalar similitude() const { return {lambda_, p_}; }
  Rational det() const { return lambda_ * lambda_; }  // det = lambda^2 on GSp4
  int det_valuation() const { return 2 * padic_valuation(lambda_, p_); }
  int entry_valuation(int i, int j) const;

  // g^-1 = -lambda^-1 J g^T J, exact and cheap.
  GroupElem inverse() const;
  // z*g for a nonzero scalar z; lambda scales by z^2.
  GroupElem scaled(const Rational& z) const;
  friend GroupElem operator*(const GroupElem& a, const GroupElem& b);
  friend bool operator==(const GroupElem& a, const GroupElem& b) { return a.p_ == b.p_ && a.m_ == b.m_; }

 private:
  struct Trusted {};
  GroupElem(QMatrix m, long p, Rational lambda, Trusted)
      : m_(std::move(m)), p_(p), lambda_(std::move(lambda)) {}
  QMatrix m_;
  long p_;
  Rational lambda_;
};

QMatrix diag_matrix(const std::vector<Rational>& d);

// Named elements. J, s1, s2 do not depend on p; tau and t involve pi = p.
GroupElem elem_J(long p);
GroupElem elem_s1(long p);
GroupElem elem_s2(long p);
GroupElem elem_tau(long p);
GroupElem elem_t(long p);
GroupElem elem_diag(const std::vector<Rational>& d, long p);

// id, s1, s2, s1s2, s2s1, s1s2s1, s2s1s2, s1s2s1s2 as literal products.
std::vector<GroupElem> weyl_elements(long p);
// Names in the same order, e.g. "s1s2".
const std::vector<std::string>& weyl_names();

bool is_member(const GroupElem& g, SubgroupId h);

// g^-1 h in H (mod_center false) or in H.Z (mod_center true). For the compact
// subgroups the central factor is forced: det(g^-1 h) must have valuation
// 4k and z = p^k; unit scalars already lie in H.
bool same_coset(const GroupElem& g, const GroupElem& h, SubgroupId H, bool mod_center);
// x in H.Z.
bool is_member_mod_center(const GroupElem& x, SubgroupId H);

}  // namespace spgeo
