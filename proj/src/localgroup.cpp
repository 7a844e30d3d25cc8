#include "spgeo/localgroup.hpp"

namespace spgeo {

std::string to_string(SubgroupId h) {
  switch (h) {
    case SubgroupId::K: return "K";
    case SubgroupId::I: return "I";
    case SubgroupId::P1: return "P1";
    case SubgroupId::P2: return "P2";
    case SubgroupId::P02: return "P02";
    case SubgroupId::B: return "B";
    case SubgroupId::Z: return "Z";
    case SubgroupId::G0: return "G0";
  }
  return "?";
}

const QMatrix& symplectic_form() {
  static const QMatrix J(4, 4, {0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0});
  return J;
}

std::optional<Rational> similitude_factor(const QMatrix& g) {
  if (g.rows() != 4 || g.cols() != 4) return std::nullopt;
  const QMatrix& J = symplectic_form();
  QMatrix gram = g.transpose() * J * g;
  Rational lambda = gram(0, 3);
  if (lambda.is_zero()) return std::nullopt;
  if (!(gram == J.scaled(lambda))) return std::nullopt;
  return lambda;
}

LocalScalar similitude(const QMatrix& g, long p) {
  auto l = similitude_factor(g);
  if (!l) throw NotSimilitudeError("matrix is not a symplectic similitude");
  return {*l, p};
}

QMatrix qinverse(const QMatrix& m) {
  if (!m.square()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows();
  QMatrix a = m, inv = QMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (!a(r, c).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("singular matrix");
    for (int j = 0; j < n; ++j) {
      std::swap(a(c, j), a(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    Rational d = a(c, c).inverse();
    for (int j = 0; j < n; ++j) {
      a(c, j) *= d;
      inv(c, j) *= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c).is_zero()) continue;
      Rational f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

GroupElem::GroupElem(QMatrix m, long p) : m_(std::move(m)), p_(p) {
  auto l = similitude_factor(m_);
  if (!l) throw NotSimilitudeError("matrix is not a symplectic similitude");
  lambda_ = *l;
}

int GroupElem::entry_valuation(int i, int j) const {
  const Rational& x = m_(i, j);
  return x.is_zero() ? kInfiniteValuation : padic_valuation(x, p_);
}

GroupElem GroupElem::inverse() const {
  const QMatrix& J = symplectic_form();
  QMatrix inv = (J * m_.transpose() * J).scaled(-lambda_.inverse());
  return GroupElem(std::move(inv), p_, lambda_.inverse(), Trusted{});
}

GroupElem GroupElem::scaled(const Rational& z) const {
  if (z.is_zero()) throw std::domain_error("scaling a group element by zero");
  return GroupElem(m_.scaled(z), p_, lambda_ * z * z, Trusted{});
}

GroupElem operator*(const GroupElem& a, const GroupElem& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("group elements over different primes");
  return GroupElem(a.m_ * b.m_, a.p_, a.lambda_ * b.lambda_, GroupElem::Trusted{});
}

QMatrix diag_matrix(const std::vector<Rational>& d) { return QMatrix::diagonal(d); }

GroupElem elem_J(long p) { return GroupElem(symplectic_form(), p); }

GroupElem elem_s1(long p) {
  return GroupElem(QMatrix(4, 4, {0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0}), p);
}

GroupElem elem_s2(long p) {
  return GroupElem(QMatrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 1}), p);
}

GroupElem elem_tau(long p) {
  return GroupElem(QMatrix(4, 4, {0, 0, 1, 0, 0, 0, 0, 1, p, 0, 0, 0, 0, p, 0, 0}), p);
}

GroupElem elem_t(long p) {
  return GroupElem(QMatrix(4, 4, {1, 0, 0, 0, 0, 0, 1, 0, 0, -p, 0, 0, 0, 0, 0, p}), p);
}

GroupElem elem_diag(const std::vector<Rational>& d, long p) { return GroupElem(diag_matrix(d), p); }

const std::vector<std::string>& weyl_names() {
  static const std::vector<std::string> names{"id",     "s1",     "s2",     "s1s2",
                                              "s2s1",   "s1s2s1", "s2s1s2", "s1s2s1s2"};
  return names;
}

std::vector<GroupElem> weyl_elements(long p) {
  GroupElem id(QMatrix::identity(4), p), a = elem_s1(p), b = elem_s2(p);
  return {id, a, b, a * b, b * a, a * b * a, b * a * b, a * b * a * b};
}

namespace {

bool all_integral(const GroupElem& g) {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (g.entry_valuation(i, j) < 0) return false;
  return true;
}

bool entries_in_P(const GroupElem& g, std::initializer_list<std::pair<int, int>> cells) {
  for (auto [i, j] : cells)
    if (g.entry_valuation(i, j) < 1) return false;
  return true;
}

bool in_K(const GroupElem& g) { return all_integral(g) && padic_valuation(g.lambda(), g.p()) == 0; }

}  // namespace

bool is_member(const GroupElem& g, SubgroupId h) {
  switch (h) {
    case SubgroupId::K:
      return in_K(g);
    case SubgroupId::I:
      return in_K(g) && entries_in_P(g, {{1, 0}, {2, 0}, {3, 0}, {2, 1}, {3, 1}, {3, 2}});
    case SubgroupId::P1:  // Siegel parabolic mod p: lower-left 2x2 block vanishes
      return in_K(g) && entries_in_P(g, {{2, 0}, {3, 0}, {2, 1}, {3, 1}});
    case SubgroupId::P2:  // Klingen parabolic mod p: stabilizer of the line e1
      return in_K(g) && entries_in_P(g, {{1, 0}, {2, 0}, {3, 0}, {3, 1}, {3, 2}});
    case SubgroupId::P02: {
      if (padic_valuation(g.lambda(), g.p()) != 0) return false;
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
          int need = 0;
          if (i == 0 && j == 3) need = -1;
          if ((j == 0 && i > 0) || (i == 3 && j < 3)) need = 1;
          if (g.entry_valuation(i, j) < need) return false;
        }
      return true;
    }
    case SubgroupId::B:
      for (int i = 1; i < 4; ++i)
        for (int j = 0; j < i; ++j)
          if (!g.matrix()(i, j).is_zero()) return false;
      return true;
    case SubgroupId::Z:
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (i != j ? !g.matrix()(i, j).is_zero() : !(g.matrix()(i, i) == g.matrix()(0, 0))) return false;
      return true;
    case SubgroupId::G0:
      return ((g.det_valuation() % 4) + 4) % 4 == 0;
  }
  return false;
}

bool is_member_mod_center(const GroupElem& x, SubgroupId H) {
  switch (H) {
    case SubgroupId::B:
    case SubgroupId::Z:
    case SubgroupId::G0:
      return is_member(x, H);  // these already contain Z
    default:
      break;
  }
  int dv = x.det_valuation();
  if (((dv % 4) + 4) % 4 != 0) return false;
  Rational zinv = Rational(x.p()).pow(-dv / 4);
  return is_member(x.scaled(zinv), H);
}

bool same_coset(const GroupElem& g, const GroupElem& h, SubgroupId H, bool mod_center) {
  GroupElem x = g.inverse() * h;
  return mod_center ? is_member_mod_center(x, H) : is_member(x, H);
}

}  // namespace spgeo
