#include <cmath>
#include <numbers>

#include "doctest.h"
#include "gen.hpp"
#include "spgeo/zetaeng.hpp"
#include "zeta_oracle.hpp"

using namespace spgeo;
using testgen::Gen;

namespace {

using L = LaurentPoly;

QMatrix small_matrix(Gen& g) {
  int n = static_cast<int>(g.integer(1, 6));
  return g.int_matrix(n, n, 0, 3);
}

QMatrix block_diag(const std::vector<QMatrix>& bs) {
  int n = 0;
  for (const auto& b : bs) n += b.rows();
  QMatrix m(n, n);
  int o = 0;
  for (const auto& b : bs) {
    for (int i = 0; i < b.rows(); ++i)
      for (int j = 0; j < b.cols(); ++j) m(o + i, o + j) = b(i, j);
    o += b.rows();
  }
  return m;
}

// Numeric specialization of a representation block: v = 2 (q = 4), x1 = 3, s = 5.
QMatrix specialize(const LMatrix& m) {
  return m.map([](const L& x) { return x.substitute(L(2), L(3), L(5)).constant_term(); });
}

ComplexData zero_complex() {
  ComplexData d;
  d.q = 3;
  d.gamma_det_in_4Z = true;
  d.LP1 = d.LP2 = d.LI = d.A1 = d.A2 = QMatrix(0, 0);
  return d;
}

std::vector<ZeroStatus> statuses(const RamanujanReport& r, ZeroFactor f) {
  std::vector<ZeroStatus> s;
  for (const auto& z : r.zeros)
    if (z.factor == f) s.push_back(z.status);
  return s;
}

std::vector<std::string> logs(const RamanujanReport& r, ZeroFactor f, ZeroStatus st) {
  std::vector<std::string> s;
  for (const auto& z : r.zeros)
    if (z.factor == f && z.status == st) s.push_back(z.log_q_abs);
  return s;
}

}  // namespace

TEST_CASE("cycle series of the one-loop and two-cycle graphs") {
  QSeries a = cycle_zeta_series(QMatrix(1, 1, {1}), 10);
  for (int n = 0; n <= 10; ++n) CHECK(a[n] == Rational(1));
  QSeries b = cycle_zeta_series(QMatrix(2, 2, {0, 1, 1, 0}), 10);
  for (int n = 0; n <= 10; ++n) CHECK(b[n] == Rational(n % 2 == 0 ? 1 : 0));
  QSeries c = doubled_cycle_zeta_series(QMatrix(1, 1, {3}), 8);
  for (int n = 0; n <= 8; ++n) CHECK(c[n] == (n % 2 == 0 ? Rational(static_cast<long>(std::pow(3, n / 2))) : Rational(0)));
  CHECK(cycle_zeta_series(QMatrix(0, 0), 5) == QSeries::one(5));
}

TEST_CASE("exp of traces is the reciprocal determinant") {
  Gen g(2024);
  for (int trial = 0; trial < 200; ++trial) {
    QMatrix L = small_matrix(g);
    QSeries z = cycle_zeta_series(L, 12);
    QSeries prod = z * QSeries::from_poly(det_one_minus_u(L), 12);
    CAPTURE(trial);
    CHECK(prod == QSeries::one(12));
  }
}

TEST_CASE("closed-walk enumeration agrees with the traces") {
  Gen g(77);
  for (int trial = 0; trial < 20; ++trial) {
    QMatrix L = small_matrix(g);
    // n a_n of log Z is tr(L^n).
    QSeries lg = series_log(cycle_zeta_series(L, 8));
    QSeries from_walks(8);
    for (int n = 1; n <= 8; ++n) {
      long long w = testgen::closed_walks(L, n);
      CHECK(lg[n] * Rational(n) == Rational(w));
      from_walks[n] = Rational(w) / Rational(n);
    }
    CHECK(series_exp(from_walks) == cycle_zeta_series(L, 8));
  }
}

TEST_CASE("series input checks") {
  CHECK_THROWS_AS(cycle_zeta_series(QMatrix(2, 3), 4), std::invalid_argument);
  CHECK_THROWS_AS(cycle_zeta_series(QMatrix(1, 1, {-1}), 4), std::invalid_argument);
  CHECK_THROWS_AS(cycle_zeta_series(QMatrix(1, 1, {Rational(1, 2)}), 4), std::invalid_argument);
  CHECK_THROWS_AS(cycle_zeta_series(QMatrix(1, 1, {1}), 25), std::invalid_argument);
  CHECK_NOTHROW(cycle_zeta_series(QMatrix(1, 1, {1}), 24));
}

TEST_CASE("matrix-polynomial determinants") {
  Gen g(5);
  for (int trial = 0; trial < 20; ++trial) {
    int n = static_cast<int>(g.integer(1, 4));
    QMatrix a = g.int_matrix(n, n, -3, 3), b = g.int_matrix(n, n, -3, 3);
    CHECK(det_matrix_poly({QMatrix::identity(n), a.scaled(Rational(-1))}) == det_one_minus_u(a));
    // Oracle: evaluate det(a + b u) at a few points by Laplace expansion.
    QPoly p = det_matrix_poly({a, b});
    for (long x : {-2L, 3L, 7L}) CHECK(p.eval(Rational(x)) == testgen::laplace_det(a + b.scaled(Rational(x))));
  }
  // 1x1: the quartic itself.
  QPoly qd = vertex_quartic_det(QMatrix(1, 1, {2}), QMatrix(1, 1, {5}), 3);
  CHECK(qd == QPoly(std::vector<Rational>{1, -2, 15, -54, 729}));
  CHECK(vertex_quartic_det(QMatrix(0, 0), QMatrix(0, 0), 3) == QPoly::constant(Rational(1)));
}

TEST_CASE("theorem41 on degenerate and random data") {
  ComplexData d;
  d.LP1 = QMatrix(3, 3);
  d.LP2 = QMatrix(2, 2);
  ZetaReport z = theorem41(d, 12);
  CHECK(z.pass);
  CHECK(z.match_order == 12);
  CHECK(z.lhs == QSeries::one(12));

  d.LP1 = QMatrix(1, 1, {5});
  d.LP2 = QMatrix(0, 0);
  z = theorem41(d, 9);
  CHECK(z.pass);
  for (int n = 0; n <= 9; ++n) CHECK(z.lhs[n] == Rational(static_cast<long>(std::pow(5, n))));

  Gen g(31);
  for (int trial = 0; trial < 30; ++trial) {
    d.LP1 = small_matrix(g);
    d.LP2 = small_matrix(g);
    z = theorem41(d, 14);
    CHECK(z.pass);
    // Factor-wise: Z1 from the determinant times Z2 from the determinant.
    QSeries z1 = QSeries::from_poly(det_one_minus_u(*d.LP1), 14).inverse();
    QSeries z2 = QSeries::from_poly(det_one_minus_u(*d.LP2).in_power(2), 14).inverse();
    CHECK(z.lhs == z1 * z2);
    CHECK(cycle_zeta_series(*d.LP1, 14) == z1);
  }
  d.LP2.reset();
  CHECK_THROWS_AS(theorem41(d, 5), std::invalid_argument);
  d.LP2 = QMatrix(2, 3);
  CHECK_THROWS_AS(theorem41(d, 5), std::invalid_argument);
}

TEST_CASE("complex admissibility") {
  ComplexData d = zero_complex();
  CHECK(complex_violations(d).empty());
  ZetaReport z = corollary43(d, 10);
  CHECK(z.pass);
  CHECK(z.lhs == QSeries::one(10));
  CHECK(z.rhs == QSeries::one(10));

  ComplexData bad = d;
  bad.gamma_det_in_4Z = false;
  CHECK(complex_violations(bad) == std::vector<std::string>{"gamma_det_in_4Z is not asserted"});
  CHECK_THROWS_AS(corollary43(bad, 4), std::invalid_argument);

  bad = d;
  bad.counts.N_p = bad.counts.N_s = 1;
  bad.counts.N_ns = 9;  // q^2 + 1 = 10 would be right
  auto v = complex_violations(bad);
  CHECK(std::find(v.begin(), v.end(), "N_ns != (q^2+1) N_p") != v.end());
  CHECK_THROWS_AS(corollary43(bad, 4), std::invalid_argument);

  bad = d;
  bad.LI = QMatrix(1, 1, {9});
  v = complex_violations(bad);
  CHECK(std::find(v.begin(), v.end(), "LI has size 1, expected 0") != v.end());
  CHECK(std::find(v.begin(), v.end(), "LI row 0 does not sum to 9") == v.end());

  bad = d;
  bad.A1.reset();
  CHECK(complex_violations(bad).empty());
  CHECK_THROWS_AS(corollary43(bad, 4), std::invalid_argument);

  // Counts of one hypothetical primitive vertex at q = 2.
  ComplexCounts c{1, 1, 5, 30, 30, 90};
  CHECK(euler_characteristic(c) == 7 - 45 + 45);
}

TEST_CASE("the edge and vertex sides agree on complexes assembled from representation blocks") {
  const std::vector<RepType> direct = {RepType::I,  RepType::IIb, RepType::IIIb, RepType::IVa, RepType::IVd, RepType::Vb,
                                       RepType::Vc, RepType::Vd,  RepType::VIb,  RepType::VIc, RepType::VId};
  Gen g(99);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<QMatrix> lp1, lp2, li, a1, a2;
    long chi = 0, e = 0;
    for (RepType t : direct) {
      int n = static_cast<int>(g.integer(0, 2));
      if (t == RepType::IVd) n = 1;  // the two one-dimensional representations
      for (int sign : {1, -1}) {
        RepModel m = rep_model(t, sign);
        for (int k = 0; k < n; ++k) {
          lp1.push_back(specialize(m.ops.at("LP1")));
          lp2.push_back(specialize(m.ops.at("LP2")));
          li.push_back(specialize(m.ops.at("LI")));
          if (m.dims.K == 1) {
            a1.push_back(specialize(m.ops.at("A1")));
            a2.push_back(specialize(m.ops.at("A2")));
          }
        }
      }
      const auto& row = table2_row(t);
      chi += n * row.C1;
      e += n * (row.C2 - row.C1);
    }
    CAPTURE(trial);
    ZetaReport z = compare_zeta_sides(block_diag(lp1), block_diag(lp2), block_diag(li), block_diag(a1), block_diag(a2), 4,
                                      chi, e, 18);
    CHECK(z.pass);
    // Negative control: the wrong exponent is detected.
    CHECK_FALSE(compare_zeta_sides(block_diag(lp1), block_diag(lp2), block_diag(li), block_diag(a1), block_diag(a2), 4,
                                   chi, e + 1, 18)
                    .pass);
  }
}

TEST_CASE("exponent identity and the symbolic assembly") {
  for (long q : {2L, 3L, 4L, 5L, 7L, 9L})
    for (long np = 0; np < 100; ++np) CHECK(exponent_identity_holds(np, q));
  SymbolicZetaReport r = corollary43_symbolic();
  CHECK(r.E1 == LinearForm{{"m_IVa", L(Rational(1, 2))}, {"m_IVd", L(Rational(1, 2))}});
  CHECK(r.E1_subst == LinearForm{{"chi", L(1)}});
  CHECK(r.E2_subst == LinearForm{{"N_p", -(L::q() * L::q() - 1)}});
  CHECK(r.E2.at("m_Vd") == L(1));
  CHECK(r.E2.at("m_IIa") == L(Rational(-1, 2)));
  CHECK(r.E1_ok);
  CHECK(r.E2_ok);
  CHECK(r.assembled_checks == 12);
  CHECK(r.assembled_ok);
  CHECK(r.exponent_identity_ok);
  CHECK(r.pass);
}

TEST_CASE("Ramanujan classification on exact spectra") {
  RamanujanReport t1 = ramanujan_classify(table3_roots(RepType::I, 1));
  CHECK(t1.ramanujan);
  for (ZeroFactor f : all_zero_factors()) CHECK(t1.consistent.at(f));
  for (auto s : statuses(t1, ZeroFactor::Quartic)) CHECK(s == ZeroStatus::Pass);
  for (auto s : statuses(t1, ZeroFactor::LP2)) CHECK(s == ZeroStatus::Boundary);
  CHECK(logs(t1, ZeroFactor::Quartic, ZeroStatus::Pass) == std::vector<std::string>(4, "-3/2"));

  for (int sign : {1, -1}) {
    RamanujanReport b = ramanujan_classify(table3_roots(RepType::IIb, sign));
    CHECK_FALSE(b.ramanujan);
    CHECK_FALSE(b.consistent.at(ZeroFactor::Quartic));
    CHECK_FALSE(b.consistent.at(ZeroFactor::LP1));
    CHECK(logs(b, ZeroFactor::Quartic, ZeroStatus::Fail) == std::vector<std::string>{"-2", "-1"});
    CHECK(logs(b, ZeroFactor::LP1, ZeroStatus::Fail) == std::vector<std::string>{"-2"});
    CHECK(b.consistent.at(ZeroFactor::LP2));
    // L_I eigenvalues +-q^(5/4) chi^(+-1/2): zeros at q^(-5/4), below the band.
    CHECK_FALSE(b.consistent.at(ZeroFactor::LI));
    CHECK(logs(b, ZeroFactor::LI, ZeroStatus::Fail) == std::vector<std::string>(4, "-5/4"));
  }

  for (int sign : {1, -1}) {
    RamanujanReport d = ramanujan_classify(table3_roots(RepType::IVd, sign));
    CHECK(d.ramanujan);
    for (const auto& z : d.zeros) CHECK(z.status == ZeroStatus::Trivial);
    CHECK(logs(d, ZeroFactor::Quartic, ZeroStatus::Trivial) == std::vector<std::string>{"-3", "-2", "-1", "0"});
  }

  // IVd rows inside a larger spectrum are removed once each; the IIb zeros
  // that share their values stay nontrivial.
  SpectrumRoots all = table3_roots(RepType::IIb, 1);
  for (int sign : {1, -1}) {
    SpectrumRoots d = table3_roots(RepType::IVd, sign);
    for (auto [dst, src] : {std::pair{&all.quartic, &d.quartic}, {&all.LP1, &d.LP1}, {&all.LP2, &d.LP2},
                            {&all.LI_lin, &d.LI_lin}, {&all.LI_sq, &d.LI_sq}})
      dst->insert(dst->end(), src->begin(), src->end());
  }
  RamanujanReport mix = ramanujan_classify(all);
  int trivial = 0;
  for (const auto& z : mix.zeros) trivial += z.status == ZeroStatus::Trivial;
  CHECK(trivial == 2 * 8);
  CHECK_FALSE(mix.consistent.at(ZeroFactor::Quartic));

  SpectrumRoots bad;
  bad.LP1 = {L(2) * L::q()};
  CHECK_THROWS_AS(ramanujan_classify(bad), std::invalid_argument);
  bad.LP1 = {L::q() + 1};
  CHECK_THROWS_AS(ramanujan_classify(bad), std::invalid_argument);
}

TEST_CASE("Ramanujan classification on numeric spectra") {
  const double pi = std::numbers::pi;
  for (long q : {2L, 3L, 5L}) {
    std::complex<double> v(std::sqrt(static_cast<double>(q)), 0);
    auto unit = [](double t) { return std::polar(1.0, t); };
    RamanujanReport t1 = ramanujan_classify(numeric_zeros(table3_roots(RepType::I, 1), v, unit(0.7), unit(2.1)), q);
    CHECK(t1.ramanujan);
    RamanujanReport b = ramanujan_classify(numeric_zeros(table3_roots(RepType::IIb, 1), v, unit(1.3), 1.0), q);
    CHECK_FALSE(b.consistent.at(ZeroFactor::Quartic));
    CHECK_FALSE(b.consistent.at(ZeroFactor::LP1));
    for (int sign : {1, -1}) {
      RamanujanReport d = ramanujan_classify(numeric_zeros(table3_roots(RepType::IVd, sign), v, 1.0, 1.0), q);
      for (const auto& z : d.zeros) CHECK(z.status == ZeroStatus::Trivial);
    }
    // Just outside tolerance of a quartic target is a violation.
    NumericZeros nz{{ZeroFactor::Quartic, {std::pow(static_cast<double>(q), -1.5) + 1e-6}}};
    CHECK_FALSE(ramanujan_classify(nz, q).ramanujan);
    nz[ZeroFactor::Quartic][0] = std::pow(static_cast<double>(q), -1.5) + 1e-11;
    CHECK(ramanujan_classify(nz, q).ramanujan);
  }

  // Rotating every zero by a unit leaves the absolute-value verdicts alone.
  Gen g(8);
  for (int trial = 0; trial < 25; ++trial) {
    long q = g.coin() ? 2 : 3;
    NumericZeros nz;
    for (ZeroFactor f : all_zero_factors())
      for (int k = 0; k < 3; ++k) {
        double e = -2.5 + 2.5 * static_cast<double>(g.integer(0, 1000)) / 1000.0;
        nz[f].push_back(std::polar(std::pow(static_cast<double>(q), e), 2 * pi * static_cast<double>(g.integer(0, 99)) / 100));
      }
    // Exact hits on the bands as well.
    nz[ZeroFactor::Quartic].push_back(std::polar(std::pow(static_cast<double>(q), -1.5), 0.3));
    nz[ZeroFactor::LP2].push_back(std::polar(std::pow(static_cast<double>(q), -1.0), 1.1));
    NumericZeros rot = nz;
    std::complex<double> w = std::polar(1.0, 0.01 + 2 * pi * static_cast<double>(g.integer(0, 99)) / 100);
    for (auto& [f, zs] : rot)
      for (auto& z : zs) z *= w;
    RamanujanReport a = ramanujan_classify(nz, q), b = ramanujan_classify(rot, q);
    REQUIRE(a.zeros.size() == b.zeros.size());
    for (size_t i = 0; i < a.zeros.size(); ++i) {
      CHECK(a.zeros[i].status == b.zeros[i].status);
      CHECK(a.zeros[i].log_q_abs == b.zeros[i].log_q_abs);
    }
  }
  CHECK_THROWS_AS(ramanujan_classify(NumericZeros{}, 1), std::invalid_argument);
}
