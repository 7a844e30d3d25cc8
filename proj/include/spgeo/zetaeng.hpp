#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "spgeo/localgroup.hpp"
#include "spgeo/reptheory.hpp"
#include "spgeo/series.hpp"

namespace spgeo {

using QSeries = PowerSeries<Rational>;
using QPoly = UPoly<Rational>;

inline constexpr int kMaxSeriesOrder = 24;

// exp(sum_{n<=N} tr(L^n)/n u^n), truncated at N. L must be square with
// nonnegative integer entries and N <= kMaxSeriesOrder.
QSeries cycle_zeta_series(const QMatrix& L, int N);
// The type-2 variant: exp(sum_{2n<=N} tr(L^n)/n u^(2n)), i.e. the series above
// in u^2.
QSeries doubled_cycle_zeta_series(const QMatrix& L, int N);
// det(I - L u) and det(sum_k C_k u^k) for square rational matrices.
QPoly det_one_minus_u(const QMatrix& L);
QPoly det_matrix_poly(const std::vector<QMatrix>& coeffs);
// det(I - A1 u + q A2 u^2 - q^3 A1 u^3 + q^6 u^4).
QPoly vertex_quartic_det(const QMatrix& A1, const QMatrix& A2, long q);

struct ComplexCounts {
  long N_p = 0, N_s = 0, N_ns = 0;
  long N1_type1_directed = 0, N2_type2 = 0, N_chambers_directed = 0;
};

// Finite-quotient data supplied by the caller; nothing here constructs it.
struct ComplexData {
  long q = 0;
  ComplexCounts counts;
  std::optional<QMatrix> LP1, LP2, LI, A1, A2;
  bool gamma_det_in_4Z = false;
};

// Every violated structural invariant: entry types, matrix sizes against the
// counts, operator row sums, the 1 : 1 : (q^2+1) vertex ratio, the parity of
// directed counts and the declared determinant flag. Empty when admissible.
std::vector<std::string> complex_violations(const ComplexData& d);
// N0 - N1 + N2 with N1 counting undirected edges of both types.
long euler_characteristic(const ComplexCounts& c);

struct ZetaReport {
  QSeries lhs{0}, rhs{0};
  int order = 0;
  int match_order = -1;  // largest n with lhs = rhs through u^n; order when they agree
  std::map<std::string, std::string> factor_data;
  bool pass = false;
};

// Z = Z1 * Z2 from cycle counts against 1/(det(I - L_P1 u) det(I - L_P2 u^2)).
// Throws std::invalid_argument on a missing or non-square operator.
ZetaReport theorem41(const ComplexData& d, int N);
// Cross-multiplied vertex-level identity
//   (1-u^2)^chi (1-q^2u^2)^e det(I-L_P1 u) det(I-L_P2 u^2) = Q_A(u) det(I-L_I u),
// e = -(q^2-1) N_p, negative exponents moved to the other side. Rejects
// (std::invalid_argument) data with any complex_violations entry.
ZetaReport corollary43(const ComplexData& d, int N);
// The same comparison with chi and e given and no admissibility checks; for
// synthetic operator blocks that are not the operators of a complex.
ZetaReport compare_zeta_sides(const QMatrix& LP1, const QMatrix& LP2, const QMatrix& LI, const QMatrix& A1,
                              const QMatrix& A2, long q, long chi, long e, int N);

// 2 N_p - N_ns against -(q^2-1) N_p with N_ns = (q^2+1) N_p.
bool exponent_identity_holds(long N_p, long q);

// The symbolic path: every type's reduced contribution, raised to its
// multiplicity symbol, assembled into (1-u^2)^E1 (1-q^2u^2)^E2.
struct SymbolicZetaReport {
  LinearForm E1, E2;             // in the multiplicity symbols m_t (pair totals)
  LinearForm E1_subst, E2_subst;  // after m_IVd = 2, m_IVa = 2 chi - 2 and the m identity
  bool E1_ok = false, E2_ok = false;
  int assembled_checks = 0;  // concrete multiplicity vectors multiplied out
  bool assembled_ok = false;
  int exponent_checks = 0;
  bool exponent_identity_ok = false;
  bool pass = false;
};
SymbolicZetaReport corollary43_symbolic(unsigned seed = 1, int assemblies = 6);

// ---- Ramanujan classification ------------------------------------------------

enum class ZeroFactor { Quartic, LP1, LP2, LI };
std::string to_string(ZeroFactor f);
const std::vector<ZeroFactor>& all_zero_factors();

enum class ZeroStatus { Trivial, Pass, Boundary, Fail };
std::string to_string(ZeroStatus s);

struct ZeroVerdict {
  ZeroFactor factor = ZeroFactor::Quartic;
  std::string zero;       // rendered zero of the factor (as a function of u)
  std::string log_q_abs;  // log_q |zero|, exact "p/r" or decimal
  ZeroStatus status = ZeroStatus::Pass;
};

struct RamanujanReport {
  std::vector<ZeroVerdict> zeros;
  std::map<ZeroFactor, bool> consistent;  // no nontrivial zero outside its band
  bool ramanujan = false;
};

// Exact path: eigenvalues as c * v^k * (x1, s monomial) with c = +-1, the
// symbols counting as unit-modulus. Throws std::invalid_argument otherwise.
RamanujanReport ramanujan_classify(const SpectrumRoots& roots);

// Numeric path: zeros in u of det(1 - A1 u + ...), det(I - L_P1 u),
// det(I - L_P2 u^2), det(I - L_I u).
using NumericZeros = std::map<ZeroFactor, std::vector<std::complex<double>>>;
RamanujanReport ramanujan_classify(const NumericZeros& zeros, long q, double tol = 1e-9);

// Zeros of a representation's factors at numeric v, x1, s; LI_sq entries give
// both square roots.
NumericZeros numeric_zeros(const SpectrumRoots& roots, std::complex<double> v, std::complex<double> x1,
                           std::complex<double> s);

}  // namespace spgeo
