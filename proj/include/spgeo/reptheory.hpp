#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spgeo/laurent.hpp"
#include "spgeo/localgroup.hpp"
#include "spgeo/matrix.hpp"
#include "spgeo/upoly.hpp"

namespace spgeo {

using LMatrix = Matrix<LaurentPoly>;

// The fifteen unitary Iwahori-spherical types (IVb and IVc never occur).
enum class RepType { I, IIa, IIb, IIIa, IIIb, IVa, IVd, Va, Vb, Vc, Vd, VIa, VIb, VIc, VId };

std::string to_string(RepType t);
std::optional<RepType> parse_rep_type(const std::string& s);
const std::vector<RepType>& all_rep_types();

struct ParahoricDims {
  int K = 0, P02 = 0, P2 = 0, P1 = 0, I = 0;
  friend bool operator==(const ParahoricDims&, const ParahoricDims&) = default;
};

// One row of the dimension table, as published.
struct Table2Row {
  RepType type = RepType::I;
  std::string representation;
  ParahoricDims dims;
  int C1 = 0, C2 = 0;
  std::string tempered;  // empty when the type is never tempered
};
const Table2Row& table2_row(RepType t);

// (2K + P02) - (P1 + 2 P2) + I and 4K - (P1 + 2 P2) + I.
int column_C1(const ParahoricDims& d);
int column_C2(const ParahoricDims& d);

// Images of pi under chi1, chi2, sigma for chi1 x chi2 ⋊ sigma.
struct InducingData {
  LaurentPoly chi1, chi2, sigma;
};

// Principal series operators. Matrices act on coordinate columns: column j
// is the image of the j-th basis vector (f_1..f_8, g_1..g_4, h_1..h_4).
LMatrix principal_LI(const InducingData& d);
LMatrix principal_LP1(const InducingData& d);
LMatrix principal_LP2(const InducingData& d);
LaurentPoly lambda1(const InducingData& d);
LaurentPoly lambda2(const InducingData& d);
// 1 - l1 u + q l2 u^2 - q^3 l1 u^3 + q^6 u^4.
LPoly quartic_factor(const LaurentPoly& l1, const LaurentPoly& l2);

// Inducing data of the principal series a type's model lives in. `sign` is
// the xi-twist: it flips epsilon = chi*sigma for type II, sigma(pi) for
// IV-VI, and substitutes s -> -s for the generic types I and III.
// Type II uses c = x1 as the free unit chi(pi) with s = epsilon/c; type III
// uses s = sigma(pi) with chi(pi) = s^-2.
InducingData inducing_data(RepType t, int sign);

// ---- linear algebra over the fraction field of the Laurent ring ----------

struct RankProfile {
  int rank = 0;
  std::vector<int> rows;  // original indices of pivot rows
  std::vector<int> cols;  // pivot columns
};
// Fraction-free echelon form; the pivot rows x pivot cols minor is nonzero.
RankProfile rank_profile(const LMatrix& m);
// Columns spanning the right kernel, with Laurent polynomial entries.
LMatrix nullspace(const LMatrix& m);
bool same_span(const LMatrix& a, const LMatrix& b);
// R with M B = B R, or nullopt when span(B) is not M-stable (or R is not
// integral over the Laurent ring). B must have full column rank.
std::optional<LMatrix> restrict_operator(const LMatrix& M, const LMatrix& B);

// Parahoric-invariant vectors of the 8-dimensional V^I, in f-coordinates.
// Only K, P1, P2, I are meaningful here.
LMatrix invariant_subspace(const LMatrix& B, SubgroupId H);
// f-coordinates of invariant vectors to g (P1), h (P2) or the K line.
LMatrix to_parahoric_coords(const LMatrix& B, SubgroupId H);
// 8x4 inclusions of the Siegel- and Klingen-induced I-fixed functions.
LMatrix siegel_embedding();
LMatrix klingen_embedding();

// Intertwining maps on the f-basis from the rank-one formula:
// T(f_w) = (f_w + f_aw)/q, T(f_aw) = f_w + f_aw when l(aw) > l(w).
LMatrix casselman_T(int alpha);
// Common kernel of T_{s1} and T_{s2}.
LMatrix steinberg_kernel();

// Operator actions printed for the Siegel/Klingen models (IIb, IIIb) and
// on the (phi1, phi2) basis of Vb, in the published bases.
struct DisplayedActions {
  LMatrix LI, LP1, LP2;
};
DisplayedActions displayed_IIb(const LaurentPoly& chi, const LaurentPoly& sigma);
DisplayedActions displayed_IIIb(const LaurentPoly& chi, const LaurentPoly& sigma);
DisplayedActions displayed_Vb(const LaurentPoly& sigma);

// ---- models ---------------------------------------------------------------

class BasisNotInvariant : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RepModel {
  RepType type = RepType::I;
  int sign = 1;
  InducingData data;
  bool quotient = false;  // spectra obtained by dividing out the sub-types
  ParahoricDims dims;     // P02 is carried from the table, the rest computed
  // Bases inside the principal-series V^I (8 rows); empty for quotients.
  LMatrix basis_I, basis_P1, basis_P2, basis_K;
  std::vector<std::string> basis_names_I, basis_names_P1, basis_names_P2, basis_names_K;
  // Restricted matrices: "LI", "LP1", "LP2", and 1x1 "A1", "A2".
  std::map<std::string, LMatrix> ops;
  // det(uI - L) on the invariant space; 1 when the space is zero.
  LPoly charpoly_LI, charpoly_LP1, charpoly_LP2;
  std::optional<LaurentPoly> lambda1, lambda2;
  LPoly quartic;  // 1 when V^K = 0
};

// Throws BasisNotInvariant when a stated span is not operator-stable.
RepModel rep_model(RepType t, int sign = 1);
RepModel principal_series_model();

// ---- published spectra -----------------------------------------------------

// Monic charpolys with the table's roots (square-root entries as u^2 - r),
// and the quartic as prod(1 - r u) over its reciprocal roots.
struct ExpectedSpectrum {
  LPoly LI, LP1, LP2, quartic;
};
ExpectedSpectrum table3_expected(RepType t, int sign);

// The table's root lists. LI_sq entries R stand for the eigenvalue pair
// +-sqrt(R); quartic entries are reciprocal roots of the quartic factor.
struct SpectrumRoots {
  std::vector<LaurentPoly> LI_lin, LI_sq, LP1, LP2, quartic;
};
SpectrumRoots table3_roots(RepType t, int sign);

struct OperatorCheck {
  std::string op;
  std::string computed, expected;
  bool ok = false;
};
struct Table3Row {
  RepType type = RepType::I;
  ParahoricDims dims;
  bool dims_ok = false;
  std::vector<OperatorCheck> spectra;  // rendered for sign +1; ok covers both signs
  std::string contribution;
  bool contribution_ok = false;
  bool pass = false;
};
std::vector<Table3Row> table3_verify(const std::vector<RepType>& types = all_rep_types());

// ---- contributions ----------------------------------------------------------

// A rational function of u, num/den, both with constant term 1.
struct RatFunc {
  LPoly num, den;
};
bool rat_equal(const RatFunc& a, const RatFunc& b);
RatFunc rat_mul(const RatFunc& a, const RatFunc& b);
std::string to_string(const RatFunc& r);

struct ZetaContribution {
  RepType type = RepType::I;
  int sign = 1;
  RatFunc raw;      // det(I - L_I u) quartic / (det(I - L_P1 u) det(I - L_P2 u^2))
  RatFunc reduced;  // after cancelling common Euler factors
};
ZetaContribution contribution(const RepModel& m);
ZetaContribution contribution(RepType t, int sign = 1);
// Per-representation values stated in the text; for IVd, VIa, VIb, VIc,
// VId only pair totals are stated and the per-sign value is the frozen one.
RatFunc expected_contribution(RepType t, int sign);
// contribution(t, +1) * contribution(t, -1), reduced.
RatFunc paired_contribution(RepType t);
// Exponents (a, b) with paired product (1 - u^2)^a (1 - q^2 u^2)^b, searched
// in [-4, 4]; nullopt if the product has another shape.
std::optional<std::pair<int, int>> pair_exponents(RepType t);

// ---- multiplicity bookkeeping ----------------------------------------------

// Linear combination of named symbols with coefficients polynomial in v.
using LinearForm = std::map<std::string, LaurentPoly>;
std::string to_string(const LinearForm& f);
// a + k b, dropping zero coefficients.
LinearForm lf_add(LinearForm a, const LinearForm& b, const LaurentPoly& k = LaurentPoly(1));
// f with the symbol `sym` replaced by the form `by`.
LinearForm lf_subst(const LinearForm& f, const std::string& sym, const LinearForm& by);

struct LedgerRow {
  RepType type = RepType::I;
  ParahoricDims dims;
  int C1 = 0, C2 = 0;
  bool C1_ok = false, C2_ok = false;
  std::optional<std::pair<int, int>> pair_exponents;
  bool pairing_ok = false;  // pair exponents equal (C1, C2 - C1)
};
struct MultiplicityLedger {
  std::vector<LedgerRow> rows;
  bool C1_vanishes_off_IV = false;
  LinearForm m_from_table;      // sum (C2 - C1) m_t with m_IVd = 2 substituted
  LinearForm m_stated;          // -m_IIa + m_IIb - m_Vbc + 2 m_Vd - m_VIc + m_VId + 2
  LinearForm steinberg;         // multiplicity of each sigma St in chi and constants
  LinearForm m_in_counts;       // m in terms of N_p
  bool m_formula_ok = false;
  bool steinberg_ok = false;
  bool m_in_counts_ok = false;
  bool pass = false;
};
MultiplicityLedger multiplicity_ledger();

}  // namespace spgeo
