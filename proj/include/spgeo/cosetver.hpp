#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spgeo/lattice.hpp"
#include "spgeo/localgroup.hpp"

namespace spgeo {

enum class HeckeOp { A1, A2, LP1, LP2, LI };

std::string to_string(HeckeOp op);
std::optional<HeckeOp> parse_hecke_op(const std::string& s);
const std::vector<HeckeOp>& all_hecke_ops();

// Left coset representatives of H d H / H for the operator's parahoric H.
struct CosetFamily {
  HeckeOp op = HeckeOp::A1;
  SubgroupId parabolic = SubgroupId::K;
  long p = 2;
  std::vector<GroupElem> reps;
  std::vector<std::string> labels;  // family index and parameters, for witnesses
};

struct FamilyOptions {
  // Added to the unit lift gamma of the A2 family carrying beta^2/gamma.
  long unit_shift = 0;
  // The fourth A2 family as usually displayed puts alpha in the corner (1,4);
  // at beta = 0 that coincides with the beta^2/gamma family and the coset
  // pi*I + alpha*E_23 is never reached. The default places alpha at (2,3).
  bool a2_corner_alpha = false;
};

// Parameters run over lifts {0..p-1} (or {0..p^2-1}); unit parameters skip 0.
CosetFamily generate_family(HeckeOp op, long p, const FamilyOptions& opts = {});

// q^3+q^2+q+1, q^4+q^3+q^2+q, q^3, q^4, q^2.
long expected_count(HeckeOp op, long p);

// The double coset's defining element: diag(1,1,p,p), diag(1,p,p,p^2), or t.
GroupElem double_coset_element(HeckeOp op, long p);

// Bases of the lattices whose joint stabilizer (mod Z) is the parahoric:
// K -> {L0}, P1 -> {L0, L2}, P2 -> {L0, L3}, I -> {L0, L2, L3}.
std::vector<QMatrix> flag_bases(SubgroupId H, long p);

// Relative position of the flag g F against F: elementary divisors of
// B_i^-1 g B_j for all ordered pairs, plus ord lambda(g). Constant on H g H.
struct RelativePosition {
  int lambda_valuation = 0;
  std::vector<std::vector<int>> divisors;
  friend bool operator==(const RelativePosition&, const RelativePosition&) = default;
};
RelativePosition relative_position(const GroupElem& g, SubgroupId H);

struct CheckReport {
  bool pass = true;
  long checks = 0;
  std::vector<std::string> witnesses;
  void fail(std::string w) {
    pass = false;
    if (witnesses.size() < 16) witnesses.push_back(std::move(w));
  }
};

// Pairwise distinct left cosets modulo the center.
CheckReport verify_disjoint(const CosetFamily& f);
// Every representative lies in H d H, by the relative-position test.
CheckReport verify_membership(const CosetFamily& f);
// Images of the base simplex against the ball's combinatorial description of
// the operator's neighbors. Requires radius >= 2 and matching p.
CheckReport cross_check_geometry(const CosetFamily& f, const BuildingBall& b);

// Vertex of the class, passing to the dual for type-1 classes.
VertexLabel vertex_of(const LatticeClass& L);

}  // namespace spgeo
