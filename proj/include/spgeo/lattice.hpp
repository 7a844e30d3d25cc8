#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "spgeo/localgroup.hpp"

namespace spgeo {

// Row-major 4x4 integer matrix whose columns are a lattice basis.
using IntMat4 = std::array<int64_t, 16>;
using IntVec4 = std::array<int64_t, 4>;

class NotAVertexError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Homothety class of a rank-4 Z_p-lattice in Q_p^4, stored as its canonical
// basis: lower triangular, diagonal p^k_i, entries below the diagonal reduced
// into [0, p^k_row), scaled by a power of p so that some entry is a unit.
// Equal classes have identical canonical matrices.
class LatticeClass {
 public:
  // Columns of `basis` span the lattice; basis must be invertible.
  static LatticeClass from_basis(const QMatrix& basis, long p);
  // Lattice spanned by integer generators that contain p^M Z_p^4.
  static LatticeClass from_generators(const std::vector<IntVec4>& gens, int M, long p);

  long p() const { return p_; }
  const IntMat4& canonical() const { return m_; }
  int64_t at(int i, int j) const { return m_[static_cast<size_t>(i * 4 + j)]; }
  IntVec4 column(int j) const { return {at(0, j), at(1, j), at(2, j), at(3, j)}; }
  // Exponents k_i of the diagonal entries; their sum is ord_p det.
  const std::array<int, 4>& diagonal_exponents() const { return k_; }
  int det_valuation() const { return k_[0] + k_[1] + k_[2] + k_[3]; }
  int type_mod4() const { return det_valuation() % 4; }
  QMatrix basis() const;
  std::string str() const;

  friend bool operator==(const LatticeClass& a, const LatticeClass& b) { return a.p_ == b.p_ && a.m_ == b.m_; }
  friend bool operator<(const LatticeClass& a, const LatticeClass& b) {
    return a.p_ != b.p_ ? a.p_ < b.p_ : a.m_ < b.m_;
  }

 private:
  LatticeClass(IntMat4 m, std::array<int, 4> k, long p) : m_(m), k_(k), p_(p) {}
  IntMat4 m_{};
  std::array<int, 4> k_{};
  long p_ = 2;
};

struct IntMat4Hash {
  size_t operator()(const IntMat4& m) const noexcept;
};

// Valuations of the elementary divisors of a nonsingular rational matrix over
// Z_p, ascending. Min-valuation full pivoting keeps every step unimodular.
std::vector<int> smith_valuations(const QMatrix& m, long p);

// Elementary divisors of the Gram matrix B^T J B of the canonical basis.
std::array<int, 4> gram_divisors(const LatticeClass& L);

// Special and primitive: the Gram matrix is p^(2j) times a unimodular matrix.
bool is_primitive(const LatticeClass& L);
// 0, 2, 3 for vertices; nullopt for type-1 classes and non-vertex lattices.
std::optional<int> vertex_type_of(const LatticeClass& L);
// Throws NotAVertexError where vertex_type_of is nullopt.
int vertex_type(const LatticeClass& L);
// Class of {v : <v, L> in Z_p}, basis J B^-T.
LatticeClass dual_class(const LatticeClass& L);
// g.[L].
LatticeClass act(const GroupElem& g, const LatticeClass& L);

// L0 = Z_p^4, L2 = <e1,e2,p f1,p f2>, L3 = <e1,p e2,p f1,p f2>, L1 = <e1,e2,f1,p f2>.
LatticeClass standard_lattice(int i, long p);

// A building vertex. Special vertices carry one class; non-special vertices
// carry the type-3 class and its dual (a type-1 class), and are identified
// by the lexicographically smaller of the two canonical matrices.
struct VertexLabel {
  LatticeClass cls;
  std::optional<LatticeClass> dual;
  int vtype = 0;

  // Classifies a class; type-1 and non-vertex classes throw NotAVertexError.
  static VertexLabel make(const LatticeClass& L);
  static VertexLabel nonspecial(const LatticeClass& type3, const LatticeClass& type1);

  bool special() const { return vtype != 3; }
  const LatticeClass& key() const { return dual && *dual < cls ? *dual : cls; }
  friend bool operator==(const VertexLabel& a, const VertexLabel& b) { return a.key() == b.key(); }
  friend bool operator<(const VertexLabel& a, const VertexLabel& b) {
    return a.vtype != b.vtype ? a.vtype < b.vtype : a.key() < b.key();
  }
};

struct Neighbor {
  VertexLabel v;
  int edge_type;  // 1: special-special, 2: special-non-special
};

// Full star of a vertex, in a deterministic order.
std::vector<Neighbor> neighbors(const VertexLabel& v);

// Class of <p^a1 e1, p^a2 e2, p^b1 f1, p^b2 f2>.
VertexLabel figure1_label(int a1, int a2, int b1, int b2, long p);

struct BallEdge {
  int a, b, type;  // a < b
  friend auto operator<=>(const BallEdge&, const BallEdge&) = default;
};

// Vertices within 1-skeleton distance `radius` of the fundamental chamber
// {L0, L2, L3}, with every building edge and chamber among them. Vertices
// are sorted by (distance, type, key); edges and chambers by index tuples.
struct BuildingBall {
  long p = 2;
  int radius = 0;
  std::vector<VertexLabel> vertices;
  std::vector<int> distance;
  std::vector<BallEdge> edges;
  std::vector<std::array<int, 3>> chambers;
  std::vector<std::vector<int>> adjacency;  // sorted vertex indices

  std::optional<int> index_of(const VertexLabel& v) const;
  std::optional<int> index_of(const LatticeClass& key) const;
  bool adjacent(int a, int b) const;
  // Number of chambers containing the edge {a, b}.
  int chambers_on_edge(int a, int b) const;

  std::unordered_map<IntMat4, int, IntMat4Hash> index;
};

class ResourceCapError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr size_t kDefaultBallVertexCap = 2'000'000;

// radius <= 3, p in {2, 3, 5}.
BuildingBall ball(int radius, long p, size_t vertex_cap = kDefaultBallVertexCap);

// Local structure at every ball vertex, from independently computed stars:
// a special vertex has q^3+q^2+q+1 edges of each type, a non-special vertex
// 2(q+1) type-2 edges split evenly between primitive and type-2 special
// vertices. Vertices strictly inside the radius must have their whole star
// in the ball, and edges touching them must lie in exactly q+1 chambers.
struct LocalStructureReport {
  bool pass = true;
  long special_checked = 0, nonspecial_checked = 0, interior_edges_checked = 0;
  std::vector<std::string> witnesses;
};
LocalStructureReport check_local_structure(const BuildingBall& b);

// Deterministic JSON export (vertices with canonical matrix, type and distance;
// edges as index pairs with type; chambers as index triples).
std::string ball_to_json(const BuildingBall& b);

}  // namespace spgeo
