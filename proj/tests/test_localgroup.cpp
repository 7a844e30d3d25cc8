#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "spgeo/localgroup.hpp"

using namespace spgeo;
using testgen::Gen;
using testgen::random_G;
using testgen::random_K;

namespace {

// Oracle for the similitude relation, written out entrywise.
Rational pairing(const QMatrix& g, int a, int b) {
  // <col a, col b> with <e1,f2> = <e2,f1> = 1.
  auto c = [&](int i, int j) { return g(i, j); };
  return c(0, a) * c(3, b) + c(1, a) * c(2, b) - c(2, a) * c(1, b) - c(3, a) * c(0, b);
}

}  // namespace

TEST_CASE("similitude factor") {
  CHECK(similitude(symplectic_form(), 2).value == Rational(1));
  CHECK(pairing(symplectic_form(), 0, 3) == Rational(1));
  auto d = similitude(diag_matrix({1, 1, 5, 5}), 5);
  CHECK(d.value == Rational(5));
  CHECK(d.valuation() == 1);
  CHECK_THROWS_AS(similitude(diag_matrix({1, 1, 1, 2}), 2), NotSimilitudeError);
  CHECK_THROWS_AS(GroupElem(QMatrix::identity(4).scaled(0), 3), NotSimilitudeError);
  CHECK(LocalScalar{Rational(0), 3}.valuation() == kInfiniteValuation);
  CHECK(LocalScalar{Rational(18, 7), 3}.valuation() == 2);
}

TEST_CASE("similitude agrees with the entrywise pairing oracle") {
  Gen g(21);
  for (int i = 0; i < 100; ++i) {
    GroupElem x = random_G(g, 3);
    const QMatrix& m = x.matrix();
    CHECK(pairing(m, 0, 3) == x.lambda());
    CHECK(pairing(m, 1, 2) == x.lambda());
    CHECK(pairing(m, 0, 1).is_zero());
    CHECK(pairing(m, 2, 3).is_zero());
    CHECK(pairing(m, 0, 2).is_zero());
    CHECK(pairing(m, 1, 3).is_zero());
  }
}

TEST_CASE("named elements and membership examples") {
  const long p = 2;
  GroupElem id(QMatrix::identity(4), p);
  CHECK(is_member(id, SubgroupId::I));
  CHECK(is_member(elem_s1(p), SubgroupId::P1));
  CHECK_FALSE(is_member(elem_s1(p), SubgroupId::I));
  CHECK(is_member(elem_s2(p), SubgroupId::P2));
  CHECK_FALSE(is_member(elem_s2(p), SubgroupId::P1));
  CHECK_FALSE(is_member(elem_s1(p), SubgroupId::P2));
  // The displayed tau pairs pi*f1 with e2, so lambda(tau) = -p; only its valuation matters.
  CHECK(elem_tau(p).lambda() == Rational(-p));
  CHECK(elem_tau(p).similitude().valuation() == 1);
  CHECK_FALSE(is_member(elem_tau(p), SubgroupId::K));
  CHECK(is_member(elem_tau(p), SubgroupId::P02) == false);  // lambda(tau) = -p is not a unit
  CHECK(elem_tau(p) * elem_tau(p) == GroupElem(QMatrix::identity(4).scaled(p), p));
  CHECK(is_member(elem_tau(p) * elem_tau(p), SubgroupId::Z));
  CHECK(is_member(elem_J(p), SubgroupId::K));
  CHECK(is_member(elem_diag({1, 1, p, p}, p), SubgroupId::B));
  CHECK_FALSE(is_member(elem_s1(p), SubgroupId::B));
  CHECK(is_member(elem_diag({1, p, p, p * p}, p), SubgroupId::G0));
  CHECK_FALSE(is_member(elem_tau(p), SubgroupId::G0));
  // P02 contains elements with a p^-1 corner entry.
  GroupElem corner(QMatrix(4, 4, {1, 0, 0, Rational(1, p), 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 1}), p);
  CHECK(is_member(corner, SubgroupId::P02));
  CHECK_FALSE(is_member(corner, SubgroupId::K));
}

TEST_CASE("same_coset examples") {
  const long p = 3;
  Gen g(22);
  GroupElem x = random_G(g, p);
  GroupElem z = elem_diag({3, 3, 3, 3}, p);
  GroupElem id(QMatrix::identity(4), p);
  CHECK(same_coset(x, x * z, SubgroupId::K, true));
  CHECK_FALSE(same_coset(x, x * z, SubgroupId::K, false));
  CHECK_FALSE(same_coset(id, elem_s1(p), SubgroupId::I, true));
  CHECK_FALSE(same_coset(id, elem_diag({1, 1, p, p}, p), SubgroupId::K, true));
  CHECK(same_coset(id, elem_s1(p), SubgroupId::P1, true));
  for (int i = 0; i < 30; ++i) {
    GroupElem k = random_K(g, p);
    CHECK(same_coset(x, x * k, SubgroupId::K, false));
    CHECK(same_coset(x, x * k.scaled(Rational(1, 9)), SubgroupId::K, true));
  }
}

TEST_CASE("Weyl elements") {
  const long p = 2;
  auto W = weyl_elements(p);
  REQUIRE(W.size() == 8);
  GroupElem id(QMatrix::identity(4), p);
  CHECK(W[0] == id);
  CHECK(elem_s1(p) * elem_s1(p) == id);
  // s2^2 is the torus element diag(1,-1,-1,1), not central.
  GroupElem s2sq = elem_s2(p) * elem_s2(p);
  CHECK(s2sq == elem_diag({1, -1, -1, 1}, p));
  CHECK_FALSE(is_member(s2sq, SubgroupId::Z));
  // Distinct modulo the center and modulo the diagonal torus (support patterns).
  std::set<std::vector<int>> supports;
  for (size_t i = 0; i < W.size(); ++i) {
    std::vector<int> s;
    for (const auto& e : W[i].matrix().entries()) s.push_back(e.is_zero() ? 0 : 1);
    supports.insert(s);
    for (size_t j = 0; j < i; ++j) CHECK_FALSE(same_coset(W[i], W[j], SubgroupId::Z, false));
  }
  CHECK(supports.size() == 8);
  CHECK(weyl_names()[3] == "s1s2");
  for (const auto& w : W) CHECK(is_member(w, SubgroupId::K));
}

TEST_CASE("lambda is multiplicative and K is closed") {
  Gen g(23);
  for (long p : {2L, 3L, 5L}) {
    for (int i = 0; i < 60; ++i) {
      GroupElem a = random_G(g, p), b = random_G(g, p);
      CHECK((a * b).lambda() == a.lambda() * b.lambda());
      CHECK(similitude((a * b).matrix(), p).value == a.lambda() * b.lambda());
      GroupElem k1 = random_K(g, p), k2 = random_K(g, p);
      REQUIRE(is_member(k1, SubgroupId::K));
      CHECK(is_member(k1 * k2, SubgroupId::K));
      CHECK(is_member(k1.inverse(), SubgroupId::K));
      CHECK(k1 * k1.inverse() == GroupElem(QMatrix::identity(4), p));
      CHECK(qinverse(a.matrix()) == a.inverse().matrix());
    }
  }
}

TEST_CASE("G = G0 union G0 tau, and tau^2 is central") {
  Gen g(24);
  for (long p : {2L, 3L, 5L}) {
    GroupElem tau = elem_tau(p);
    CHECK(tau * tau == GroupElem(QMatrix::identity(4).scaled(p), p));
    for (int i = 0; i < 60; ++i) {
      GroupElem x = random_G(g, p);
      int r = ((x.det_valuation() % 4) + 4) % 4;
      CHECK((r == 0 || r == 2));
      bool a = is_member(x, SubgroupId::G0);
      bool b = is_member(x * tau.inverse(), SubgroupId::G0);
      CHECK(a != b);
    }
  }
}

TEST_CASE("parahoric containments on random elements") {
  Gen g(25);
  const long p = 3;
  GroupElem s1 = elem_s1(p), s2 = elem_s2(p);
  for (int i = 0; i < 200; ++i) {
    GroupElem k = random_K(g, p);
    bool inI = is_member(k, SubgroupId::I);
    bool in1 = is_member(k, SubgroupId::P1);
    bool in2 = is_member(k, SubgroupId::P2);
    CHECK(inI == (in1 && in2));  // I = P1 cap P2
    if (in2) CHECK(is_member(k, SubgroupId::P02));  // P2 = K cap P02
    if (inI) {
      CHECK(is_member(k * s1, SubgroupId::P1));
      CHECK_FALSE(is_member(k * s1, SubgroupId::I));
      CHECK(is_member(k * s2, SubgroupId::P2));
    }
  }
}
