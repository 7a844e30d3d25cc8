#include <map>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "spgeo/cosetver.hpp"

using namespace spgeo;
using testgen::Gen;
using testgen::random_K;

namespace {

std::map<std::string, int> per_family(const CosetFamily& f) {
  std::map<std::string, int> m;
  for (const auto& l : f.labels) ++m[l.substr(0, l.find(' '))];
  return m;
}

const BuildingBall& cached_ball(long p) {
  static std::map<long, BuildingBall> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, ball(2, p)).first;
  return it->second;
}

}  // namespace

TEST_CASE("family sizes") {
  for (long p : {2L, 3L, 5L})
    for (HeckeOp op : all_hecke_ops()) {
      CosetFamily f = generate_family(op, p);
      CHECK(static_cast<long>(f.reps.size()) == expected_count(op, p));
      CHECK(f.labels.size() == f.reps.size());
    }
  CHECK(per_family(generate_family(HeckeOp::A1, 2)) ==
        std::map<std::string, int>{{"A1.1", 8}, {"A1.2", 4}, {"A1.3", 2}, {"A1.4", 1}});
  CHECK(per_family(generate_family(HeckeOp::A2, 2)) ==
        std::map<std::string, int>{{"A2.1", 16}, {"A2.2", 8}, {"A2.3", 2}, {"A2.4", 1}, {"A2.5", 2}, {"A2.6", 1}});
  CHECK(expected_count(HeckeOp::A2, 2) == 30);
  CHECK(generate_family(HeckeOp::LI, 3).reps.size() == 9);
  CHECK(generate_family(HeckeOp::LP2, 2).reps.size() == 16);
  CHECK(parse_hecke_op("LP2") == HeckeOp::LP2);
  CHECK_FALSE(parse_hecke_op("A3").has_value());
}

TEST_CASE("representatives are pairwise in distinct cosets") {
  for (long p : {2L, 3L})
    for (HeckeOp op : all_hecke_ops()) {
      CAPTURE(p);
      CAPTURE(to_string(op));
      CosetFamily f = generate_family(op, p);
      CheckReport r = verify_disjoint(f);
      CHECK(r.pass);
      long n = static_cast<long>(f.reps.size());
      CHECK(r.checks == n * (n - 1) / 2);
    }
  CosetFamily a1 = generate_family(HeckeOp::A1, 2);
  CHECK(verify_disjoint(a1).checks == 105);
  // Negative control: a duplicated representative is caught and named.
  a1.reps.push_back(a1.reps[3]);
  a1.labels.push_back("dup");
  CheckReport bad = verify_disjoint(a1);
  CHECK_FALSE(bad.pass);
  REQUIRE(bad.witnesses.size() == 1);
  CHECK(bad.witnesses[0] == "same coset: " + a1.labels[3] + " | dup");
  // A right multiple by the parahoric is the same coset too.
  CosetFamily lp1 = generate_family(HeckeOp::LP1, 3);
  lp1.reps.push_back(lp1.reps[5] * elem_s1(3));
  lp1.labels.push_back("shifted");
  CHECK_FALSE(verify_disjoint(lp1).pass);
}

TEST_CASE("representatives lie in the double coset") {
  for (long p : {2L, 3L, 5L})
    for (HeckeOp op : all_hecke_ops()) {
      CAPTURE(p);
      CAPTURE(to_string(op));
      CheckReport r = verify_membership(generate_family(op, p));
      CHECK(r.pass);
      CHECK(r.checks == expected_count(op, p));
    }
  // Invariant factors read directly off the representatives.
  for (const auto& g : generate_family(HeckeOp::A1, 2).reps) {
    CHECK(smith_valuations(g.matrix(), 2) == std::vector<int>{0, 0, 1, 1});
    CHECK(g.similitude().valuation() == 1);
  }
  for (const auto& g : generate_family(HeckeOp::A2, 3).reps) {
    CHECK(smith_valuations(g.matrix(), 3) == std::vector<int>{0, 1, 1, 2});
    CHECK(g.similitude().valuation() == 2);
  }
  // Negative control: the identity is not in K diag(1,1,p,p) K.
  CosetFamily f = generate_family(HeckeOp::A1, 2);
  f.reps.emplace_back(QMatrix::identity(4), 2);
  f.labels.push_back("identity");
  CheckReport r = verify_membership(f);
  CHECK_FALSE(r.pass);
  CHECK(r.witnesses == std::vector<std::string>{"outside the double coset: identity"});
}

TEST_CASE("the corner placement of alpha in the fourth A2 family collides with the fifth") {
  for (long p : {2L, 3L}) {
    CosetFamily f = generate_family(HeckeOp::A2, p, {.a2_corner_alpha = true});
    CHECK(verify_membership(f).pass);
    CheckReport r = verify_disjoint(f);
    CHECK_FALSE(r.pass);
    CHECK(r.witnesses.size() == static_cast<size_t>(p - 1));
    CHECK(r.witnesses[0] == "same coset: A2.4 alpha=1 | A2.5 beta=0 gamma=1");
    CHECK_FALSE(cross_check_geometry(f, cached_ball(p)).pass);
  }
}

TEST_CASE("the relative-position test separates Iwahori double cosets inside K t K") {
  for (long p : {2L, 3L}) {
    GroupElem t = elem_t(p);
    RelativePosition pos = relative_position(t, SubgroupId::I);
    for (const auto& w : weyl_elements(p)) {
      GroupElem x = w * t;
      bool in_ItI = is_member(w, SubgroupId::I);
      CHECK((relative_position(x, SubgroupId::I) == pos) == in_ItI);
    }
    // Invariance under the parahoric on both sides.
    Gen g(41);
    for (int i = 0; i < 20; ++i) {
      GroupElem k = random_K(g, p);
      CHECK(relative_position(k * elem_diag({1, 1, p, p}, p) * random_K(g, p), SubgroupId::K) ==
            relative_position(elem_diag({1, 1, p, p}, p), SubgroupId::K));
      if (is_member(k, SubgroupId::I)) CHECK(relative_position(k * t, SubgroupId::I) == pos);
    }
  }
}

TEST_CASE("the A2 family does not depend on the unit lift") {
  for (long p : {2L, 3L, 5L}) {
    CosetFamily a = generate_family(HeckeOp::A2, p), b = generate_family(HeckeOp::A2, p, {.unit_shift = p});
    CHECK(verify_membership(b).pass);
    if (p < 5) CHECK(verify_disjoint(b).pass);
    REQUIRE(a.reps.size() == b.reps.size());
    for (size_t i = 0; i < a.reps.size(); ++i) CHECK(same_coset(a.reps[i], b.reps[i], SubgroupId::K, true));
  }
}

TEST_CASE("geometric images match the ball") {
  for (long p : {2L, 3L}) {
    const BuildingBall& b = cached_ball(p);
    for (HeckeOp op : all_hecke_ops()) {
      CAPTURE(p);
      CAPTURE(to_string(op));
      CheckReport r = cross_check_geometry(generate_family(op, p), b);
      CHECK(r.pass);
      for (const auto& w : r.witnesses) MESSAGE(w);
    }
  }
  // Basepoint facts behind the edge and chamber pictures.
  const long p = 2;
  for (const auto& g : generate_family(HeckeOp::LP1, p).reps) CHECK(act(g, standard_lattice(0, p)) == standard_lattice(2, p));
  for (const auto& g : generate_family(HeckeOp::LI, p).reps) CHECK(act(g, standard_lattice(0, p)) == standard_lattice(2, p));
  CHECK_THROWS_AS(cross_check_geometry(generate_family(HeckeOp::A1, 2), ball(1, 2)), std::invalid_argument);
}

TEST_CASE("A1 images are stable under K") {
  const long p = 3;
  Gen g(42);
  CosetFamily f = generate_family(HeckeOp::A1, p);
  std::set<LatticeClass> base;
  for (const auto& x : f.reps) base.insert(act(x, standard_lattice(0, p)));
  CHECK(base.size() == f.reps.size());
  for (int i = 0; i < 20; ++i) {
    GroupElem k = random_K(g, p);
    std::set<LatticeClass> moved;
    for (const auto& x : f.reps) moved.insert(act(k * x, standard_lattice(0, p)));
    CHECK(moved == base);
  }
}
