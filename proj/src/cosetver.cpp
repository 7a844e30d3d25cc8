#include "spgeo/cosetver.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace spgeo {

std::string to_string(HeckeOp op) {
  switch (op) {
    case HeckeOp::A1: return "A1";
    case HeckeOp::A2: return "A2";
    case HeckeOp::LP1: return "LP1";
    case HeckeOp::LP2: return "LP2";
    case HeckeOp::LI: return "LI";
  }
  return "?";
}

std::optional<HeckeOp> parse_hecke_op(const std::string& s) {
  for (HeckeOp op : all_hecke_ops())
    if (to_string(op) == s) return op;
  return std::nullopt;
}

const std::vector<HeckeOp>& all_hecke_ops() {
  static const std::vector<HeckeOp> ops{HeckeOp::A1, HeckeOp::A2, HeckeOp::LP1, HeckeOp::LP2, HeckeOp::LI};
  return ops;
}

namespace {

SubgroupId parahoric_of(HeckeOp op) {
  switch (op) {
    case HeckeOp::A1:
    case HeckeOp::A2: return SubgroupId::K;
    case HeckeOp::LP1: return SubgroupId::P1;
    case HeckeOp::LP2: return SubgroupId::P2;
    case HeckeOp::LI: return SubgroupId::I;
  }
  return SubgroupId::K;
}

std::string label(const char* fam, std::initializer_list<std::pair<const char*, long>> params) {
  std::string s = fam;
  for (auto [name, v] : params) s += std::string(" ") + name + "=" + std::to_string(v);
  return s;
}

struct Builder {
  CosetFamily& f;
  void add(std::initializer_list<Rational> entries, std::string lbl) {
    f.reps.emplace_back(QMatrix(4, 4, entries), f.p);
    f.labels.push_back(std::move(lbl));
  }
};

}  // namespace

CosetFamily generate_family(HeckeOp op, long p, const FamilyOptions& opts) {
  const long unit_shift = opts.unit_shift;
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("coset families are generated for p in {2, 3, 5}");
  CosetFamily f;
  f.op = op;
  f.parabolic = parahoric_of(op);
  f.p = p;
  Builder B{f};
  const Rational P(p), P2(p * p);
  const long q = p, q2 = p * p;
  switch (op) {
    case HeckeOp::A1:
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
          for (long c = 0; c < q; ++c)
            B.add({P, 0, b, a, 0, P, c, b, 0, 0, 1, 0, 0, 0, 0, 1}, label("A1.1", {{"a", a}, {"b", b}, {"c", c}}));
      for (long al = 0; al < q; ++al)
        for (long be = 0; be < q; ++be)
          B.add({P, -al, 0, be, 0, 1, 0, 0, 0, 0, P, al, 0, 0, 0, 1}, label("A1.2", {{"alpha", al}, {"beta", be}}));
      for (long g = 0; g < q; ++g) B.add({1, 0, 0, 0, 0, P, g, 0, 0, 0, 1, 0, 0, 0, 0, P}, label("A1.3", {{"gamma", g}}));
      B.add({1, 0, 0, 0, 0, 1, 0, 0, 0, 0, P, 0, 0, 0, 0, P}, "A1.4");
      break;
    case HeckeOp::A2:
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
          for (long c = 0; c < q2; ++c)
            B.add({P2, -P * a, P * b, c, 0, P, 0, b, 0, 0, P, a, 0, 0, 0, 1},
                  label("A2.1", {{"a", a}, {"b", b}, {"c", c}}));
      for (long u = 0; u < q; ++u)
        for (long v = 0; v < q2; ++v)
          B.add({P, 0, u, 0, 0, P2, v, P * u, 0, 0, 1, 0, 0, 0, 0, P}, label("A2.2", {{"u", u}, {"v", v}}));
      for (long w = 0; w < q; ++w)
        B.add({P, -w, 0, 0, 0, 1, 0, 0, 0, 0, P2, P * w, 0, 0, 0, P}, label("A2.3", {{"w", w}}));
      for (long al = 1; al < q; ++al) {
        if (opts.a2_corner_alpha) {
          B.add({P, 0, 0, al, 0, P, 0, 0, 0, 0, P, 0, 0, 0, 0, P}, label("A2.4", {{"alpha", al}}));
        } else {
          B.add({P, 0, 0, 0, 0, P, al, 0, 0, 0, P, 0, 0, 0, 0, P}, label("A2.4", {{"alpha", al}}));
        }
      }
      for (long be = 0; be < q; ++be)
        for (long g = 1; g < q; ++g) {
          Rational gam(g + unit_shift);
          Rational be2 = Rational(be * be) / gam;
          B.add({P, 0, be, gam, 0, P, be2, be, 0, 0, P, 0, 0, 0, 0, P},
                label("A2.5", {{"beta", be}, {"gamma", g + unit_shift}}));
        }
      B.add({1, 0, 0, 0, 0, P, 0, 0, 0, 0, P, 0, 0, 0, 0, P2}, "A2.6");
      break;
    case HeckeOp::LP1:
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
          for (long c = 0; c < q; ++c)
            B.add({1, 0, 0, 0, 0, 1, 0, 0, P * b, P * a, P, 0, P * c, P * b, 0, P},
                  label("LP1", {{"a", a}, {"b", b}, {"c", c}}));
      break;
    case HeckeOp::LP2:
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
          for (long c = 0; c < q2; ++c)
            B.add({1, 0, 0, 0, -P * a, P, 0, 0, P * b, 0, P, 0, P * c, P2 * b, P2 * a, P2},
                  label("LP2", {{"a", a}, {"b", b}, {"c", c}}));
      break;
    case HeckeOp::LI:
      for (long a = 0; a < q; ++a)
        for (long b = 0; b < q; ++b)
          B.add({1, 0, 0, 0, 0, 0, 1, 0, P * b, -P, 0, 0, P * a, 0, P * b, P}, label("LI", {{"a", a}, {"b", b}}));
      break;
  }
  return f;
}

long expected_count(HeckeOp op, long q) {
  switch (op) {
    case HeckeOp::A1: return q * q * q + q * q + q + 1;
    case HeckeOp::A2: return q * q * q * q + q * q * q + q * q + q;
    case HeckeOp::LP1: return q * q * q;
    case HeckeOp::LP2: return q * q * q * q;
    case HeckeOp::LI: return q * q;
  }
  return 0;
}

GroupElem double_coset_element(HeckeOp op, long p) {
  switch (op) {
    case HeckeOp::A1:
    case HeckeOp::LP1: return elem_diag({1, 1, p, p}, p);
    case HeckeOp::A2:
    case HeckeOp::LP2: return elem_diag({1, p, p, p * p}, p);
    case HeckeOp::LI: return elem_t(p);
  }
  throw std::logic_error("unknown operator");
}

std::vector<QMatrix> flag_bases(SubgroupId H, long p) {
  QMatrix b0 = QMatrix::identity(4), b2 = diag_matrix({1, 1, p, p}), b3 = diag_matrix({1, p, p, p});
  switch (H) {
    case SubgroupId::K: return {b0};
    case SubgroupId::P1: return {b0, b2};
    case SubgroupId::P2: return {b0, b3};
    case SubgroupId::I: return {b0, b2, b3};
    default: throw std::invalid_argument("relative position is defined for K, P1, P2 and I");
  }
}

RelativePosition relative_position(const GroupElem& g, SubgroupId H) {
  auto bases = flag_bases(H, g.p());
  RelativePosition r;
  r.lambda_valuation = g.similitude().valuation();
  for (const auto& bi : bases) {
    QMatrix left = qinverse(bi) * g.matrix();
    for (const auto& bj : bases) r.divisors.push_back(smith_valuations(left * bj, g.p()));
  }
  return r;
}

CheckReport verify_disjoint(const CosetFamily& f) {
  CheckReport r;
  std::vector<GroupElem> inv;
  inv.reserve(f.reps.size());
  for (const auto& g : f.reps) inv.push_back(g.inverse());
  for (size_t i = 0; i < f.reps.size(); ++i)
    for (size_t j = i + 1; j < f.reps.size(); ++j) {
      ++r.checks;
      if (is_member_mod_center(inv[i] * f.reps[j], f.parabolic))
        r.fail("same coset: " + f.labels[i] + " | " + f.labels[j]);
    }
  return r;
}

CheckReport verify_membership(const CosetFamily& f) {
  CheckReport r;
  RelativePosition target = relative_position(double_coset_element(f.op, f.p), f.parabolic);
  for (size_t i = 0; i < f.reps.size(); ++i) {
    ++r.checks;
    if (!(relative_position(f.reps[i], f.parabolic) == target)) r.fail("outside the double coset: " + f.labels[i]);
  }
  return r;
}

VertexLabel vertex_of(const LatticeClass& L) {
  if (L.type_mod4() == 1) return VertexLabel::nonspecial(dual_class(L), L);
  return VertexLabel::make(L);
}

namespace {

using Simplex = std::vector<int>;

bool has_common(const BuildingBall& b, const std::vector<int>& vs, int vtype) {
  std::vector<int> common = b.adjacency[static_cast<size_t>(vs[0])];
  for (size_t k = 1; k < vs.size(); ++k) {
    std::vector<int> next;
    const auto& l = b.adjacency[static_cast<size_t>(vs[k])];
    std::set_intersection(common.begin(), common.end(), l.begin(), l.end(), std::back_inserter(next));
    common.swap(next);
  }
  for (int c : common)
    if (b.vertices[static_cast<size_t>(c)].vtype == vtype) return true;
  return false;
}

// Simplices the operator's neighbors must fill out, read from the ball.
std::set<Simplex> expected_images(HeckeOp op, const BuildingBall& b, int L0, int L2, int L3) {
  auto vt = [&](int i) { return b.vertices[static_cast<size_t>(i)].vtype; };
  const auto& adj = b.adjacency;
  std::set<Simplex> out;
  switch (op) {
    case HeckeOp::A1:
      for (int x : adj[static_cast<size_t>(L0)])
        if (vt(x) == 2) out.insert({x});
      break;
    case HeckeOp::A2:
      // Primitive vertices sharing a non-special neighbor with [L0].
      for (int n : adj[static_cast<size_t>(L0)]) {
        if (vt(n) != 3) continue;
        for (int s : adj[static_cast<size_t>(n)])
          if (vt(s) == 0 && s != L0) out.insert({s});
      }
      break;
    case HeckeOp::LP1:
      // [L2] -> X, X special, adjacent to [L2] and not close to [L0].
      for (int x : adj[static_cast<size_t>(L2)])
        if (vt(x) == 0 && x != L0 && !has_common(b, {L0, L2, x}, 3)) out.insert({L2, x});
      break;
    case HeckeOp::LP2:
      // S -> N: S adjacent to [L3] and close to [L0]; N adjacent to S and not close to [L3].
      for (int s : adj[static_cast<size_t>(L3)]) {
        if (vt(s) != 0 || s == L0 || !has_common(b, {L0, L3, s}, 2)) continue;
        for (int n : adj[static_cast<size_t>(s)])
          if (vt(n) == 3 && n != L3 && !has_common(b, {s, L3, n}, 2)) out.insert({s, n});
      }
      break;
    case HeckeOp::LI:
      // Reflect C across its edge {L2, L3} to a chamber with special vertex S,
      // then across {L2, S} to a chamber with non-special vertex N; direct L2 -> S.
      for (int s : adj[static_cast<size_t>(L3)]) {
        if (vt(s) != 0 || s == L0 || !b.adjacent(s, L2)) continue;
        for (int n : adj[static_cast<size_t>(s)])
          if (vt(n) == 3 && n != L3 && b.adjacent(n, L2)) out.insert({L2, s, n});
      }
      break;
  }
  return out;
}

}  // namespace

CheckReport cross_check_geometry(const CosetFamily& f, const BuildingBall& b) {
  if (b.radius < 2) throw std::invalid_argument("geometry cross-check needs a ball of radius >= 2");
  if (b.p != f.p) throw std::invalid_argument("ball and family over different primes");
  CheckReport r;
  const long p = f.p;
  const LatticeClass l0 = standard_lattice(0, p), l2 = standard_lattice(2, p), l3 = standard_lattice(3, p);
  auto locate = [&](const LatticeClass& L) -> std::optional<int> { return b.index_of(vertex_of(L)); };
  const int L0 = *locate(l0), L2 = *locate(l2), L3 = *locate(l3);

  std::vector<LatticeClass> base;
  switch (f.op) {
    case HeckeOp::A1:
    case HeckeOp::A2: base = {l0}; break;
    case HeckeOp::LP1: base = {l0, l2}; break;
    case HeckeOp::LP2: base = {l0, l3}; break;
    case HeckeOp::LI: base = {l0, l2, l3}; break;
  }
  std::set<Simplex> images;
  for (size_t i = 0; i < f.reps.size(); ++i) {
    Simplex s;
    for (const auto& L : base) {
      auto idx = locate(act(f.reps[i], L));
      if (!idx) {
        r.fail("image outside the ball: " + f.labels[i]);
        break;
      }
      s.push_back(*idx);
    }
    if (s.size() != base.size()) continue;
    ++r.checks;
    if (!images.insert(s).second) r.fail("repeated image simplex: " + f.labels[i]);
  }
  std::set<Simplex> expect = expected_images(f.op, b, L0, L2, L3);
  ++r.checks;
  if (images != expect) {
    r.fail("image set differs from the ball description: " + std::to_string(images.size()) + " images, " +
           std::to_string(expect.size()) + " expected simplices");
    for (const auto& s : images)
      if (!expect.count(s)) {
        r.fail("unexpected image simplex starting at vertex " + std::to_string(s[0]));
        break;
      }
  }
  return r;
}

}  // namespace spgeo
