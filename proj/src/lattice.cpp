#include "spgeo/lattice.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "json.hpp"

namespace spgeo {
namespace {

using i128 = __int128;

// Largest e with p^e < 2^62, so products of residues fit in 128 bits and the
// residues themselves in int64.
int max_modulus_exponent(long p) {
  int e = 0;
  i128 x = 1;
  while (x * p < (static_cast<i128>(1) << 62)) {
    x *= p;
    ++e;
  }
  return e;
}

int64_t ipow(long p, int k) {
  if (k < 0) throw std::domain_error("negative power in integer arithmetic");
  if (k > max_modulus_exponent(p)) throw std::overflow_error("p-power exceeds 64-bit range");
  int64_t r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

int ival(int64_t x, long p) {
  int v = 0;
  while (x % p == 0) {
    x /= p;
    ++v;
  }
  return v;
}

int64_t modn(i128 x, int64_t n) {
  i128 r = x % n;
  if (r < 0) r += n;
  return static_cast<int64_t>(r);
}

int64_t inv_mod(int64_t a, int64_t n) {
  i128 t = 0, nt = 1, r = n, nr = modn(a, n);
  while (nr != 0) {
    i128 q = r / nr;
    i128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::logic_error("non-unit pivot in lattice reduction");
  return modn(t, n);
}

// <x, y> for the symplectic form with <e1,f2> = <e2,f1> = 1.
i128 pairing(const IntVec4& x, const IntVec4& y) {
  return static_cast<i128>(x[0]) * y[3] + static_cast<i128>(x[1]) * y[2] -
         static_cast<i128>(x[2]) * y[1] - static_cast<i128>(x[3]) * y[0];
}

IntVec4 combine(const LatticeClass& L, const std::array<int, 4>& w) {
  IntVec4 r{};
  for (int j = 0; j < 4; ++j) {
    if (w[static_cast<size_t>(j)] == 0) continue;
    for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] += w[static_cast<size_t>(j)] * L.at(i, j);
  }
  return r;
}

std::vector<IntVec4> scaled_columns(const LatticeClass& L, int64_t f) {
  std::vector<IntVec4> out;
  for (int j = 0; j < 4; ++j) {
    IntVec4 c = L.column(j);
    for (auto& x : c) {
      i128 y = static_cast<i128>(x) * f;
      if (y > INT64_MAX) throw std::overflow_error("lattice generator exceeds 64-bit range");
      x = static_cast<int64_t>(y);
    }
    out.push_back(c);
  }
  return out;
}

using FpVec = std::array<int, 4>;

// Projective points and 2-dimensional subspaces of F_p^4, in RREF, built once per p.
struct SubspaceTables {
  std::vector<FpVec> lines;
  std::vector<std::pair<FpVec, FpVec>> planes;
};

const SubspaceTables& tables(long p) {
  static std::mutex mu;
  static std::map<long, SubspaceTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end()) return it->second;
  SubspaceTables t;
  const int q = static_cast<int>(p);
  for (int lead = 0; lead < 4; ++lead) {
    int free = 3 - lead;
    int total = 1;
    for (int i = 0; i < free; ++i) total *= q;
    for (int code = 0; code < total; ++code) {
      FpVec v{};
      v[static_cast<size_t>(lead)] = 1;
      int c = code;
      for (int i = lead + 1; i < 4; ++i) {
        v[static_cast<size_t>(i)] = c % q;
        c /= q;
      }
      t.lines.push_back(v);
    }
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      // Row a: 1 at i, 0 at j, free at positions > i other than j. Row b: 1 at j, free after j.
      std::vector<int> fa, fb;
      for (int k = i + 1; k < 4; ++k)
        if (k != j) fa.push_back(k);
      for (int k = j + 1; k < 4; ++k) fb.push_back(k);
      int na = 1, nb = 1;
      for (size_t k = 0; k < fa.size(); ++k) na *= q;
      for (size_t k = 0; k < fb.size(); ++k) nb *= q;
      for (int ca = 0; ca < na; ++ca)
        for (int cb = 0; cb < nb; ++cb) {
          FpVec a{}, b{};
          a[static_cast<size_t>(i)] = 1;
          b[static_cast<size_t>(j)] = 1;
          int x = ca;
          for (int k : fa) {
            a[static_cast<size_t>(k)] = x % q;
            x /= q;
          }
          x = cb;
          for (int k : fb) {
            b[static_cast<size_t>(k)] = x % q;
            x /= q;
          }
          t.planes.emplace_back(a, b);
        }
    }
  return cache.emplace(p, std::move(t)).first->second;
}

int form_mod_p(const std::array<std::array<int, 4>, 4>& U, const FpVec& a, const FpVec& b, int q) {
  long acc = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += static_cast<long>(a[static_cast<size_t>(i)]) * U[static_cast<size_t>(i)][static_cast<size_t>(j)] * b[static_cast<size_t>(j)];
  return static_cast<int>(((acc % q) + q) % q);
}

std::vector<Neighbor> special_star(const VertexLabel& v) {
  const LatticeClass& R = v.cls;
  const long p = R.p();
  const int q = static_cast<int>(p);
  // Gram matrix of the basis; for a special class it is p^d times a unimodular form.
  std::array<IntVec4, 4> cols;
  for (int j = 0; j < 4; ++j) cols[static_cast<size_t>(j)] = R.column(j);
  std::array<std::array<i128, 4>, 4> G{};
  int d = INT_MAX;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      G[static_cast<size_t>(a)][static_cast<size_t>(b)] = pairing(cols[static_cast<size_t>(a)], cols[static_cast<size_t>(b)]);
      i128 g = G[static_cast<size_t>(a)][static_cast<size_t>(b)];
      if (g != 0) {
        int k = 0;
        while (g % p == 0) {
          g /= p;
          ++k;
        }
        d = std::min(d, k);
      }
    }
  std::array<std::array<int, 4>, 4> U{};
  i128 pd = 1;
  for (int i = 0; i < d; ++i) pd *= p;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      i128 g = G[static_cast<size_t>(a)][static_cast<size_t>(b)] / pd;
      U[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(((g % q) + q) % q);
    }

  const int M = R.det_valuation() + 1;
  std::vector<IntVec4> base = scaled_columns(R, p);
  const auto& T = tables(p);
  std::vector<Neighbor> out;
  out.reserve(T.lines.size() * 2);

  for (const auto& [a, b] : T.planes) {
    if (form_mod_p(U, a, b, q) != 0) continue;  // Lagrangian planes only
    std::vector<IntVec4> gens = base;
    gens.push_back(combine(R, a));
    gens.push_back(combine(R, b));
    LatticeClass X = LatticeClass::from_generators(gens, M, p);
    out.push_back({VertexLabel{X, std::nullopt, X.type_mod4()}, 1});
  }
  for (const auto& w : T.lines) {
    std::vector<IntVec4> ga = base;
    ga.push_back(combine(R, w));
    LatticeClass Xa = LatticeClass::from_generators(ga, M, p);
    // w-perp for the reduced form.
    FpVec phi{};
    for (int j = 0; j < 4; ++j) {
      long acc = 0;
      for (int i = 0; i < 4; ++i) acc += static_cast<long>(w[static_cast<size_t>(i)]) * U[static_cast<size_t>(i)][static_cast<size_t>(j)];
      phi[static_cast<size_t>(j)] = static_cast<int>(acc % q);
    }
    int i0 = 0;
    while (i0 < 4 && phi[static_cast<size_t>(i0)] == 0) ++i0;
    if (i0 == 4) throw std::logic_error("degenerate reduced form at a special vertex");
    int inv = static_cast<int>(inv_mod(phi[static_cast<size_t>(i0)], q));
    std::vector<IntVec4> gb = base;
    for (int j = 0; j < 4; ++j) {
      if (j == i0) continue;
      FpVec k{};
      k[static_cast<size_t>(j)] = 1;
      k[static_cast<size_t>(i0)] = static_cast<int>(((-(static_cast<long>(phi[static_cast<size_t>(j)]) * inv)) % q + q) % q);
      gb.push_back(combine(R, k));
    }
    LatticeClass Xb = LatticeClass::from_generators(gb, M, p);
    if (Xa.type_mod4() == 3 && Xb.type_mod4() == 1) {
      out.push_back({VertexLabel::nonspecial(Xa, Xb), 2});
    } else if (Xb.type_mod4() == 3 && Xa.type_mod4() == 1) {
      out.push_back({VertexLabel::nonspecial(Xb, Xa), 2});
    } else {
      throw std::logic_error("line neighbor pair has unexpected types");
    }
  }
  return out;
}

// RREF basis of the F_p-span of the given vectors.
std::vector<FpVec> rref(std::vector<FpVec> rows, int q) {
  std::vector<FpVec> basis;
  int r = 0;
  for (int c = 0; c < 4 && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (int i = r; i < static_cast<int>(rows.size()); ++i)
      if (rows[static_cast<size_t>(i)][static_cast<size_t>(c)] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[static_cast<size_t>(r)], rows[static_cast<size_t>(piv)]);
    int inv = static_cast<int>(inv_mod(rows[static_cast<size_t>(r)][static_cast<size_t>(c)], q));
    for (auto& x : rows[static_cast<size_t>(r)]) x = static_cast<int>((static_cast<long>(x) * inv) % q);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
      if (i == r) continue;
      int f = rows[static_cast<size_t>(i)][static_cast<size_t>(c)];
      if (f == 0) continue;
      for (int k = 0; k < 4; ++k) {
        long x = rows[static_cast<size_t>(i)][static_cast<size_t>(k)] - static_cast<long>(f) * rows[static_cast<size_t>(r)][static_cast<size_t>(k)];
        rows[static_cast<size_t>(i)][static_cast<size_t>(k)] = static_cast<int>(((x % q) + q) % q);
      }
    }
    ++r;
  }
  rows.resize(static_cast<size_t>(r));
  return rows;
}

std::vector<Neighbor> nonspecial_star(const VertexLabel& v) {
  const LatticeClass& N3 = v.cls;
  const LatticeClass& N1 = *v.dual;
  const long p = N3.p();
  const int q = static_cast<int>(p);
  const int D3 = N3.det_valuation(), D1 = N1.det_valuation();
  // Y = p N1' where N3 < N1' < p^-1 N3 is the member of [N1] of valuation D3 - 2.
  int shift = D3 + 2 - D1;
  if (shift < 0 || shift % 4 != 0) throw std::logic_error("non-special pair with inconsistent determinants");
  std::vector<IntVec4> Y = scaled_columns(N1, ipow(p, shift / 4));

  std::vector<FpVec> coords;
  for (const auto& y : Y) {
    std::array<i128, 4> c{};
    for (int i = 0; i < 4; ++i) {
      i128 acc = y[static_cast<size_t>(i)];
      for (int j = 0; j < i; ++j) acc -= static_cast<i128>(N3.at(i, j)) * c[static_cast<size_t>(j)];
      i128 dii = N3.at(i, i);
      if (acc % dii != 0) throw std::logic_error("dual member not nested in the type-3 lattice");
      c[static_cast<size_t>(i)] = acc / dii;
    }
    FpVec r{};
    for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] = static_cast<int>(((c[static_cast<size_t>(i)] % q) + q) % q);
    coords.push_back(r);
  }
  std::vector<FpVec> S = rref(coords, q);
  if (S.size() != 2) throw std::logic_error("middle lattice does not give a 2-dimensional subspace");

  const int M = D3 + 1;
  std::vector<IntVec4> base = scaled_columns(N3, p);
  std::vector<Neighbor> out;

  auto lines_in = [q](const FpVec& a, const FpVec& b) {
    std::vector<FpVec> ls;
    for (int t = 0; t < q; ++t) {
      FpVec x{};
      for (int i = 0; i < 4; ++i) x[static_cast<size_t>(i)] = (a[static_cast<size_t>(i)] + t * b[static_cast<size_t>(i)]) % q;
      ls.push_back(x);
    }
    ls.push_back(b);
    return ls;
  };
  // Type-2 neighbors: p N3 + (line in Y / p N3).
  for (const auto& l : lines_in(S[0], S[1])) {
    std::vector<IntVec4> gens = base;
    gens.push_back(combine(N3, l));
    LatticeClass X = LatticeClass::from_generators(gens, M, p);
    out.push_back({VertexLabel{X, std::nullopt, X.type_mod4()}, 2});
  }
  // Type-0 neighbors: Y + (line in N3 / Y), via the coordinate complement of S.
  std::vector<int> pivots;
  for (const auto& row : S) {
    int c = 0;
    while (row[static_cast<size_t>(c)] == 0) ++c;
    pivots.push_back(c);
  }
  std::vector<int> comp;
  for (int i = 0; i < 4; ++i)
    if (std::find(pivots.begin(), pivots.end(), i) == pivots.end()) comp.push_back(i);
  FpVec c0{}, c1{};
  c0[static_cast<size_t>(comp[0])] = 1;
  c1[static_cast<size_t>(comp[1])] = 1;
  for (const auto& l : lines_in(c0, c1)) {
    std::vector<IntVec4> gens = base;
    gens.insert(gens.end(), Y.begin(), Y.end());
    gens.push_back(combine(N3, l));
    LatticeClass X = LatticeClass::from_generators(gens, M, p);
    out.push_back({VertexLabel{X, std::nullopt, X.type_mod4()}, 2});
  }
  return out;
}

}  // namespace

size_t IntMat4Hash::operator()(const IntMat4& m) const noexcept {
  uint64_t h = 1469598103934665603ULL;
  for (int64_t x : m) {
    h ^= static_cast<uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 1099511628211ULL;
  }
  return static_cast<size_t>(h);
}

LatticeClass LatticeClass::from_generators(const std::vector<IntVec4>& gens, int M, long p) {
  if (M < 0) M = 0;
  if (M + 1 > max_modulus_exponent(p)) throw std::overflow_error("lattice too deep for the 64-bit canonical form");
  const int64_t N = ipow(p, M + 1), pM = ipow(p, M);
  std::vector<IntVec4> cols;
  cols.reserve(gens.size() + 4);
  for (const auto& g : gens) cols.push_back({modn(g[0], N), modn(g[1], N), modn(g[2], N), modn(g[3], N)});
  for (int i = 0; i < 4; ++i) {
    IntVec4 e{};
    e[static_cast<size_t>(i)] = pM;
    cols.push_back(e);
  }
  std::array<IntVec4, 4> piv{};
  std::array<int, 4> k{};
  std::vector<char> used(cols.size(), 0);
  for (int r = 0; r < 4; ++r) {
    int best = -1, bk = INT_MAX;
    for (size_t j = 0; j < cols.size(); ++j) {
      if (used[j] || cols[j][static_cast<size_t>(r)] == 0) continue;
      int v = ival(cols[j][static_cast<size_t>(r)], p);
      if (v < bk) {
        bk = v;
        best = static_cast<int>(j);
      }
    }
    if (best < 0) throw std::logic_error("lattice reduction lost its full-rank generators");
    used[static_cast<size_t>(best)] = 1;
    IntVec4 P = cols[static_cast<size_t>(best)];
    const int64_t pk = ipow(p, bk);
    const int64_t uinv = inv_mod(P[static_cast<size_t>(r)] / pk, N);
    for (auto& x : P) x = modn(static_cast<i128>(x) * uinv, N);
    for (size_t j = 0; j < cols.size(); ++j) {
      if (used[j]) continue;
      int64_t e = cols[j][static_cast<size_t>(r)];
      if (e == 0) continue;
      int64_t f = e / pk;
      for (int i = 0; i < 4; ++i)
        cols[j][static_cast<size_t>(i)] = modn(static_cast<i128>(cols[j][static_cast<size_t>(i)]) - static_cast<i128>(f) * P[static_cast<size_t>(i)], N);
    }
    piv[static_cast<size_t>(r)] = P;
    k[static_cast<size_t>(r)] = bk;
  }
  for (int r = 1; r < 4; ++r) {
    const int64_t pk = ipow(p, k[static_cast<size_t>(r)]);
    for (int c = 0; c < r; ++c) {
      int64_t f = piv[static_cast<size_t>(c)][static_cast<size_t>(r)] / pk;
      if (f == 0) continue;
      for (int i = 0; i < 4; ++i)
        piv[static_cast<size_t>(c)][static_cast<size_t>(i)] =
            modn(static_cast<i128>(piv[static_cast<size_t>(c)][static_cast<size_t>(i)]) - static_cast<i128>(f) * piv[static_cast<size_t>(r)][static_cast<size_t>(i)], N);
    }
  }
  IntMat4 m{};
  for (int i = 0; i < 4; ++i)
    for (int c = 0; c < 4; ++c) m[static_cast<size_t>(i * 4 + c)] = piv[static_cast<size_t>(c)][static_cast<size_t>(i)];
  // Homothety: divide by p while the whole lattice lies in p Z_p^4.
  for (;;) {
    bool divisible = true;
    for (int64_t x : m)
      if (x % p != 0) {
        divisible = false;
        break;
      }
    if (!divisible) break;
    for (auto& x : m) x /= p;
    for (auto& e : k) --e;
  }
  return LatticeClass(m, k, p);
}

LatticeClass LatticeClass::from_basis(const QMatrix& basis, long p) {
  if (basis.rows() != 4 || basis.cols() != 4) throw std::invalid_argument("lattice basis must be 4x4");
  int minval = INT_MAX;
  for (const auto& x : basis.entries())
    if (!x.is_zero()) minval = std::min(minval, padic_valuation(x, p));
  if (minval == INT_MAX) throw std::domain_error("zero lattice basis");
  QMatrix B = basis.scaled(Rational(p).pow(-minval));
  Rational d = det(B);
  if (d.is_zero()) throw std::domain_error("lattice basis is singular");
  const int M = padic_valuation(d, p);
  if (M + 1 > max_modulus_exponent(p)) throw std::overflow_error("lattice too deep for the 64-bit canonical form");
  mpz_class N = 1;
  for (int i = 0; i <= M; ++i) N *= p;
  std::vector<IntVec4> gens(4);
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i) {
      const Rational& x = B(i, j);
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), x.den().get_mpz_t(), N.get_mpz_t()) == 0)
        throw std::logic_error("non-integral entry after scaling");
      mpz_class r = (x.num() * inv) % N;
      if (r < 0) r += N;
      gens[static_cast<size_t>(j)][static_cast<size_t>(i)] = r.get_si();
    }
  return from_generators(gens, M, p);
}

QMatrix LatticeClass::basis() const {
  QMatrix b(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b(i, j) = Rational(static_cast<long>(at(i, j)));
  return b;
}

std::string LatticeClass::str() const {
  std::string s = "[";
  for (int i = 0; i < 4; ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < 4; ++j) s += (j ? "," : "") + std::to_string(at(i, j));
    s += "]";
  }
  return s + "]";
}

std::vector<int> smith_valuations(const QMatrix& m0, long p) {
  if (!m0.square()) throw std::invalid_argument("elementary divisors of a non-square matrix");
  QMatrix m = m0;
  const int n = m.rows();
  std::vector<int> out;
  for (int k = 0; k < n; ++k) {
    int bi = -1, bj = -1, bv = INT_MAX;
    for (int i = k; i < n; ++i)
      for (int j = k; j < n; ++j)
        if (!m(i, j).is_zero()) {
          int v = padic_valuation(m(i, j), p);
          if (v < bv) {
            bv = v;
            bi = i;
            bj = j;
          }
        }
    if (bi < 0) throw std::domain_error("elementary divisors of a singular matrix");
    for (int j = 0; j < n; ++j) std::swap(m(k, j), m(bi, j));
    for (int i = 0; i < n; ++i) std::swap(m(i, k), m(i, bj));
    out.push_back(bv);
    Rational inv = m(k, k).inverse();
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      Rational f = m(i, k) * inv;
      for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::array<int, 4> gram_divisors(const LatticeClass& L) {
  QMatrix B = L.basis();
  auto v = smith_valuations(B.transpose() * symplectic_form() * B, L.p());
  return {v[0], v[1], v[2], v[3]};
}

bool is_primitive(const LatticeClass& L) {
  auto g = gram_divisors(L);
  return g[0] == g[3] && g[0] % 2 == 0;
}

std::optional<int> vertex_type_of(const LatticeClass& L) {
  auto g = gram_divisors(L);
  if (g[0] == g[3]) return L.type_mod4();
  if (g[0] == g[1] && g[2] == g[3] && g[2] == g[0] + 1 && L.type_mod4() == 3) return 3;
  return std::nullopt;
}

int vertex_type(const LatticeClass& L) {
  auto t = vertex_type_of(L);
  if (!t) throw NotAVertexError("not a building vertex: " + L.str());
  return *t;
}

LatticeClass dual_class(const LatticeClass& L) {
  return LatticeClass::from_basis(symplectic_form() * qinverse(L.basis()).transpose(), L.p());
}

LatticeClass act(const GroupElem& g, const LatticeClass& L) {
  if (g.p() != L.p()) throw std::invalid_argument("group element and lattice over different primes");
  return LatticeClass::from_basis(g.matrix() * L.basis(), L.p());
}

LatticeClass standard_lattice(int i, long p) {
  static const std::array<std::array<int, 4>, 4> exps{{{0, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 1}, {0, 1, 1, 1}}};
  if (i < 0 || i > 3) throw std::invalid_argument("standard lattice index must be 0..3");
  const auto& e = exps[static_cast<size_t>(i)];
  return LatticeClass::from_basis(diag_matrix({Rational(p).pow(e[0]), Rational(p).pow(e[1]), Rational(p).pow(e[2]),
                                               Rational(p).pow(e[3])}),
                                  p);
}

VertexLabel VertexLabel::make(const LatticeClass& L) {
  int t = vertex_type(L);
  if (t == 3) return nonspecial(L, dual_class(L));
  return VertexLabel{L, std::nullopt, t};
}

VertexLabel VertexLabel::nonspecial(const LatticeClass& type3, const LatticeClass& type1) {
  return VertexLabel{type3, type1, 3};
}

std::vector<Neighbor> neighbors(const VertexLabel& v) {
  return v.special() ? special_star(v) : nonspecial_star(v);
}

VertexLabel figure1_label(int a1, int a2, int b1, int b2, long p) {
  Rational P(p);
  return VertexLabel::make(LatticeClass::from_basis(diag_matrix({P.pow(a1), P.pow(a2), P.pow(b1), P.pow(b2)}), p));
}

std::optional<int> BuildingBall::index_of(const LatticeClass& key) const {
  auto it = index.find(key.canonical());
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::optional<int> BuildingBall::index_of(const VertexLabel& v) const { return index_of(v.key()); }

bool BuildingBall::adjacent(int a, int b) const {
  const auto& l = adjacency[static_cast<size_t>(a)];
  return std::binary_search(l.begin(), l.end(), b);
}

int BuildingBall::chambers_on_edge(int a, int b) const {
  const auto& la = adjacency[static_cast<size_t>(a)];
  const auto& lb = adjacency[static_cast<size_t>(b)];
  std::vector<int> common;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
  return static_cast<int>(common.size());
}

BuildingBall ball(int radius, long p, size_t vertex_cap) {
  if (radius < 0 || radius > 3) throw std::invalid_argument("ball radius must be in 0..3");
  if (p != 2 && p != 3 && p != 5) throw std::invalid_argument("ball prime must be 2, 3 or 5");
  std::vector<VertexLabel> verts;
  std::vector<int> dist;
  std::unordered_map<IntMat4, int, IntMat4Hash> idx;
  auto add = [&](const VertexLabel& v, int d) {
    auto [it, inserted] = idx.try_emplace(v.key().canonical(), static_cast<int>(verts.size()));
    if (inserted) {
      if (verts.size() >= vertex_cap) throw ResourceCapError("ball vertex cap exceeded");
      verts.push_back(v);
      dist.push_back(d);
    }
    return it->second;
  };
  add(VertexLabel::make(standard_lattice(0, p)), 0);
  add(VertexLabel::make(standard_lattice(2, p)), 0);
  add(VertexLabel::make(standard_lattice(3, p)), 0);

  std::vector<BallEdge> edges;
  for (size_t i = 0; i < verts.size(); ++i) {
    const int di = dist[i];
    for (const auto& n : neighbors(verts[i])) {
      int j;
      auto it = idx.find(n.v.key().canonical());
      if (it != idx.end()) {
        j = it->second;
      } else if (di < radius) {
        j = add(n.v, di + 1);
      } else {
        continue;
      }
      if (static_cast<int>(i) < j) edges.push_back({static_cast<int>(i), j, n.edge_type});
    }
  }

  // Renumber by (distance, type, key) for byte-stable output.
  std::vector<int> order(verts.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& va = verts[static_cast<size_t>(a)];
    const auto& vb = verts[static_cast<size_t>(b)];
    if (dist[static_cast<size_t>(a)] != dist[static_cast<size_t>(b)]) return dist[static_cast<size_t>(a)] < dist[static_cast<size_t>(b)];
    return va < vb;
  });
  std::vector<int> rank(verts.size());
  for (size_t r = 0; r < order.size(); ++r) rank[static_cast<size_t>(order[r])] = static_cast<int>(r);

  BuildingBall out;
  out.p = p;
  out.radius = radius;
  for (int o : order) {
    out.vertices.push_back(verts[static_cast<size_t>(o)]);
    out.distance.push_back(dist[static_cast<size_t>(o)]);
  }
  for (auto& e : edges) {
    int a = rank[static_cast<size_t>(e.a)], b = rank[static_cast<size_t>(e.b)];
    out.edges.push_back({std::min(a, b), std::max(a, b), e.type});
  }
  std::sort(out.edges.begin(), out.edges.end());
  out.edges.erase(std::unique(out.edges.begin(), out.edges.end()), out.edges.end());
  out.adjacency.assign(out.vertices.size(), {});
  for (const auto& e : out.edges) {
    out.adjacency[static_cast<size_t>(e.a)].push_back(e.b);
    out.adjacency[static_cast<size_t>(e.b)].push_back(e.a);
  }
  for (auto& l : out.adjacency) std::sort(l.begin(), l.end());
  for (size_t i = 0; i < out.vertices.size(); ++i) out.index.emplace(out.vertices[i].key().canonical(), static_cast<int>(i));
  // Each chamber has exactly one type-1 edge; extend it by common non-special neighbors.
  for (const auto& e : out.edges) {
    if (e.type != 1) continue;
    const auto& la = out.adjacency[static_cast<size_t>(e.a)];
    const auto& lb = out.adjacency[static_cast<size_t>(e.b)];
    std::vector<int> common;
    std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(common));
    for (int c : common) {
      std::array<int, 3> t{e.a, e.b, c};
      std::sort(t.begin(), t.end());
      out.chambers.push_back(t);
    }
  }
  std::sort(out.chambers.begin(), out.chambers.end());
  return out;
}

LocalStructureReport check_local_structure(const BuildingBall& b) {
  LocalStructureReport r;
  const long q = b.p, deg = q * q * q + q * q + q + 1;
  auto fail = [&r](std::string w) {
    r.pass = false;
    if (r.witnesses.size() < 16) r.witnesses.push_back(std::move(w));
  };
  for (size_t i = 0; i < b.vertices.size(); ++i) {
    const auto& v = b.vertices[i];
    auto star = neighbors(v);
    long t1 = 0, t2 = 0, to0 = 0, to2 = 0;
    for (const auto& nb : star) {
      (nb.edge_type == 1 ? t1 : t2) += 1;
      if (nb.v.vtype == 0) ++to0;
      if (nb.v.vtype == 2) ++to2;
    }
    const std::string tag = "vertex " + std::to_string(i);
    if (v.special()) {
      ++r.special_checked;
      if (t1 != deg || t2 != deg)
        fail(tag + ": " + std::to_string(t1) + " type-1 and " + std::to_string(t2) + " type-2 edges");
    } else {
      ++r.nonspecial_checked;
      if (t1 != 0 || t2 != 2 * (q + 1) || to0 != q + 1 || to2 != q + 1)
        fail(tag + ": non-special star " + std::to_string(to0) + " primitive + " + std::to_string(to2) + " type-2");
    }
    if (b.distance[i] < b.radius && b.adjacency[i].size() != star.size())
      fail(tag + ": star not saturated inside the ball");
  }
  // Chambers per edge from the chamber list; a triangle in the 1-skeleton
  // must also be a listed chamber.
  std::map<std::pair<int, int>, int> listed;
  for (const auto& c : b.chambers)
    for (int x = 0; x < 3; ++x)
      for (int y = x + 1; y < 3; ++y) {
        auto [u, w] = std::minmax(c[static_cast<size_t>(x)], c[static_cast<size_t>(y)]);
        ++listed[{u, w}];
      }
  for (const auto& e : b.edges) {
    if (std::min(b.distance[static_cast<size_t>(e.a)], b.distance[static_cast<size_t>(e.b)]) >= b.radius) continue;
    ++r.interior_edges_checked;
    int n = listed[{e.a, e.b}];
    if (n != q + 1 || b.chambers_on_edge(e.a, e.b) != n)
      fail("edge " + std::to_string(e.a) + "-" + std::to_string(e.b) + " lies in " + std::to_string(n) + " chambers");
  }
  return r;
}

std::string ball_to_json(const BuildingBall& b) {
  using nlohmann::json;
  json j;
  j["schema_version"] = 1;
  j["p"] = b.p;
  j["radius"] = b.radius;
  j["counts"] = {{"vertices", b.vertices.size()}, {"edges", b.edges.size()}, {"chambers", b.chambers.size()}};
  json vs = json::array();
  for (size_t i = 0; i < b.vertices.size(); ++i) {
    const auto& v = b.vertices[i];
    json o;
    o["index"] = i;
    o["type"] = v.vtype;
    o["distance"] = b.distance[i];
    o["basis"] = v.cls.canonical();
    if (v.dual) o["dual_basis"] = v.dual->canonical();
    vs.push_back(std::move(o));
  }
  j["vertices"] = std::move(vs);
  json es = json::array();
  for (const auto& e : b.edges) es.push_back({e.a, e.b, e.type});
  j["edges"] = std::move(es);
  j["chambers"] = b.chambers;
  return j.dump(1) + "\n";
}

}  // namespace spgeo
