#include "flagprim/quiver.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>

#include "flagprim/linalg.hpp"

namespace flagprim {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using modp::Mat;

struct NonGeneric : std::runtime_error {
  NonGeneric() : std::runtime_error("non-generic sample") {}
};

// polynomials over GF(P), low degree first
using Poly = std::vector<u64>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly pmul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = modp::add(c[i + j], modp::mul(a[i], b[j]));
  trim(c);
  return c;
}

Poly psub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] = modp::sub(a[i], b[i]);
  trim(a);
  return a;
}

void pdivmod(Poly a, const Poly& m, Poly* q, Poly* r) {
  trim(a);
  const int dm = deg(m);
  const u64 il = modp::inv(m.back());
  Poly quo(std::max(0, deg(a) - dm + 1), 0);
  while (deg(a) >= dm) {
    const int shift = deg(a) - dm;
    const u64 f = modp::mul(a.back(), il);
    quo[shift] = f;
    for (int i = 0; i <= dm; ++i) a[i + shift] = modp::sub(a[i + shift], modp::mul(f, m[i]));
    trim(a);
  }
  if (q) *q = std::move(quo);
  if (r) *r = std::move(a);
}

Poly pmod(const Poly& a, const Poly& m) {
  Poly r;
  pdivmod(a, m, nullptr, &r);
  return r;
}

Poly monic(Poly a) {
  trim(a);
  if (a.empty()) return a;
  const u64 il = modp::inv(a.back());
  for (auto& c : a) c = modp::mul(c, il);
  return a;
}

Poly pgcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = pmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly ppowmod(Poly base, u64 e, const Poly& m) {
  Poly result{1};
  base = pmod(base, m);
  while (e) {
    if (e & 1) result = pmod(pmul(result, base), m);
    base = pmod(pmul(base, base), m);
    e >>= 1;
  }
  return result;
}

Poly deriv(const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(modp::mul(a[i], i % modp::P));
  trim(d);
  return d;
}

struct SplitResult {
  std::optional<Poly> factor;  // nontrivial factor of the squarefree part
  int degree = 1;              // degree of the unique irreducible factor otherwise
};

SplitResult find_split(const Poly& chi, std::mt19937_64& rng) {
  Poly g0 = pgcd(chi, deriv(chi));
  Poly s;
  pdivmod(chi, g0, &s, nullptr);
  s = monic(s);
  SplitResult out;
  if (deg(s) <= 1) return out;
  const Poly x{0, 1};
  Poly h = x;
  for (int r = 1; r <= deg(s); ++r) {
    h = ppowmod(h, modp::P, s);
    Poly g = pgcd(s, psub(h, x));
    if (deg(g) <= 0) continue;
    if (deg(g) < deg(s)) {
      out.factor = g;
      return out;
    }
    if (deg(s) == r) {
      out.degree = r;
      return out;
    }
    // equal degree r, at least two factors
    std::uniform_int_distribution<u64> coef(0, modp::P - 1);
    for (int attempt = 0; attempt < 64; ++attempt) {
      Poly a(deg(s));
      for (auto& c : a) c = coef(rng);
      trim(a);
      if (a.empty()) continue;
      Poly t = a, fr = a;
      for (int i = 1; i < r; ++i) {
        fr = ppowmod(fr, modp::P, s);
        t = pmod(pmul(t, fr), s);
      }
      Poly b = ppowmod(t, (modp::P - 1) / 2, s);
      Poly gg = pgcd(s, psub(b, Poly{1}));
      if (deg(gg) > 0 && deg(gg) < deg(s)) {
        out.factor = gg;
        return out;
      }
    }
    throw NonGeneric();
  }
  throw std::logic_error("distinct-degree factorization fell through");
}

Mat identity_mod(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Poly charpoly(const Mat& a) {
  // Faddeev-LeVerrier, fine for the tiny sizes here
  const int n = static_cast<int>(a.size());
  Poly c(n + 1, 0);
  c[n] = 1;
  Mat m(n, Vec(n, 0));
  for (int k = 1; k <= n; ++k) {
    Mat am = modp::multiply(a, m);
    for (int i = 0; i < n; ++i) am[i][i] = modp::add(am[i][i], c[n - k + 1]);
    m = std::move(am);
    Mat t = modp::multiply(a, m);
    u64 tr = 0;
    for (int i = 0; i < n; ++i) tr = modp::add(tr, t[i][i]);
    c[n - k] = modp::sub(0, modp::mul(tr, modp::inv(static_cast<u64>(k))));
  }
  return c;
}

Mat eval_poly(const Poly& g, const Mat& phi) {
  const int n = static_cast<int>(phi.size());
  Mat r(n, Vec(n, 0));
  for (int i = deg(g); i >= 0; --i) {
    r = modp::multiply(r, phi);
    for (int k = 0; k < n; ++k) r[k][k] = modp::add(r[k][k], g[i]);
  }
  return r;
}

Vec mat_vec(const Mat& g, const Vec& v) {
  Vec out(g.size(), 0);
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] = modp::add(out[i], modp::mul(g[i][j], v[j]));
  return out;
}

// injective star representation: images U_j inside a space of dimension n
struct Piece {
  int n = 0;
  std::vector<Mat> U;  // basis vectors of each image
};

Mat end_equations(const Piece& p) {
  const int n = p.n;
  Mat rows;
  for (const auto& u : p.U) {
    if (u.empty() || static_cast<int>(u.size()) == n) continue;
    Mat ann = modp::nullspace(u, n);
    for (const auto& y : ann)
      for (const auto& v : u) {
        Vec line(static_cast<std::size_t>(n) * n, 0);
        for (int r = 0; r < n; ++r)
          if (y[r])
            for (int c = 0; c < n; ++c) line[r * n + c] = modp::mul(y[r], v[c]);
        rows.push_back(std::move(line));
      }
  }
  return rows;
}

int end_dim(const Piece& p) { return p.n * p.n - modp::rank(end_equations(p)); }

std::vector<Mat> end_basis(const Piece& p) {
  const int n = p.n;
  Mat ker = modp::nullspace(end_equations(p), n * n);
  std::vector<Mat> out;
  for (const auto& k : ker) {
    Mat g(n, Vec(n));
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) g[r][c] = k[r * n + c];
    out.push_back(std::move(g));
  }
  return out;
}

Piece restrict_to(const Mat& basis, const std::vector<Mat>& parts, int n) {
  Mat left = modp::coordinate_map(basis, n);
  Piece q;
  q.n = static_cast<int>(basis.size());
  for (const auto& part : parts) {
    Mat coords;
    for (const auto& v : part) coords.push_back(mat_vec(left, v));
    q.U.push_back(std::move(coords));
  }
  return q;
}

DimVector dims_of(const Piece& p) {
  DimVector d{p.n};
  for (const auto& u : p.U) d.push_back(static_cast<int>(u.size()));
  return d;
}

void decompose(const Piece& p, std::mt19937_64& rng, std::vector<std::pair<DimVector, int>>& out) {
  auto E = end_basis(p);
  DimVector dv = dims_of(p);
  if (E.size() == 1) {
    out.emplace_back(dv, 1);
    return;
  }
  std::uniform_int_distribution<u64> coef(0, modp::P - 1);
  for (int attempt = 0; attempt < 4; ++attempt) {
    Mat phi(p.n, Vec(p.n, 0));
    for (const auto& e : E) {
      const u64 c = coef(rng);
      for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) phi[i][j] = modp::add(phi[i][j], modp::mul(c, e[i][j]));
    }
    SplitResult sr = find_split(charpoly(phi), rng);
    if (sr.factor) {
      Mat psi = eval_poly(*sr.factor, phi);
      Mat pw = identity_mod(p.n);
      for (int i = 0; i < p.n; ++i) pw = modp::multiply(pw, psi);
      Mat kernel = modp::nullspace(pw, p.n);
      Mat cols(p.n, Vec(p.n));
      for (int i = 0; i < p.n; ++i)
        for (int j = 0; j < p.n; ++j) cols[i][j] = pw[j][i];
      Mat image = modp::row_basis(cols, p.n);
      if (kernel.empty() || image.empty()) continue;
      std::vector<Mat> kparts, iparts;
      for (const auto& u : p.U) {
        const int a = static_cast<int>(u.size());
        Mat imgs;
        for (const auto& v : u) imgs.push_back(mat_vec(pw, v));
        Mat cm(p.n, Vec(a, 0));
        for (int t = 0; t < a; ++t)
          for (int i = 0; i < p.n; ++i) cm[i][t] = imgs[t][i];
        Mat kc = modp::nullspace(cm, a);
        Mat kv;
        for (const auto& c : kc) {
          Vec v(p.n, 0);
          for (int t = 0; t < a; ++t)
            for (int i = 0; i < p.n; ++i) v[i] = modp::add(v[i], modp::mul(c[t], u[t][i]));
          kv.push_back(std::move(v));
        }
        kparts.push_back(std::move(kv));
        iparts.push_back(modp::row_basis(imgs, p.n));
      }
      decompose(restrict_to(kernel, kparts, p.n), rng, out);
      decompose(restrict_to(image, iparts, p.n), rng, out);
      return;
    }
    const int r = sr.degree;
    if (static_cast<int>(E.size()) == r) {
      for (int x : dv)
        if (x % r) throw NonGeneric();
      for (int& x : dv) x /= r;
      out.emplace_back(dv, r);
      return;
    }
  }
  throw NonGeneric();
}

void check_dims(int d, const DimVector& v) {
  if (d < 0 || static_cast<int>(v.size()) != d + 1)
    throw std::invalid_argument("dimension vector must have d+1 entries");
  for (int x : v)
    if (x < 0) throw std::invalid_argument("dimension vector entries must be nonnegative");
}

Mat random_mat(int rows, int cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> coef(0, modp::P - 1);
  Mat m(rows, Vec(cols));
  for (auto& r : m)
    for (auto& x : r) x = coef(rng);
  return m;
}

// dim Hom between star representations given by maps M_j : k^{a_j} -> k^{a_0}
int hom_dim(const DimVector& a, const std::vector<Mat>& M, const DimVector& b, const std::vector<Mat>& N) {
  const int d = static_cast<int>(a.size()) - 1;
  std::vector<int> off(d + 2, 0);
  for (int v = 0; v <= d; ++v) off[v + 1] = off[v] + b[v] * a[v];
  const int nunk = off[d + 1];
  Mat rows;
  for (int j = 1; j <= d; ++j)
    for (int r = 0; r < b[0]; ++r)
      for (int c = 0; c < a[j]; ++c) {
        Vec line(nunk, 0);
        for (int s = 0; s < a[0]; ++s)
          line[off[0] + r * a[0] + s] = modp::add(line[off[0] + r * a[0] + s], M[j - 1][s][c]);
        for (int s = 0; s < b[j]; ++s)
          line[off[j] + s * a[j] + c] = modp::sub(line[off[j] + s * a[j] + c], N[j - 1][r][s]);
        rows.push_back(std::move(line));
      }
  return nunk - modp::rank(rows);
}

CanonicalDecomposition decompose_once(int d, const DimVector& gamma, std::uint64_t seed) {
  std::map<DimVector, int> acc;
  auto unit = [&](int v) {
    DimVector e(d + 1, 0);
    e[v] = 1;
    return e;
  };
  DimVector g = gamma;
  for (int j = 1; j <= d; ++j)
    if (g[j] > g[0]) {
      acc[unit(j)] += g[j] - g[0];
      g[j] = g[0];
    }
  if (g[0] == 0) {
    for (int j = 1; j <= d; ++j)
      if (g[j]) acc[unit(j)] += g[j];
  } else {
    std::mt19937_64 rng(seed);
    Piece p;
    p.n = g[0];
    for (int j = 1; j <= d; ++j) {
      Mat u = random_mat(g[j], g[0], rng);
      if (modp::rank(u) != g[j]) throw NonGeneric();
      p.U.push_back(std::move(u));
    }
    std::vector<std::pair<DimVector, int>> parts;
    decompose(p, rng, parts);
    for (auto& [v, m] : parts) acc[v] += m;
  }
  CanonicalDecomposition out;
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) {
    long long q = euler_form(d, it->first, it->first);
    RootKind k = q == 1 ? RootKind::Real : (q == 0 ? RootKind::Isotropic : RootKind::Imaginary);
    if (q > 1) throw NonGeneric();
    out.summands.push_back({it->first, it->second, k});
  }
  return out;
}

std::uint64_t fnv(std::uint64_t h, std::int64_t x) {
  for (int i = 0; i < 8; ++i) {
    h ^= static_cast<std::uint64_t>(x >> (8 * i)) & 0xff;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace

std::string to_string(RootKind k) {
  switch (k) {
    case RootKind::Real: return "real";
    case RootKind::Isotropic: return "isotropic";
    case RootKind::Imaginary: return "imaginary";
  }
  return "?";
}

bool CanonicalDecomposition::all_real() const {
  return std::all_of(summands.begin(), summands.end(), [](const Summand& s) { return s.kind == RootKind::Real; });
}

long long euler_form(int d, const DimVector& x, const DimVector& y) {
  if (d < 0 || static_cast<int>(x.size()) != d + 1 || static_cast<int>(y.size()) != d + 1)
    throw std::invalid_argument("vectors must have d+1 entries");
  long long s = 0, out = 0;
  for (int i = 0; i <= d; ++i) s += static_cast<long long>(x[i]) * y[i];
  for (int j = 1; j <= d; ++j) out += x[j];
  return s - static_cast<long long>(y[0]) * out;
}

CanonicalDecomposition canonical_decomposition(int d, const DimVector& gamma, std::uint64_t seed) {
  check_dims(d, gamma);
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      return decompose_once(d, gamma, seed + 0x9e3779b97f4a7c15ULL * attempt);
    } catch (const NonGeneric&) {
    }
  }
  throw std::runtime_error("canonical_decomposition: no generic sample found");
}

bool is_primitive_sln_fund(int n, const std::vector<int>& indices) {
  if (n < 2) throw std::invalid_argument("n must be at least 2");
  DimVector g{n};
  for (int i : indices) {
    if (i < 1 || i > n - 1) throw std::invalid_argument("fundamental index out of range 1..n-1");
    g.push_back(i);
  }
  return canonical_decomposition(static_cast<int>(indices.size()), g).all_real();
}

int generic_hom(int d, const DimVector& a, const DimVector& b, std::uint64_t seed) {
  check_dims(d, a);
  check_dims(d, b);
  std::mt19937_64 rng(seed);
  std::vector<Mat> M, N;
  for (int j = 1; j <= d; ++j) M.push_back(random_mat(a[0], a[j], rng));
  for (int j = 1; j <= d; ++j) N.push_back(random_mat(b[0], b[j], rng));
  return hom_dim(a, M, b, N);
}

int generic_end(int d, const DimVector& a, std::uint64_t seed) {
  check_dims(d, a);
  std::mt19937_64 rng(seed);
  std::vector<Mat> M;
  for (int j = 1; j <= d; ++j) M.push_back(random_mat(a[0], a[j], rng));
  return hom_dim(a, M, a, M);
}

int generic_ext(int d, const DimVector& a, const DimVector& b, std::uint64_t seed) {
  return static_cast<int>(generic_hom(d, a, b, seed) - euler_form(d, a, b));
}

OpenOrbitResult open_orbit_oracle(int d, const DimVector& gamma, int samples, std::uint64_t seed, bool use_bound) {
  check_dims(d, gamma);
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  OpenOrbitResult res;
  res.expected = static_cast<int>(euler_form(d, gamma, gamma));
  const bool nonzero = std::any_of(gamma.begin(), gamma.end(), [](int x) { return x > 0; });
  if (use_bound && nonzero && res.expected < 1) {
    // scalars always stabilize
    res.excluded_by_bound = true;
    return res;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-10, 10);
  const int n = gamma[0];
  bool injective_shape = true;
  for (int j = 1; j <= d; ++j) injective_shape = injective_shape && gamma[j] <= n;
  for (int s = 0; s < samples; ++s) {
    ++res.samples_used;
    std::vector<Mat> M;
    std::uint64_t h = 1469598103934665603ULL;
    for (int j = 1; j <= d; ++j) {
      Mat m(n, Vec(gamma[j]));
      for (auto& row : m)
        for (auto& x : row) {
          int v = entry(rng);
          h = fnv(h, v);
          x = modp::reduce(v);
        }
      M.push_back(std::move(m));
    }
    int stab = -1;
    if (injective_shape) {
      Piece p;
      p.n = n;
      bool ok = true;
      for (int j = 1; j <= d && ok; ++j) {
        Mat cols(gamma[j], Vec(n));
        for (int c = 0; c < gamma[j]; ++c)
          for (int r = 0; r < n; ++r) cols[c][r] = M[j - 1][r][c];
        ok = modp::rank(cols) == gamma[j];
        p.U.push_back(std::move(cols));
      }
      // the sources' blocks are then determined by the central one
      if (ok) stab = end_dim(p);
    }
    if (stab < 0) stab = hom_dim(gamma, M, gamma, M);
    if (res.min_stabilizer < 0 || stab < res.min_stabilizer) res.min_stabilizer = stab;
    if (stab == res.expected) {
      res.open = true;
      res.witness_hash = h;
      return res;
    }
  }
  return res;
}

}  // namespace flagprim
