#include "flagprim/flagorbit.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

namespace flagprim {

namespace {

using u64 = std::uint64_t;
using Vec = std::vector<u64>;
using modp::Mat;

std::vector<int> simple_coords(Family f, int l, const std::vector<int>& w) {
  std::vector<int> s(w.size(), 0);
  int run = 0;
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = run += w[i];
  std::vector<int> c(l);
  switch (f) {
    case Family::A:
    case Family::B:
      for (int k = 0; k < l; ++k) c[k] = s[k];
      break;
    case Family::C:
      for (int k = 0; k < l - 1; ++k) c[k] = s[k];
      c[l - 1] = s[l - 1] / 2;
      break;
    case Family::D:
      for (int k = 0; k < l - 2; ++k) c[k] = s[k];
      c[l - 2] = (s[l - 2] - w[l - 1]) / 2;
      c[l - 1] = (s[l - 2] + w[l - 1]) / 2;
      break;
    default:
      throw std::logic_error("not classical");
  }
  return c;
}

ClassicalRealization build(const SimpleType& t) {
  ClassicalRealization cr;
  cr.type = t;
  const int l = t.rank;
  const Family f = t.family;
  int N = 0, edim = l;
  std::vector<std::vector<int>> coord;
  if (f == Family::A) {
    N = l + 1;
    edim = l + 1;
    for (int i = 0; i < N; ++i) {
      std::vector<int> e(edim, 0);
      e[i] = 1;
      coord.push_back(e);
    }
  } else {
    N = f == Family::B ? 2 * l + 1 : 2 * l;
    for (int i = 0; i < N; ++i) {
      std::vector<int> e(edim, 0);
      if (i < l) e[i] = 1;
      else if (i < 2 * l) e[i - l] = -1;
      coord.push_back(e);
    }
  }
  cr.N = N;
  // defining equations on flattened X
  Mat eqs;
  if (f == Family::A) {
    Vec row(N * N, 0);
    for (int i = 0; i < N; ++i) row[i * N + i] = 1;
    eqs.push_back(row);
  } else {
    Mat Q(N, Vec(N, 0));
    for (int i = 0; i < l; ++i) {
      Q[i][i + l] = 1;
      Q[i + l][i] = f == Family::C ? modp::P - 1 : 1;
    }
    if (f == Family::B) Q[2 * l][2 * l] = 1;
    // (X^T Q + Q X)[a][b]
    for (int a = 0; a < N; ++a)
      for (int b = 0; b < N; ++b) {
        Vec row(N * N, 0);
        for (int c = 0; c < N; ++c) {
          row[c * N + a] = modp::add(row[c * N + a], Q[c][b]);
          row[c * N + b] = modp::add(row[c * N + b], Q[a][c]);
        }
        eqs.push_back(row);
      }
  }
  std::map<std::vector<int>, std::vector<int>> classes;  // weight -> flattened positions
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      std::vector<int> w(edim);
      for (int k = 0; k < edim; ++k) w[k] = coord[i][k] - coord[j][k];
      classes[w].push_back(i * N + j);
    }
  for (const auto& [w, pos] : classes) {
    Mat sub;
    for (const auto& row : eqs) {
      Vec r(pos.size());
      for (std::size_t k = 0; k < pos.size(); ++k) r[k] = row[pos[k]];
      sub.push_back(std::move(r));
    }
    Mat ker = modp::nullspace(sub, static_cast<int>(pos.size()));
    const bool zero = std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
    for (const auto& k : ker) {
      Mat X(N, Vec(N, 0));
      for (std::size_t q = 0; q < pos.size(); ++q) X[pos[q] / N][pos[q] % N] = k[q];
      cr.basis.push_back(std::move(X));
      cr.root.push_back(zero ? std::vector<int>(l, 0) : simple_coords(f, l, w));
    }
  }
  Mat flat;
  for (const auto& X : cr.basis) {
    Vec v;
    for (const auto& r : X) v.insert(v.end(), r.begin(), r.end());
    flat.push_back(std::move(v));
  }
  cr.coords = modp::coordinate_map(flat, N * N);
  return cr;
}

Mat identity_mod(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat exp_nilpotent(const Mat& X, std::int64_t t) {
  const int n = static_cast<int>(X.size());
  Mat out = identity_mod(n), term = identity_mod(n);
  const u64 tm = modp::reduce(t);
  for (int k = 1; k <= n; ++k) {
    term = modp::multiply(term, X);
    const u64 f = modp::mul(tm, modp::inv(static_cast<u64>(k)));
    bool nonzero = false;
    for (auto& r : term)
      for (auto& x : r) {
        x = modp::mul(x, f);
        nonzero = nonzero || x;
      }
    if (!nonzero) break;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i][j] = modp::add(out[i][j], term[i][j]);
  }
  return out;
}

Support normalize(const RootSystem& R, Support s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  if (s.empty()) throw std::invalid_argument("support must be nonempty");
  for (int x : s)
    if (x < 1 || x > R.rank()) throw std::invalid_argument("support node out of range");
  return s;
}

void require_classical(const RootSystem& R) {
  if (!R.type().classical())
    throw std::invalid_argument("flag orbit oracle unsupported for type " + R.type().name());
}

u64 mix(u64 x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

std::vector<int> ClassicalRealization::parabolic(const Support& s) const {
  std::vector<int> out;
  for (int i = 0; i < dim(); ++i) {
    const auto& c = root[i];
    bool neg = std::any_of(c.begin(), c.end(), [](int x) { return x < 0; });
    if (!neg) {
      out.push_back(i);
      continue;
    }
    if (std::all_of(s.begin(), s.end(), [&](int node) { return c[node - 1] == 0; })) out.push_back(i);
  }
  return out;
}

const ClassicalRealization& classical_realization(const SimpleType& t) {
  static std::mutex mu;
  static std::map<std::string, std::unique_ptr<ClassicalRealization>> cache;
  if (!t.classical()) throw std::invalid_argument("no classical realization for " + t.name());
  std::lock_guard<std::mutex> lk(mu);
  auto& slot = cache[t.name()];
  if (!slot) slot = std::make_unique<ClassicalRealization>(build(t));
  return *slot;
}

std::string to_string(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::Open: return "open";
    case OrbitStatus::NotOpen: return "not_open";
    case OrbitStatus::ProbablyNotOpen: return "probably_not_open";
  }
  return "?";
}

std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::Primitive: return "primitive";
    case Evidence::NotPrimitive: return "not_primitive";
    case Evidence::Unknown: return "unknown";
  }
  return "?";
}

int parabolic_codim(const RootSystem& R, const Support& s) {
  Support n = normalize(R, s);
  int codim = 0;
  for (const auto& c : R.positive_roots())
    if (std::any_of(n.begin(), n.end(), [&](int node) { return c[node - 1] != 0; })) ++codim;
  return codim;
}

int flag_sample_intersection(const RootSystem& R, const std::vector<Support>& supports, std::uint64_t sample_seed) {
  require_classical(R);
  const auto& cr = classical_realization(R.type());
  const int k = cr.dim();
  std::vector<int> rootvecs;
  for (int i = 0; i < k; ++i)
    if (std::any_of(cr.root[i].begin(), cr.root[i].end(), [](int x) { return x != 0; })) rootvecs.push_back(i);
  std::mt19937_64 rng(sample_seed);
  std::uniform_int_distribution<std::size_t> pick(0, rootvecs.size() - 1);
  std::uniform_int_distribution<int> coef(1, 5), sign(0, 1);
  Mat stack;
  for (const auto& s0 : supports) {
    Support s = normalize(R, s0);
    Mat g = identity_mod(cr.N), gi = identity_mod(cr.N);
    for (int step = 0; step < 3 * R.rank(); ++step) {
      const Mat& X = cr.basis[rootvecs[pick(rng)]];
      int t = coef(rng) * (sign(rng) ? 1 : -1);
      g = modp::multiply(g, exp_nilpotent(X, t));
      gi = modp::multiply(exp_nilpotent(X, -t), gi);
    }
    Mat V;
    for (int idx : cr.parabolic(s)) {
      Mat Y = modp::multiply(modp::multiply(g, cr.basis[idx]), gi);
      Vec flat;
      for (const auto& r : Y) flat.insert(flat.end(), r.begin(), r.end());
      Vec c(k, 0);
      for (int a = 0; a < k; ++a)
        for (std::size_t b = 0; b < flat.size(); ++b)
          if (flat[b]) c[a] = modp::add(c[a], modp::mul(cr.coords[a][b], flat[b]));
      V.push_back(std::move(c));
    }
    for (auto& a : modp::nullspace(V, k)) stack.push_back(std::move(a));
  }
  return k - modp::rank(stack);
}

FlagOrbitResult open_orbit_flags(const RootSystem& R, const std::vector<Support>& supports, int samples,
                                 std::uint64_t seed) {
  require_classical(R);
  if (samples < 1) throw std::invalid_argument("samples must be positive");
  if (supports.empty()) throw std::invalid_argument("at least one support required");
  FlagOrbitResult res;
  for (const auto& s : supports) res.codim_sum += parabolic_codim(R, s);
  res.expected = R.dim_g() - res.codim_sum;
  if (res.expected < 0) {
    res.status = OrbitStatus::NotOpen;
    res.by_dimension = true;
    return res;
  }
  for (int s = 0; s < samples; ++s) {
    const u64 ss = mix(seed ^ mix(static_cast<u64>(s)));
    ++res.samples_used;
    int dim = flag_sample_intersection(R, supports, ss);
    if (res.min_intersection < 0 || dim < res.min_intersection) res.min_intersection = dim;
    if (dim == res.expected) {
      res.status = OrbitStatus::Open;
      res.witness_seed = ss;
      return res;
    }
  }
  return res;
}

BridgeResult primitivity_bridge(const std::vector<Weight>& weights, OrbitStatus verdict) {
  BridgeResult b;
  if (verdict == OrbitStatus::Open) {
    b.status = Evidence::Primitive;
    b.certified = true;
    b.reason = "open orbit on the product of flag varieties";
    return b;
  }
  bool fundamental = std::all_of(weights.begin(), weights.end(), [](const Weight& w) { return support(w).size() <= 1; });
  if (!fundamental) {
    b.reason = "no open orbit, but some weight is not a multiple of a fundamental weight";
    return b;
  }
  b.status = Evidence::NotPrimitive;
  b.certified = verdict == OrbitStatus::NotOpen;
  b.reason = b.certified ? "no open orbit; multiples of fundamental weights give ampleness"
                         : "no open orbit found by sampling; multiples of fundamental weights give ampleness";
  return b;
}

}  // namespace flagprim
