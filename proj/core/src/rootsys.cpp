#include "flagprim/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "flagprim/linalg.hpp"

namespace flagprim {

char family_letter(Family f) {
  return "ABCDEFG"[static_cast<int>(f)];
}

std::string SimpleType::name() const {
  return std::string(1, family_letter(family)) + std::to_string(rank);
}

void SimpleType::validate() const {
  bool ok = false;
  switch (family) {
    case Family::A: ok = rank >= 1; break;
    case Family::B: ok = rank >= 3; break;
    case Family::C: ok = rank >= 2; break;
    case Family::D: ok = rank >= 4; break;
    case Family::E: ok = rank >= 6 && rank <= 8; break;
    case Family::F: ok = rank == 4; break;
    case Family::G: ok = rank == 2; break;
  }
  if (!ok) throw std::invalid_argument("invalid rank for family: " + name());
}

SimpleType SimpleType::parse(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("bad type: " + s);
  const std::string letters = "ABCDEFG";
  auto pos = letters.find(static_cast<char>(std::toupper(static_cast<unsigned char>(s[0]))));
  if (pos == std::string::npos) throw std::invalid_argument("bad family: " + s);
  int r = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw std::invalid_argument("bad rank: " + s);
    r = r * 10 + (s[i] - '0');
    if (r > 1000) throw std::invalid_argument("rank too large: " + s);
  }
  SimpleType t{static_cast<Family>(pos), r};
  if (t.family == Family::B && r == 2) t.family = Family::C;
  t.validate();
  return t;
}

Weight WeylElement::apply(const Weight& v) const {
  Weight out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += matrix[i][j] * v[j];
  return out;
}

QVec WeylElement::apply(const QVec& v) const {
  QVec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (matrix[i][j] != 0) out[i] += matrix[i][j] * v[j];
  return out;
}

namespace {

struct Diagram {
  std::vector<std::pair<int, int>> edges;  // 0-based
  std::vector<int> d;
};

Diagram diagram(const SimpleType& t) {
  const int l = t.rank;
  Diagram g;
  g.d.assign(l, 1);
  auto chain = [&](int n) {
    for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1});
  };
  switch (t.family) {
    case Family::A: chain(l); break;
    case Family::B:
      chain(l);
      for (int i = 0; i < l - 1; ++i) g.d[i] = 2;
      break;
    case Family::C:
      chain(l);
      g.d[l - 1] = 2;
      break;
    case Family::D:
      chain(l - 1);
      g.edges.push_back({l - 3, l - 1});
      break;
    case Family::E:
      g.edges.push_back({0, 2});
      g.edges.push_back({1, 3});
      for (int i = 2; i + 1 < l; ++i) g.edges.push_back({i, i + 1});
      break;
    case Family::F:
      chain(4);
      g.d = {2, 2, 1, 1};
      break;
    case Family::G:
      chain(2);
      g.d = {1, 3};
      break;
  }
  return g;
}

std::vector<int> hard_w0(const SimpleType& t) {
  const int l = t.rank;
  std::vector<int> p(l);
  std::iota(p.begin(), p.end(), 0);
  if (t.family == Family::A) {
    std::reverse(p.begin(), p.end());
  } else if (t.family == Family::D && l % 2 == 1) {
    std::swap(p[l - 2], p[l - 1]);
  } else if (t.family == Family::E && l == 6) {
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
  }
  return p;
}

long long lcm_ll(long long a, long long b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

RootSystem::RootSystem(SimpleType t) : type_(t) {
  type_.validate();
  const int l = type_.rank;
  Diagram g = diagram(type_);
  d_ = g.d;
  gram_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) gram_[i][i] = 2 * d_[i];
  for (auto [i, j] : g.edges) {
    int v = -std::max(d_[i], d_[j]);
    gram_[i][j] = gram_[j][i] = v;
  }
  cartan_.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) cartan_[i][j] = gram_[i][j] / d_[i];

  QMat a(l, QVec(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) a[i][j] = cartan_[i][j];
  inv_cartan_ = inverse(a);

  // positive roots, level by level in height
  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> level;
  for (int i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    level.push_back(e);
    known.insert(e);
  }
  while (!level.empty()) {
    std::sort(level.begin(), level.end());
    for (auto& r : level) pos_roots_.push_back(r);
    std::set<std::vector<int>> next;
    for (const auto& beta : level) {
      for (int i = 0; i < l; ++i) {
        int p = 0;
        std::vector<int> down = beta;
        while (true) {
          down[i] -= 1;
          if (down[i] < 0 || !known.count(down)) break;
          ++p;
        }
        int pair = 0;
        for (int j = 0; j < l; ++j) pair += cartan_[i][j] * beta[j];
        if (p - pair > 0) {
          std::vector<int> up = beta;
          up[i] += 1;
          if (!known.count(up)) next.insert(up);
        }
      }
    }
    level.assign(next.begin(), next.end());
    for (auto& r : level) known.insert(r);
  }
  dim_g_ = 2 * static_cast<int>(pos_roots_.size()) + l;
  w0_perm_ = hard_w0(type_);

  long long scale = 1;
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational q = inv_cartan_[i][j] * d_[i];
      scale = lcm_ll(scale, q.get_den().get_si());
    }
  form_scale_ = scale;
  form_.assign(l, std::vector<long long>(l, 0));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) {
      Rational q = inv_cartan_[i][j] * d_[i] * static_cast<long>(scale);
      form_[i][j] = q.get_num().get_si();
    }
}

std::size_t RootSystem::weyl_order() const {
  const std::size_t l = rank();
  auto fact = [](std::size_t n) {
    std::size_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f;
  };
  switch (type_.family) {
    case Family::A: return fact(l + 1);
    case Family::B:
    case Family::C: return (std::size_t{1} << l) * fact(l);
    case Family::D: return (std::size_t{1} << (l - 1)) * fact(l);
    case Family::E: return l == 6 ? 51840 : l == 7 ? 2903040 : 696729600;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

Weight RootSystem::root_to_weight(const std::vector<int>& c) const {
  const int l = rank();
  Weight w(l, 0);
  for (int k = 0; k < l; ++k)
    for (int j = 0; j < l; ++j) w[k] += cartan_[k][j] * c[j];
  return w;
}

QVec RootSystem::weight_to_roots(const QVec& w) const {
  const int l = rank();
  QVec k(l, 0);
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) k[i] += inv_cartan_[i][j] * w[j];
  return k;
}

int RootSystem::root_norm(const std::vector<int>& c) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) s += static_cast<long long>(c[i]) * gram_[i][j] * c[j];
  return static_cast<int>(s / 2);
}

std::vector<int> RootSystem::coroot(const std::vector<int>& c) const {
  int n = root_norm(c);
  std::vector<int> out(rank());
  for (int k = 0; k < rank(); ++k) out[k] = c[k] * d_[k] / n;
  return out;
}

long long RootSystem::form(const Weight& a, const Weight& b) const {
  long long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < rank(); ++j) s += a[i] * form_[i][j] * b[j];
  }
  return s;
}

Weight RootSystem::reflect(const Weight& v, int i) const {
  Weight out = v;
  const int c = v[i];
  if (c)
    for (int k = 0; k < rank(); ++k) out[k] -= c * cartan_[k][i];
  return out;
}

QVec RootSystem::reflect(const QVec& v, int i) const {
  QVec out = v;
  const Rational c = v[i];
  if (c != 0)
    for (int k = 0; k < rank(); ++k)
      if (cartan_[k][i]) out[k] -= c * cartan_[k][i];
  return out;
}

Weight RootSystem::to_dominant(const Weight& v, std::vector<int>* word) const {
  Weight w = v;
  while (true) {
    int i = 0;
    while (i < rank() && w[i] >= 0) ++i;
    if (i == rank()) return w;
    w = reflect(w, i);
    if (word) word->push_back(i);
  }
}

QVec RootSystem::to_dominant(const QVec& v, std::vector<int>* word) const {
  QVec w = v;
  while (true) {
    int i = 0;
    while (i < rank() && w[i] >= 0) ++i;
    if (i == rank()) return w;
    w = reflect(w, i);
    if (word) word->push_back(i);
  }
}

WeylElement RootSystem::element(const std::vector<int>& word) const {
  const int l = rank();
  WeylElement e;
  e.word = word;
  e.matrix.assign(l, std::vector<int>(l, 0));
  for (int i = 0; i < l; ++i) e.matrix[i][i] = 1;
  // rightmost letter acts first: M = M_{w0} ... M_{wk}; build by left multiplication from the right end
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const int s = *it;
    // new = M_s * old, row k of M_s: e_k - a_ks e_s
    IMat next = e.matrix;
    for (int k = 0; k < l; ++k) {
      if (!cartan_[k][s]) continue;
      for (int j = 0; j < l; ++j) next[k][j] = e.matrix[k][j] - cartan_[k][s] * e.matrix[s][j];
    }
    e.matrix = std::move(next);
  }
  return e;
}

const std::vector<WeylElement>& RootSystem::weyl_group() const {
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (weyl_) return *weyl_;
  if (weyl_order() > 100000) throw std::runtime_error("Weyl group too large to enumerate: " + type_.name());
  std::map<Weight, std::vector<int>> seen;
  std::vector<std::pair<Weight, std::vector<int>>> level{{rho(), {}}};
  seen[rho()] = {};
  std::vector<std::vector<int>> words{{}};
  while (!level.empty()) {
    std::map<Weight, std::vector<int>> next;
    for (const auto& [pt, word] : level) {
      for (int i = 0; i < rank(); ++i) {
        Weight q = reflect(pt, i);
        if (seen.count(q)) continue;
        std::vector<int> w{i};
        w.insert(w.end(), word.begin(), word.end());
        auto it = next.find(q);
        if (it == next.end() || w < it->second) next[q] = w;
      }
    }
    std::vector<std::pair<Weight, std::vector<int>>> lvl(next.begin(), next.end());
    std::sort(lvl.begin(), lvl.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    for (auto& [pt, w] : lvl) {
      seen[pt] = w;
      words.push_back(w);
    }
    level = std::move(lvl);
  }
  auto out = std::make_shared<std::vector<WeylElement>>();
  out->reserve(words.size());
  for (const auto& w : words) out->push_back(element(w));
  weyl_ = out;
  return *weyl_;
}

int RootSystem::levi_dimension(int node) const {
  if (node < 1 || node > rank()) throw std::out_of_range("node index");
  int zero = 0;
  for (const auto& c : pos_roots_)
    if (c[node - 1] == 0) ++zero;
  return rank() + 2 * zero;
}

BoundData RootSystem::bound_data() const {
  BoundData b;
  b.dim_g = dim_g_;
  for (int i = 1; i <= rank(); ++i) b.max_levi = std::max(b.max_levi, levi_dimension(i));
  for (int i = 1; i <= rank(); ++i)
    if (levi_dimension(i) == b.max_levi) b.argmax.push_back(i);
  Rational q(2 * dim_g_, dim_g_ - b.max_levi);
  q.canonicalize();
  b.num = q.get_num();
  b.den = q.get_den();
  Integer f = b.num / b.den;
  b.bound = static_cast<int>(f.get_si());
  return b;
}

std::shared_ptr<const RootSystem> root_system(const SimpleType& t) {
  static std::mutex mu;
  static std::map<SimpleType, std::shared_ptr<const RootSystem>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(t);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const RootSystem>(t);
  cache[t] = r;
  return r;
}

std::shared_ptr<const RootSystem> root_system(const std::string& name) {
  return root_system(SimpleType::parse(name));
}

Weight dual_weight(const RootSystem& R, const Weight& w) {
  Weight out(w.size());
  const auto& p = R.w0_perm();
  for (std::size_t i = 0; i < w.size(); ++i) out[p[i]] = w[i];
  return out;
}

Support support(const Weight& w) {
  Support s;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != 0) s.push_back(static_cast<int>(i) + 1);
  return s;
}

bool same_parabolic(const Weight& a, const Weight& b) {
  return support(a) == support(b);
}

bool is_dominant(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x >= 0; });
}

bool is_zero(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

namespace {

template <class V>
std::set<V> orbit_bfs(const RootSystem& R, const V& v) {
  std::set<V> seen{v};
  std::deque<V> q{v};
  while (!q.empty()) {
    V x = q.front();
    q.pop_front();
    for (int i = 0; i < R.rank(); ++i) {
      if (x[i] == 0) continue;
      V y = R.reflect(x, i);
      if (seen.insert(y).second) q.push_back(y);
    }
  }
  return seen;
}

}  // namespace

std::set<Weight> weyl_orbit(const RootSystem& R, const Weight& v) {
  return orbit_bfs(R, v);
}

std::set<QVec> weyl_orbit(const RootSystem& R, const QVec& v) {
  return orbit_bfs(R, v);
}

std::vector<std::vector<int>> diagram_automorphisms(const SimpleType& t) {
  const int l = t.rank;
  std::vector<int> id(l);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> out{id};
  if (t.family == Family::A && l >= 2) {
    std::vector<int> r(id.rbegin(), id.rend());
    out.push_back(r);
  } else if (t.family == Family::D && l == 4) {
    std::vector<int> legs{0, 2, 3};
    std::sort(legs.begin(), legs.end());
    while (std::next_permutation(legs.begin(), legs.end())) {
      std::vector<int> p = id;
      p[0] = legs[0];
      p[2] = legs[1];
      p[3] = legs[2];
      out.push_back(p);
    }
  } else if (t.family == Family::D) {
    std::vector<int> p = id;
    std::swap(p[l - 2], p[l - 1]);
    out.push_back(p);
  } else if (t.family == Family::E && l == 6) {
    std::vector<int> p = id;
    std::swap(p[0], p[5]);
    std::swap(p[2], p[4]);
    out.push_back(p);
  }
  return out;
}

}  // namespace flagprim
