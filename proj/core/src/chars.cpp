#include "flagprim/chars.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include <nlohmann/json.hpp>

namespace flagprim {

Integer weyl_dim(const RootSystem& R, const Weight& w) {
  Integer num = 1, den = 1;
  const auto& d = R.symmetrizer();
  for (const auto& c : R.positive_roots()) {
    long a = 0, b = 0;
    for (int k = 0; k < R.rank(); ++k) {
      a += static_cast<long>(c[k]) * d[k] * (w[k] + 1);
      b += static_cast<long>(c[k]) * d[k];
    }
    num *= a;
    den *= b;
  }
  return num / den;
}

long long weyl_dim64(const RootSystem& R, const Weight& w) {
  return to_int64(weyl_dim(R, w));
}

namespace {

int root_height(const std::vector<int>& c) {
  int h = 0;
  for (int x : c) h += x;
  return h;
}

Weight add(const Weight& a, const Weight& b) {
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

}  // namespace

CharacterTable freudenthal(const RootSystem& R, const Weight& top) {
  if (!is_dominant(top)) throw std::invalid_argument("freudenthal: weight not dominant");
  const int r = R.rank();
  std::vector<Weight> roots_w;
  std::vector<int> heights;
  for (const auto& c : R.positive_roots()) {
    roots_w.push_back(R.root_to_weight(c));
    heights.push_back(root_height(c));
  }
  // dominant weights below top, with depth
  std::map<Weight, int> depth{{top, 0}};
  std::vector<Weight> frontier{top};
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& mu : frontier) {
      for (std::size_t b = 0; b < roots_w.size(); ++b) {
        Weight nu(r);
        bool dom = true;
        for (int k = 0; k < r; ++k) {
          nu[k] = mu[k] - roots_w[b][k];
          if (nu[k] < 0) { dom = false; break; }
        }
        if (!dom) continue;
        if (depth.emplace(nu, depth[mu] + heights[b]).second) next.push_back(nu);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::pair<int, Weight>> order;
  for (const auto& [w, dp] : depth) order.push_back({dp, w});
  std::sort(order.begin(), order.end());

  const Weight rho = R.rho();
  const Weight top_rho = add(top, rho);
  const long long top_norm = R.form(top_rho, top_rho);
  CharacterTable table;
  table[top] = 1;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Weight& mu = order[idx].second;
    const Weight mu_rho = add(mu, rho);
    const long long den = top_norm - R.form(mu_rho, mu_rho);
    long long sum = 0;
    for (const auto& beta : roots_w) {
      Weight nu = mu;
      while (true) {
        for (int k = 0; k < r; ++k) nu[k] += beta[k];
        auto it = table.find(R.to_dominant(nu));
        if (it == table.end()) break;
        sum += it->second * R.form(nu, beta);
      }
    }
    if (den <= 0 || (2 * sum) % den != 0) throw std::logic_error("freudenthal: inexact division");
    const long long m = 2 * sum / den;
    if (m > 0) table[mu] = m;
  }
  return table;
}

namespace {

struct CacheState {
  std::shared_mutex mu;
  CharCacheOptions opts;
  std::unordered_map<std::string, std::shared_ptr<const CharacterTable>> tables;
  std::unordered_map<std::string, std::shared_ptr<const ExpandedCharacter>> expanded;
};

CacheState& cache_state() {
  static CacheState s;
  return s;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::filesystem::path disk_path(const std::string& dir, const std::string& key) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(key)));
  return std::filesystem::path(dir) / (std::string("char_") + buf + ".json");
}

std::shared_ptr<const CharacterTable> disk_load(const std::string& dir, const std::string& key) {
  auto p = disk_path(dir, key);
  std::ifstream in(p);
  if (!in) return nullptr;
  try {
    nlohmann::json j = nlohmann::json::parse(in);
    if (j.at("key").get<std::string>() != key) return nullptr;
    auto t = std::make_shared<CharacterTable>();
    for (const auto& e : j.at("table")) (*t)[e.at(0).get<Weight>()] = e.at(1).get<long long>();
    return t;
  } catch (const std::exception&) {
    return nullptr;
  }
}

void disk_store(const std::string& dir, const std::string& key, const CharacterTable& t) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  nlohmann::json j;
  j["key"] = key;
  j["table"] = nlohmann::json::array();
  for (const auto& [w, m] : t) j["table"].push_back({w, m});
  auto p = disk_path(dir, key);
  auto tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << j.dump();
  }
  std::filesystem::rename(tmp, p, ec);
}

}  // namespace

std::string char_cache_key(const RootSystem& R, const Weight& w) {
  std::string k = R.type().name() + ":";
  for (std::size_t i = 0; i < w.size(); ++i) k += (i ? "," : "") + std::to_string(w[i]);
  return k;
}

void set_char_cache_options(const CharCacheOptions& o) {
  auto& s = cache_state();
  std::unique_lock lock(s.mu);
  s.opts = o;
}

CharCacheOptions char_cache_options() {
  auto& s = cache_state();
  std::shared_lock lock(s.mu);
  return s.opts;
}

void clear_char_cache() {
  auto& s = cache_state();
  std::unique_lock lock(s.mu);
  s.tables.clear();
  s.expanded.clear();
}

std::shared_ptr<const CharacterTable> character(const RootSystem& R, const Weight& w) {
  auto& s = cache_state();
  const std::string key = char_cache_key(R, w);
  CharCacheOptions opts;
  {
    std::shared_lock lock(s.mu);
    opts = s.opts;
    if (opts.memo) {
      auto it = s.tables.find(key);
      if (it != s.tables.end()) return it->second;
    }
  }
  std::shared_ptr<const CharacterTable> t;
  if (!opts.disk_dir.empty()) t = disk_load(opts.disk_dir, key);
  if (!t) {
    t = std::make_shared<const CharacterTable>(freudenthal(R, w));
    if (!opts.disk_dir.empty()) disk_store(opts.disk_dir, key, *t);
  }
  if (opts.memo) {
    std::unique_lock lock(s.mu);
    s.tables.emplace(key, t);
  }
  return t;
}

std::shared_ptr<const ExpandedCharacter> expanded_character(const RootSystem& R, const Weight& w) {
  auto& s = cache_state();
  const std::string key = char_cache_key(R, w);
  bool memo;
  {
    std::shared_lock lock(s.mu);
    memo = s.opts.memo;
    if (memo) {
      auto it = s.expanded.find(key);
      if (it != s.expanded.end()) return it->second;
    }
  }
  auto table = character(R, w);
  auto out = std::make_shared<ExpandedCharacter>();
  for (const auto& [dom, m] : *table)
    for (const auto& x : weyl_orbit(R, dom)) out->push_back({x, m});
  std::shared_ptr<const ExpandedCharacter> res = out;
  if (memo) {
    std::unique_lock lock(s.mu);
    s.expanded.emplace(key, res);
  }
  return res;
}

bool dot_dominant(const RootSystem& R, Weight& v, int& sign) {
  const int r = R.rank();
  for (int k = 0; k < r; ++k) v[k] += 1;
  sign = 1;
  while (true) {
    int i = 0;
    while (i < r && v[i] > 0) ++i;
    if (i == r) break;
    if (v[i] == 0) return false;
    v = R.reflect(v, i);
    sign = -sign;
  }
  for (int k = 0; k < r; ++k) v[k] -= 1;
  return true;
}

namespace {

// true when a should be iterated rather than b
bool smaller_factor(const RootSystem& R, const Weight& a, const Weight& b) {
  Integer da = weyl_dim(R, a), db = weyl_dim(R, b);
  if (da != db) return da < db;
  long sa = 0, sb = 0;
  for (int x : a) sa += x;
  for (int x : b) sb += x;
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

WeightMultiset tensor_decompose(const RootSystem& R, const Weight& a, const Weight& b) {
  if (!is_dominant(a) || !is_dominant(b)) throw std::invalid_argument("tensor_decompose: weights must be dominant");
  const bool a_small = smaller_factor(R, a, b);
  const Weight& small = a_small ? a : b;
  const Weight& big = a_small ? b : a;
  auto ch = expanded_character(R, small);
  std::map<Weight, long long> acc;
  for (const auto& [kappa, m] : *ch) {
    Weight v = add(big, kappa);
    int sign;
    if (!dot_dominant(R, v, sign)) continue;
    acc[v] += sign * m;
  }
  WeightMultiset out;
  for (auto& [w, m] : acc) {
    if (m < 0) throw std::logic_error("tensor_decompose: negative multiplicity");
    if (m > 0) out.emplace(w, m);
  }
  return out;
}

long long klimyk_coefficient(const RootSystem& R, const Weight& a, const Weight& b, const Weight& target) {
  const bool a_small = smaller_factor(R, a, b);
  const Weight& small = a_small ? a : b;
  const Weight& big = a_small ? b : a;
  if (!dominance_leq(R, target, add(a, b))) return 0;
  auto ch = expanded_character(R, small);
  long long c = 0;
  for (const auto& [kappa, m] : *ch) {
    Weight v = add(big, kappa);
    int sign;
    if (!dot_dominant(R, v, sign)) continue;
    if (v == target) c += sign * m;
  }
  if (c < 0) throw std::logic_error("klimyk_coefficient: negative multiplicity");
  return c;
}

long long multiset_coefficient(const RootSystem& R, const WeightMultiset& ms, const Weight& b, const Weight& target) {
  long long c = 0;
  for (const auto& [nu, m] : ms) c += m * klimyk_coefficient(R, nu, b, target);
  return c;
}

WeightMultiset tensor_decompose(const RootSystem& R, const std::vector<Weight>& factors) {
  WeightMultiset cur{{Weight(R.rank(), 0), 1}};
  for (const auto& f : factors) {
    WeightMultiset next;
    for (const auto& [nu, m] : cur)
      for (const auto& [w, k] : tensor_decompose(R, nu, f)) next[w] += m * k;
    cur = std::move(next);
  }
  return cur;
}

bool dominance_leq(const RootSystem& R, const Weight& mu, const Weight& nu) {
  QVec diff(R.rank());
  for (int i = 0; i < R.rank(); ++i) diff[i] = nu[i] - mu[i];
  for (const auto& x : R.weight_to_roots(diff))
    if (x < 0 || x.get_den() != 1) return false;
  return true;
}

long long lr_coefficient(const RootSystem& R, const std::vector<Weight>& factors, const Weight& mu) {
  std::vector<Weight> all;
  for (const auto& f : factors) {
    if (!is_dominant(f)) throw std::invalid_argument("lr_coefficient: weights must be dominant");
    if (!is_zero(f)) all.push_back(f);
  }
  if (!is_dominant(mu)) throw std::invalid_argument("lr_coefficient: target must be dominant");
  if (!is_zero(mu)) all.push_back(dual_weight(R, mu));
  if (all.empty()) return 1;
  if (all.size() == 1) return 0;
  // the largest module becomes the target; the rest are folded smallest first
  std::sort(all.begin(), all.end(), [&](const Weight& x, const Weight& y) { return smaller_factor(R, x, y); });
  const Weight target = dual_weight(R, all.back());
  all.pop_back();
  if (all.size() == 1) return all[0] == target ? 1 : 0;

  const int r = R.rank();
  std::vector<Weight> tail_sum(all.size() + 1, Weight(r, 0));
  for (int k = static_cast<int>(all.size()) - 1; k >= 0; --k) tail_sum[k] = add(tail_sum[k + 1], all[k]);

  WeightMultiset cur{{all[0], 1}};
  if (!dominance_leq(R, target, tail_sum[0])) return 0;
  for (std::size_t k = 1; k + 1 < all.size(); ++k) {
    WeightMultiset next;
    for (const auto& [nu, m] : cur)
      for (const auto& [w, c] : tensor_decompose(R, nu, all[k]))
        if (dominance_leq(R, target, add(w, tail_sum[k + 1]))) next[w] += m * c;
    cur = std::move(next);
    if (cur.empty()) return 0;
  }
  return multiset_coefficient(R, cur, all.back(), target);
}

bool gamma_member(const RootSystem& R, const std::vector<Weight>& mus) {
  return invariant_dim(R, mus) >= 1;
}

Integer module_dimension(const RootSystem& R, const WeightMultiset& m) {
  Integer s = 0;
  for (const auto& [w, k] : m) s += weyl_dim(R, w) * static_cast<long>(k);
  return s;
}

WeightMultiset e6_fastpath(int s, int t) {
  if (s < 0 || t < 0) throw std::invalid_argument("e6_fastpath: negative degree");
  WeightMultiset out;
  for (int a3 = 0; a3 <= std::min(s, t); ++a3)
    for (int a4 = 0; a3 + a4 <= std::min(s, t); ++a4) {
      const int a1 = s - a3 - a4, a2 = t - a3 - a4;
      Weight w{a1 + a2, 0, a3, 0, 0, a4};
      out[w] += 1;
    }
  return out;
}

int invariant_dim_e6_system(int n1, int n2, int n3, int n4) {
  if (n1 < 0 || n2 < 0 || n3 < 0 || n4 < 0) throw std::invalid_argument("negative degree");
  // a3 = b3 = 0 forced
  int count = 0;
  for (int a4 = 0; a4 <= std::min(n1, n2); ++a4) {
    const int a1 = n1 - a4, a2 = n2 - a4;
    const int b4 = a1 + a2;
    const int b1 = n3 - b4, b2 = n4 - b4;
    if (b1 < 0 || b2 < 0) continue;
    if (a4 == b1 + b2) ++count;
  }
  return count;
}

}  // namespace flagprim
