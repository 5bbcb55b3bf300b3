#include "flagprim/sep.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

#include "flagprim/linalg.hpp"

namespace flagprim {

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount(const Bits& b) {
  int n = 0;
  for (auto w : b) n += __builtin_popcountll(w);
  return n;
}

int popcount_and(const Bits& a, const Bits& b) {
  int n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += __builtin_popcountll(a[i] & b[i]);
  return n;
}

bool test_bit(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1u; }
void set_bit(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }

Weight primitive_up_to_sign(Weight v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) return v;
  for (int& x : v) x /= g;
  auto it = std::find_if(v.begin(), v.end(), [](int x) { return x != 0; });
  if (*it < 0)
    for (int& x : v) x = -x;
  return v;
}

Weight primitive(Weight v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, std::abs(x));
  if (g == 0) return v;
  for (int& x : v) x /= g;
  return v;
}

long long det_int(std::vector<std::vector<long long>> m) {
  // Bareiss
  const int n = static_cast<int>(m.size());
  if (n == 0) return 1;
  long long sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m[k][k] == 0) {
      int p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[p], m[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

// kernel direction of r-1 vectors in Z^r via signed maximal minors
Weight kernel_cofactor(const std::vector<const Weight*>& rows, int r) {
  Weight out(r, 0);
  for (int c = 0; c < r; ++c) {
    std::vector<std::vector<long long>> m;
    for (auto* row : rows) {
      std::vector<long long> line;
      for (int j = 0; j < r; ++j)
        if (j != c) line.push_back((*row)[j]);
      m.push_back(std::move(line));
    }
    long long d = det_int(std::move(m));
    out[c] = static_cast<int>((c % 2 == 0) ? d : -d);
  }
  return out;
}

std::vector<WeylElement> ordered_group(const RootSystem& R) {
  std::vector<WeylElement> g = R.weyl_group();
  std::stable_sort(g.begin(), g.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    return a.word < b.word;
  });
  return g;
}

bool covers_int(const Chamber& c, const Weight& l) {
  for (const auto& g : c.generators) {
    long long s = 0;
    for (std::size_t i = 0; i < l.size(); ++i) s += static_cast<long long>(l[i]) * g[i];
    if (s <= 0) return false;
  }
  return true;
}

using Clock = std::chrono::steady_clock;

struct CoverSearch {
  int nel = 0;
  std::vector<Bits> sets;
  std::vector<std::vector<int>> holders;  // sets containing each element
  Clock::time_point deadline;
  std::atomic<bool>* timed_out = nullptr;

  int lower_bound(const Bits& unc) const {
    int u = popcount(unc);
    if (u == 0) return 0;
    int best = 0;
    for (const auto& s : sets) best = std::max(best, popcount_and(s, unc));
    if (best == 0) return 1 << 20;
    return (u + best - 1) / best;
  }

  int pick(const Bits& unc) const {
    int arg = -1;
    std::size_t fewest = SIZE_MAX;
    for (int e = 0; e < nel; ++e)
      if (test_bit(unc, e) && holders[e].size() < fewest) {
        fewest = holders[e].size();
        arg = e;
      }
    return arg;
  }

  // depth-first, first cover of size <= target in canonical order
  bool dfs(std::vector<int>& chosen, const Bits& unc, int target, long long& nodes) const {
    if (timed_out->load(std::memory_order_relaxed)) return false;
    if ((++nodes & 1023) == 0 && Clock::now() > deadline) {
      timed_out->store(true);
      return false;
    }
    if (popcount(unc) == 0) return true;
    int room = target - static_cast<int>(chosen.size());
    if (room <= 0 || lower_bound(unc) > room) return false;
    int e = pick(unc);
    for (int s : holders[e]) {
      if (std::find(chosen.begin(), chosen.end(), s) != chosen.end()) continue;
      Bits next = unc;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] &= ~sets[s][i];
      chosen.push_back(s);
      if (dfs(chosen, next, target, nodes)) return true;
      chosen.pop_back();
    }
    return false;
  }

  // identity (set 0) is forced; the first branching level is spread over workers
  // and the lowest successful branch wins, so the answer does not depend on workers
  std::optional<std::vector<int>> find(int target, int workers) const {
    Bits unc(sets[0].size(), 0);
    for (int e = 0; e < nel; ++e) set_bit(unc, e);
    for (std::size_t i = 0; i < unc.size(); ++i) unc[i] &= ~sets[0][i];
    if (popcount(unc) == 0) return std::vector<int>{0};
    if (target <= 1) return std::nullopt;
    int e = pick(unc);
    const auto& branch = holders[e];
    std::vector<std::optional<std::vector<int>>> found(branch.size());
    auto run = [&](std::size_t b) {
      std::vector<int> chosen{0};
      if (branch[b] == 0) return;
      Bits next = unc;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] &= ~sets[branch[b]][i];
      chosen.push_back(branch[b]);
      long long nodes = 0;
      if (dfs(chosen, next, target, nodes)) found[b] = chosen;
    };
    workers = std::max(1, workers);
    if (workers == 1) {
      for (std::size_t b = 0; b < branch.size(); ++b) {
        run(b);
        if (found[b]) break;
      }
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
          for (std::size_t b; (b = next.fetch_add(1)) < branch.size();) run(b);
        });
      for (auto& t : pool) t.join();
    }
    for (auto& f : found)
      if (f) return f;
    return std::nullopt;
  }
};

std::mutex g_cell_mu;
std::map<std::string, std::vector<CellWitness>> g_cells;
std::mutex g_sep_mu;
std::map<std::string, int> g_sep;

QVec point_of(const Weight& w) { return to_qvec(w); }

}  // namespace

std::vector<Weight> arrangement_normals(const RootSystem& R) {
  std::set<Weight> seen;
  std::vector<Weight> out;
  for (int k = 1; k <= R.rank(); ++k) {
    Weight e(R.rank(), 0);
    e[k - 1] = 1;
    for (const auto& v : weyl_orbit(R, e)) {
      Weight p = primitive_up_to_sign(v);
      if (seen.insert(p).second) out.push_back(p);
    }
  }
  return out;
}

std::vector<Weight> arrangement_rays(const RootSystem& R) {
  const int r = R.rank();
  auto normals = arrangement_normals(R);
  std::set<Weight> rays;
  if (r == 1) return {Weight{1}, Weight{-1}};
  std::vector<int> idx(r - 1);
  std::iota(idx.begin(), idx.end(), 0);
  const int n = static_cast<int>(normals.size());
  while (true) {
    std::vector<const Weight*> rows;
    for (int i : idx) rows.push_back(&normals[i]);
    Weight k = kernel_cofactor(rows, r);
    if (!is_zero(k)) {
      Weight p = primitive(k);
      rays.insert(p);
      for (int& x : p) x = -x;
      rays.insert(p);
    }
    int i = r - 2;
    while (i >= 0 && idx[i] == n - (r - 1) + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r - 1; ++j) idx[j] = idx[j - 1] + 1;
  }
  return {rays.begin(), rays.end()};
}

std::vector<CellWitness> arrangement_cells(const RootSystem& R) {
  {
    std::lock_guard<std::mutex> lk(g_cell_mu);
    auto it = g_cells.find(R.type().name());
    if (it != g_cells.end()) return it->second;
  }
  const int r = R.rank();
  auto normals = arrangement_normals(R);
  struct Partial {
    std::string signs;
    QVec point;
  };
  std::vector<Partial> cells{{"", QVec(r, Rational(0))}};
  for (std::size_t h = 0; h < normals.size(); ++h) {
    QVec v = to_qvec(normals[h]);
    std::vector<Partial> next;
    for (const auto& c : cells) {
      Rational at = dot(v, c.point);
      for (char s : {'+', '0', '-'}) {
        std::string sg = c.signs + s;
        if ((s == '+' && at > 0) || (s == '-' && at < 0) || (s == '0' && at == 0)) {
          next.push_back({sg, c.point});
          continue;
        }
        std::vector<Constraint> cons;
        for (std::size_t j = 0; j <= h; ++j) {
          Constraint k;
          k.a = to_qvec(normals[j]);
          k.b = 0;
          if (sg[j] == '0') {
            k.kind = Constraint::Kind::Eq;
          } else {
            k.kind = Constraint::Kind::Gt;
            if (sg[j] == '-')
              for (auto& x : k.a) x = -x;
          }
          cons.push_back(std::move(k));
        }
        auto res = solve_system(r, cons);
        if (res.feasible) next.push_back({sg, res.point});
      }
    }
    cells = std::move(next);
  }
  std::vector<CellWitness> out;
  for (auto& c : cells) {
    if (std::all_of(c.signs.begin(), c.signs.end(), [](char s) { return s == '0'; })) continue;
    out.push_back({c.signs, c.point, -1});
  }
  std::lock_guard<std::mutex> lk(g_cell_mu);
  g_cells.emplace(R.type().name(), out);
  return out;
}

bool chamber_covers(const Chamber& c, const QVec& l) {
  for (const auto& g : c.generators)
    if (dot(l, to_qvec(g)) <= 0) return false;
  return true;
}

bool verify_separating(const RootSystem& R, const std::vector<WeylElement>& chambers) {
  if (chambers.empty()) return false;
  std::vector<Chamber> cs;
  for (const auto& w : chambers) cs.push_back(chamber_of(R, w));
  auto covered = [&](const QVec& l) {
    return std::any_of(cs.begin(), cs.end(), [&](const Chamber& c) { return chamber_covers(c, l); });
  };
  if (R.rank() <= 3) {
    for (const auto& cell : arrangement_cells(R))
      if (!covered(cell.point)) return false;
    return true;
  }
  // every cell has a ray in its closure, and open cones covering that ray cover the cell
  for (const auto& ray : arrangement_rays(R))
    if (!covered(point_of(ray))) return false;
  return true;
}

SepResult sep_index(const RootSystem& R, const SepOptions& opt) {
  const auto deadline = Clock::now() + opt.budget;
  const auto group = ordered_group(R);
  std::vector<Chamber> chambers;
  for (const auto& w : group) chambers.push_back(chamber_of(R, w));
  const auto rays = arrangement_rays(R);

  CoverSearch cs;
  cs.nel = static_cast<int>(rays.size());
  const std::size_t words = (rays.size() + 63) / 64;
  cs.sets.assign(chambers.size(), Bits(words, 0));
  cs.holders.assign(rays.size(), {});
  for (std::size_t c = 0; c < chambers.size(); ++c)
    for (std::size_t e = 0; e < rays.size(); ++e)
      if (covers_int(chambers[c], rays[e])) {
        set_bit(cs.sets[c], static_cast<int>(e));
        cs.holders[e].push_back(static_cast<int>(c));
      }
  for (std::size_t e = 0; e < rays.size(); ++e)
    if (cs.holders[e].empty()) throw std::logic_error("sep: ray covered by no chamber");

  // greedy upper bound, starting from the identity
  std::vector<int> greedy{0};
  {
    Bits unc(words, 0);
    for (int e = 0; e < cs.nel; ++e) set_bit(unc, e);
    for (std::size_t i = 0; i < words; ++i) unc[i] &= ~cs.sets[0][i];
    while (popcount(unc) > 0) {
      int best = -1, gain = 0;
      for (std::size_t c = 0; c < cs.sets.size(); ++c) {
        int g = popcount_and(cs.sets[c], unc);
        if (g > gain) gain = g, best = static_cast<int>(c);
      }
      greedy.push_back(best);
      for (std::size_t i = 0; i < words; ++i) unc[i] &= ~cs.sets[best][i];
    }
  }

  SepResult res;
  int maxcov = 0;
  for (const auto& s : cs.sets) maxcov = std::max(maxcov, popcount(s));
  res.lower = std::max(R.rank() + 1, (cs.nel + maxcov - 1) / maxcov);
  res.upper = static_cast<int>(greedy.size());
  std::vector<int> best = greedy;

  std::atomic<bool> timed_out{false};
  cs.deadline = deadline;
  cs.timed_out = &timed_out;
  for (int t = res.lower; t <= res.upper; ++t) {
    auto f = cs.find(t, opt.workers);
    if (timed_out) break;
    if (f) {
      best = *f;
      res.upper = t;
      break;
    }
    res.lower = t + 1;
  }
  res.exact = !timed_out && res.lower >= res.upper;
  if (res.exact) {
    res.lower = res.upper;
    res.value = res.upper;
  }
  std::sort(best.begin(), best.end());
  for (int c : best) res.certificate.chambers.push_back(group[c]);

  if (opt.enumerate_cells && R.rank() <= 3) {
    auto cells = arrangement_cells(R);
    std::vector<Chamber> picked;
    for (int c : best) picked.push_back(chambers[c]);
    for (auto& cell : cells)
      for (std::size_t i = 0; i < picked.size(); ++i)
        if (chamber_covers(picked[i], cell.point)) {
          cell.chamber = static_cast<int>(i);
          break;
        }
    res.proof_cells = static_cast<int>(cells.size());
    res.certificate.cells = std::move(cells);
  } else {
    res.proof_cells = cs.nel;
    for (const auto& ray : rays) {
      CellWitness w{"", point_of(ray), -1};
      for (std::size_t i = 0; i < best.size(); ++i)
        if (covers_int(chambers[best[i]], ray)) {
          w.chamber = static_cast<int>(i);
          break;
        }
      res.certificate.cells.push_back(std::move(w));
    }
  }
  return res;
}

int sep_known(const RootSystem& R) {
  if (R.rank() > 3) return -1;
  const std::string key = R.type().name();
  {
    std::lock_guard<std::mutex> lk(g_sep_mu);
    auto it = g_sep.find(key);
    if (it != g_sep.end()) return it->second;
  }
  SepOptions o;
  o.enumerate_cells = false;
  auto r = sep_index(R, o);
  int v = r.exact ? r.value : -1;
  std::lock_guard<std::mutex> lk(g_sep_mu);
  g_sep[key] = v;
  return v;
}

bool dihedral_covers(int p, const std::vector<int>& arcs) {
  // doubled units pi/(4p): every half-integer and integer point of the arc grid
  const long long full = 8LL * p, len = 4LL * p - 4;
  for (long long x = 0; x < full; ++x) {
    bool hit = false;
    for (int k : arcs) {
      long long lo = 2LL * (2LL * k + 2 - p);
      long long d = ((x - lo) % full + full) % full;
      if (d > 0 && d < len) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

DihedralResult sep_index_dihedral(int p) {
  if (p < 3) throw std::invalid_argument("dihedral order p must be at least 3");
  // arcs are congruent and equally spaced, so fixing arc 0 and always taking the
  // furthest arc that still overlaps is optimal
  DihedralResult out;
  const long long s0 = 2 - p, len = 2LL * p - 2, goal = s0 + 4LL * p;
  out.arcs.push_back(0);
  long long reach = s0 + len;
  while (reach <= goal) {
    long long s = reach - 2;
    out.arcs.push_back(static_cast<int>(((s - s0) / 2) % (2 * p)));
    reach = s + len;
  }
  std::sort(out.arcs.begin(), out.arcs.end());
  out.arcs.erase(std::unique(out.arcs.begin(), out.arcs.end()), out.arcs.end());
  out.value = static_cast<int>(out.arcs.size());
  return out;
}

int sep_index_dihedral_bruteforce(int p) {
  if (p < 3 || p > 16) throw std::invalid_argument("bruteforce dihedral limited to 3 <= p <= 16");
  const int n = 2 * p;
  for (int m = 1; m <= n; ++m) {
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
      if (dihedral_covers(p, idx)) return m;
      int i = m - 1;
      while (i >= 0 && idx[i] == n - m + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return n;
}

}  // namespace flagprim
