#include "flagprim/cones.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "flagprim/linalg.hpp"

namespace flagprim {

namespace {

struct Tableau {
  QMat t;                 // rows: constraints, last column rhs
  std::vector<int> basis;
  int ncols = 0;          // variable columns

  Rational& rhs(int i) { return t[i][ncols]; }

  void pivot(int r, int c) {
    Rational p = t[r][c];
    for (auto& x : t[r]) x /= p;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (static_cast<int>(i) == r || t[i][c] == 0) continue;
      Rational f = t[i][c];
      for (int j = 0; j <= ncols; ++j)
        if (t[r][j] != 0) t[i][j] -= f * t[r][j];
    }
    basis[r] = c;
  }

  // Bland's rule; allowed marks usable columns
  LPSolution::Status optimize(const QVec& obj, const std::vector<char>& allowed) {
    const int m = static_cast<int>(t.size());
    while (true) {
      int enter = -1;
      for (int j = 0; j < ncols && enter < 0; ++j) {
        if (!allowed[j]) continue;
        bool basic = false;
        for (int b : basis) if (b == j) { basic = true; break; }
        if (basic) continue;
        Rational rc = obj[j];
        for (int i = 0; i < m; ++i)
          if (t[i][j] != 0) rc -= obj[basis[i]] * t[i][j];
        if (rc > 0) enter = j;
      }
      if (enter < 0) return LPSolution::Status::Optimal;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (t[i][enter] <= 0) continue;
        Rational ratio = t[i][ncols] / t[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return LPSolution::Status::Unbounded;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LPSolution solve_lp(const LinearProgram& lp, int n) {
  const int meq = static_cast<int>(lp.a_eq.size());
  const int mle = static_cast<int>(lp.a_le.size());
  const int m = meq + mle;
  const int nslack = mle;
  const int nart = m;
  Tableau tab;
  tab.ncols = n + nslack + nart;
  tab.t.assign(m, QVec(tab.ncols + 1, 0));
  tab.basis.assign(m, 0);
  for (int i = 0; i < m; ++i) {
    const QVec& row = i < meq ? lp.a_eq[i] : lp.a_le[i - meq];
    Rational b = i < meq ? lp.b_eq[i] : lp.b_le[i - meq];
    QVec& tr = tab.t[i];
    for (int j = 0; j < n; ++j) tr[j] = row[j];
    if (i >= meq) tr[n + (i - meq)] = 1;
    tr[tab.ncols] = b;
    if (b < 0)
      for (auto& x : tr) x = -x;
    tr[n + nslack + i] = 1;
    tab.basis[i] = n + nslack + i;
  }
  // phase one
  QVec obj1(tab.ncols, 0);
  for (int i = 0; i < nart; ++i) obj1[n + nslack + i] = -1;
  std::vector<char> all(tab.ncols, 1);
  tab.optimize(obj1, all);
  Rational art = 0;
  for (int i = 0; i < m; ++i)
    if (tab.basis[i] >= n + nslack) art += tab.t[i][tab.ncols];
  LPSolution sol;
  if (art != 0) {
    sol.status = LPSolution::Status::Infeasible;
    return sol;
  }
  // drive artificials out of the basis
  for (int i = 0; i < static_cast<int>(tab.t.size()); ++i) {
    if (tab.basis[i] < n + nslack) continue;
    int col = -1;
    for (int j = 0; j < n + nslack; ++j)
      if (tab.t[i][j] != 0) { col = j; break; }
    if (col >= 0) {
      tab.pivot(i, col);
    } else {
      tab.t.erase(tab.t.begin() + i);
      tab.basis.erase(tab.basis.begin() + i);
      --i;
    }
  }
  std::vector<char> allowed(tab.ncols, 0);
  for (int j = 0; j < n + nslack; ++j) allowed[j] = 1;
  QVec obj2(tab.ncols, 0);
  for (int j = 0; j < n; ++j) obj2[j] = lp.c.empty() ? Rational(0) : lp.c[j];
  sol.status = tab.optimize(obj2, allowed);
  sol.x.assign(n, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i)
    if (tab.basis[i] < n) sol.x[tab.basis[i]] = tab.t[i][tab.ncols];
  sol.value = 0;
  for (int j = 0; j < n; ++j)
    if (!lp.c.empty()) sol.value += lp.c[j] * sol.x[j];
  return sol;
}

SystemResult solve_system(int nvars, const std::vector<Constraint>& cons, const std::vector<bool>& nonneg) {
  // columns: split free variables into +/- parts, then the slack t
  std::vector<int> pos(nvars), neg(nvars, -1);
  int n = 0;
  for (int i = 0; i < nvars; ++i) {
    pos[i] = n++;
    if (nonneg.empty() || !nonneg[i]) neg[i] = n++;
  }
  bool strict = std::any_of(cons.begin(), cons.end(), [](const Constraint& c) { return c.kind == Constraint::Kind::Gt; });
  const int tcol = strict ? n++ : -1;
  LinearProgram lp;
  auto expand = [&](const QVec& a) {
    QVec row(n, 0);
    for (int i = 0; i < nvars; ++i) {
      row[pos[i]] = a[i];
      if (neg[i] >= 0) row[neg[i]] = -a[i];
    }
    return row;
  };
  for (const auto& c : cons) {
    QVec row = expand(c.a);
    switch (c.kind) {
      case Constraint::Kind::Eq:
        lp.a_eq.push_back(row);
        lp.b_eq.push_back(c.b);
        break;
      case Constraint::Kind::Ge:
        for (auto& x : row) x = -x;
        lp.a_le.push_back(row);
        lp.b_le.push_back(-c.b);
        break;
      case Constraint::Kind::Gt:
        // a.y - t >= b
        for (auto& x : row) x = -x;
        row[tcol] = 1;
        lp.a_le.push_back(row);
        lp.b_le.push_back(-c.b);
        break;
    }
  }
  if (strict) {
    QVec row(n, 0);
    row[tcol] = 1;
    lp.a_le.push_back(row);
    lp.b_le.push_back(1);
    lp.c.assign(n, 0);
    lp.c[tcol] = 1;
  }
  LPSolution s = solve_lp(lp, n);
  SystemResult res;
  if (s.status != LPSolution::Status::Optimal) return res;
  if (strict && s.value <= 0) return res;
  res.feasible = true;
  res.point.assign(nvars, 0);
  for (int i = 0; i < nvars; ++i) {
    res.point[i] = s.x[pos[i]];
    if (neg[i] >= 0) res.point[i] -= s.x[neg[i]];
  }
  return res;
}

RationalCone::RationalCone(std::vector<QVec> gens, int dim) : ambient(dim) {
  for (auto& g : gens) {
    if (static_cast<int>(g.size()) != dim) throw std::invalid_argument("cone: generator dimension mismatch");
    if (std::any_of(g.begin(), g.end(), [](const Rational& x) { return x != 0; })) generators.push_back(std::move(g));
  }
}

RationalCone RationalCone::from_weights(const std::vector<Weight>& gens, int dim) {
  std::vector<QVec> q;
  for (const auto& g : gens) q.push_back(to_qvec(g));
  return RationalCone(std::move(q), dim);
}

int RationalCone::dimension() const {
  return rank(generators);
}

namespace {

std::vector<Constraint> combination_rows(const std::vector<QVec>& gens, const QVec& x, bool strict) {
  const int n = static_cast<int>(gens.size());
  const int dim = static_cast<int>(x.size());
  std::vector<Constraint> cons;
  for (int k = 0; k < dim; ++k) {
    Constraint c;
    c.kind = Constraint::Kind::Eq;
    c.a.assign(n, 0);
    for (int i = 0; i < n; ++i) c.a[i] = gens[i][k];
    c.b = x[k];
    cons.push_back(std::move(c));
  }
  if (strict)
    for (int i = 0; i < n; ++i) {
      Constraint c;
      c.kind = Constraint::Kind::Gt;
      c.a.assign(n, 0);
      c.a[i] = 1;
      c.b = 0;
      cons.push_back(std::move(c));
    }
  return cons;
}

}  // namespace

bool cone_coefficients(const std::vector<QVec>& gens, const QVec& x, QVec& coeffs) {
  if (gens.empty()) {
    coeffs.clear();
    return std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
  }
  auto r = solve_system(static_cast<int>(gens.size()), combination_rows(gens, x, false),
                        std::vector<bool>(gens.size(), true));
  coeffs = r.point;
  return r.feasible;
}

bool cone_member(const RationalCone& C, const QVec& x, bool strict) {
  if (static_cast<int>(x.size()) != C.ambient) throw std::invalid_argument("cone_member: dimension mismatch");
  if (C.generators.empty())
    return !strict && std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
  const int n = static_cast<int>(C.generators.size());
  return solve_system(n, combination_rows(C.generators, x, strict), std::vector<bool>(n, true)).feasible;
}

namespace {

bool zero_conv(const std::vector<QVec>& pts, bool strict) {
  if (pts.empty()) throw std::invalid_argument("zero_in_conv: empty point list");
  const int n = static_cast<int>(pts.size());
  QVec zero(pts[0].size(), 0);
  auto cons = combination_rows(pts, zero, strict);
  Constraint sum;
  sum.kind = Constraint::Kind::Eq;
  sum.a.assign(n, 1);
  sum.b = 1;
  cons.push_back(sum);
  return solve_system(n, cons, std::vector<bool>(n, true)).feasible;
}

}  // namespace

bool zero_in_conv(const std::vector<QVec>& pts) {
  return zero_conv(pts, false);
}

bool zero_in_interior_conv(const std::vector<QVec>& pts) {
  return zero_conv(pts, true);
}

int affine_dimension(const std::vector<QVec>& pts) {
  if (pts.empty()) return -1;
  QMat diffs;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    QVec d(pts[i].size());
    for (std::size_t k = 0; k < d.size(); ++k) d[k] = pts[i][k] - pts[0][k];
    diffs.push_back(d);
  }
  return rank(diffs);
}

bool interiors_intersect(const RationalCone& a, const RationalCone& b) {
  if (a.ambient != b.ambient) throw std::invalid_argument("interiors_intersect: dimension mismatch");
  if (a.generators.empty() || b.generators.empty()) return false;
  const int na = static_cast<int>(a.generators.size());
  const int nb = static_cast<int>(b.generators.size());
  std::vector<QVec> gens = a.generators;
  for (const auto& g : b.generators) {
    QVec neg(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) neg[k] = -g[k];
    gens.push_back(neg);
  }
  QVec zero(a.ambient, 0);
  auto cons = combination_rows(gens, zero, true);
  return solve_system(na + nb, cons, std::vector<bool>(na + nb, true)).feasible;
}

bool ray_in_cone(const QVec& v, const std::vector<QVec>& others) {
  if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; })) return false;
  RationalCone c(others, static_cast<int>(v.size()));
  return cone_member(c, v, false);
}

bool fm_feasible(std::vector<FMRow> rows, int nvars) {
  auto zero_row = [](const FMRow& r) {
    return std::all_of(r.a.begin(), r.a.end(), [](const Rational& x) { return x == 0; });
  };
  auto holds = [](const FMRow& r) {
    if (r.eq) return r.b == 0;
    return r.strict ? 0 < r.b : 0 <= r.b;
  };
  auto normalize = [](FMRow& r) {
    Rational s = 0;
    for (const auto& x : r.a)
      if (x != 0) { s = abs(x); break; }
    if (s == 0) return;
    for (auto& x : r.a) x /= s;
    r.b /= s;
  };
  for (int k = nvars - 1; k >= 0; --k) {
    std::vector<FMRow> next;
    auto eq_it = std::find_if(rows.begin(), rows.end(), [k](const FMRow& r) { return r.eq && r.a[k] != 0; });
    if (eq_it != rows.end()) {
      // substitute the equation into every other row
      FMRow e = *eq_it;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (static_cast<std::ptrdiff_t>(i) == eq_it - rows.begin()) continue;
        FMRow r = rows[i];
        if (r.a[k] != 0) {
          Rational f = r.a[k] / e.a[k];
          for (std::size_t j = 0; j < r.a.size(); ++j) r.a[j] -= f * e.a[j];
          r.b -= f * e.b;
        }
        next.push_back(std::move(r));
      }
    } else {
      std::vector<FMRow> pos, neg;
      for (auto& r : rows) {
        if (r.a[k] > 0) pos.push_back(r);
        else if (r.a[k] < 0) neg.push_back(r);
        else next.push_back(r);
      }
      for (const auto& p : pos)
        for (const auto& q : neg) {
          FMRow c;
          Rational fp = 1 / p.a[k], fq = -1 / q.a[k];
          c.a.assign(p.a.size(), 0);
          for (std::size_t j = 0; j < p.a.size(); ++j) c.a[j] = p.a[j] * fp + q.a[j] * fq;
          c.a[k] = 0;
          c.b = p.b * fp + q.b * fq;
          c.strict = p.strict || q.strict;
          next.push_back(std::move(c));
        }
    }
    // drop constant rows after checking them, keep the tightest inequality per direction
    rows.clear();
    std::map<QVec, std::pair<Rational, bool>> best;
    for (auto& r : next) {
      if (zero_row(r)) {
        if (!holds(r)) return false;
        continue;
      }
      normalize(r);
      if (r.eq) {
        rows.push_back(std::move(r));
        continue;
      }
      auto it = best.find(r.a);
      if (it == best.end()) {
        best.emplace(r.a, std::make_pair(r.b, r.strict));
      } else if (r.b < it->second.first || (r.b == it->second.first && r.strict)) {
        it->second = {r.b, r.strict};
      }
    }
    for (auto& [a, bs] : best) rows.push_back({a, bs.first, bs.second, false});
  }
  return std::all_of(rows.begin(), rows.end(), holds);
}

bool cone_member_fm(const RationalCone& C, const QVec& x, bool strict) {
  if (C.generators.empty())
    return !strict && std::all_of(x.begin(), x.end(), [](const Rational& v) { return v == 0; });
  const int n = static_cast<int>(C.generators.size());
  std::vector<FMRow> rows;
  for (int k = 0; k < C.ambient; ++k) {
    FMRow e;
    e.eq = true;
    e.a.assign(n, 0);
    for (int i = 0; i < n; ++i) e.a[i] = C.generators[i][k];
    e.b = x[k];
    rows.push_back(e);
  }
  for (int i = 0; i < n; ++i) {
    FMRow r;
    r.a.assign(n, 0);
    r.a[i] = -1;
    r.b = 0;
    r.strict = strict;
    rows.push_back(r);
  }
  return fm_feasible(rows, n);
}

Chamber chamber_of(const RootSystem& R, const WeylElement& w) {
  Chamber c;
  c.owner = w;
  for (int k = 1; k <= R.rank(); ++k) {
    Weight e(R.rank(), 0);
    e[k - 1] = 1;
    c.generators.push_back(w.apply(e));
  }
  return c;
}

std::vector<int> dual_highest_root(const RootSystem& R) {
  std::vector<int> best;
  int best_h = -1;
  for (const auto& c : R.positive_roots()) {
    auto cv = R.coroot(c);
    int h = 0;
    for (int x : cv) h += x;
    if (h > best_h) best_h = h, best = cv;
  }
  return best;
}

std::vector<Chamber> suter_chambers(const RootSystem& R) {
  const int n = R.rank();
  // linear forms on weight space in fundamental coordinates
  QMat forms;
  for (int i = 0; i < n; ++i) {
    QVec l(n, 0);
    l[i] = 1;
    forms.push_back(l);
  }
  auto top = dual_highest_root(R);
  QVec last(n);
  for (int i = 0; i < n; ++i) last[i] = -top[i];
  forms.push_back(last);

  std::vector<std::vector<int>> coroots;
  for (const auto& c : R.positive_roots()) coroots.push_back(R.coroot(c));

  std::vector<Chamber> out;
  for (int i = 0; i <= n; ++i) {
    QMat basis;
    for (int j = 0; j <= n; ++j)
      if (j != i) basis.push_back(forms[j]);
    // columns of the inverse span Z_i
    QMat gens = inverse(basis);
    QVec x;
    for (int t = 2;; ++t) {
      x.assign(n, 0);
      Rational scale = 1;
      for (int j = 0; j < n; ++j) {
        for (int k = 0; k < n; ++k) x[k] += scale * gens[k][j];
        scale *= t;
      }
      bool regular = true;
      for (const auto& cv : coroots) {
        Rational s = 0;
        for (int k = 0; k < n; ++k) s += x[k] * cv[k];
        if (s == 0) { regular = false; break; }
      }
      if (regular) break;
      if (t > 1000) throw std::logic_error("suter_chambers: no regular point found");
    }
    std::vector<int> word;
    R.to_dominant(x, &word);
    out.push_back(chamber_of(R, R.element(word)));
  }
  return out;
}

}  // namespace flagprim
