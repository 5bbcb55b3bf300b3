#include "flagprim/primcheck.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

#include "flagprim/chars.hpp"
#include "flagprim/cones.hpp"
#include "flagprim/flagorbit.hpp"
#include "flagprim/linalg.hpp"
#include "flagprim/quiver.hpp"
#include "flagprim/sep.hpp"
#include "flagprim/tables.hpp"

namespace flagprim {

std::string to_string(Status s) {
  switch (s) {
    case Status::Yes: return "yes";
    case Status::No: return "no";
    case Status::Unknown: return "unknown";
  }
  return "?";
}

std::string to_string(CertKind k) {
  switch (k) {
    case CertKind::None: return "none";
    case CertKind::Formula: return "formula";
    case CertKind::Bound: return "bound";
    case CertKind::TableRule: return "table-rule";
    case CertKind::Quiver: return "quiver";
    case CertKind::OpenOrbit: return "open-orbit";
    case CertKind::Witness: return "witness";
    case CertKind::ConeViolation: return "cone-violation";
    case CertKind::Cone: return "cone";
  }
  return "?";
}

bool fundamental_multiples(const std::vector<Weight>& weights) {
  return std::all_of(weights.begin(), weights.end(), [](const Weight& w) { return support(w).size() == 1; });
}

namespace {

using Clock = std::chrono::steady_clock;

void validate(const RootSystem& R, const std::vector<Weight>& weights, const char* who) {
  if (weights.empty()) throw std::invalid_argument(std::string(who) + ": empty tuple");
  for (const auto& w : weights) {
    if (static_cast<int>(w.size()) != R.rank()) throw std::invalid_argument(std::string(who) + ": weight length mismatch");
    if (!is_dominant(w)) throw std::invalid_argument(std::string(who) + ": weights must be dominant");
    if (is_zero(w)) throw std::invalid_argument(std::string(who) + ": weights must be nonzero");
  }
}

Weight fundamental(int r, int node) {
  Weight w(r, 0);
  w[node - 1] = 1;
  return w;
}

std::vector<Weight> to_fundamentals(const std::vector<Weight>& weights) {
  std::vector<Weight> out;
  for (const auto& w : weights) out.push_back(fundamental(static_cast<int>(w.size()), support(w)[0]));
  return out;
}

std::vector<Weight> gcd_normalized(const std::vector<Weight>& weights) {
  std::vector<Weight> out;
  for (auto w : weights) {
    int g = 0;
    for (int x : w) g = std::gcd(g, x);
    for (auto& x : w) x /= g;
    out.push_back(std::move(w));
  }
  return out;
}

Weight scaled_sum(const std::vector<Weight>& weights, const std::vector<int>& n) {
  Weight s(weights[0].size(), 0);
  for (std::size_t i = 0; i < weights.size(); ++i)
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += n[i] * weights[i][k];
  return s;
}

bool in_root_lattice(const RootSystem& R, const Weight& w) {
  for (const auto& q : R.weight_to_roots(to_qvec(w)))
    if (q.get_den() != 1) return false;
  return true;
}

std::vector<Weight> scaled(const std::vector<Weight>& weights, const std::vector<int>& n) {
  std::vector<Weight> out;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    Weight w = weights[i];
    for (auto& x : w) x *= n[i];
    out.push_back(std::move(w));
  }
  return out;
}

struct Search {
  bool found = false;
  bool complete = true;
  std::vector<int> n;
  long long value = 0;
};

// smallest total first, then lexicographic; stops at the first n with multiplicity >= threshold
Search witness_search(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu, long long threshold,
                      int bound, Clock::time_point deadline) {
  const int d = static_cast<int>(weights.size());
  const bool zero_target = is_zero(mu);
  // fewer nonzero factors cannot reach the threshold
  int min_nonzero = zero_target ? (threshold >= 2 ? 3 : 2) : (threshold >= 2 ? 2 : 1);
  Search out;
  std::vector<int> n(d, 0);
  std::function<bool(int, int)> rec = [&](int pos, int left) -> bool {
    if (pos == d - 1) {
      n[pos] = left;
      int nz = static_cast<int>(std::count_if(n.begin(), n.end(), [](int x) { return x > 0; }));
      if (nz < min_nonzero) return false;
      Weight s = scaled_sum(weights, n);
      for (std::size_t k = 0; k < s.size(); ++k) s[k] -= mu[k];
      if (!in_root_lattice(R, s)) return false;
      if (!dominance_leq(R, mu, scaled_sum(weights, n))) return false;
      if (Clock::now() > deadline) {
        out.complete = false;
        return true;
      }
      long long c = lr_coefficient(R, scaled(weights, n), mu);
      if (c >= threshold) {
        out.found = true;
        out.n = n;
        out.value = c;
        return true;
      }
      return false;
    }
    for (int v = 0; v <= left; ++v) {
      n[pos] = v;
      if (rec(pos + 1, left - v)) return true;
    }
    n[pos] = 0;
    return false;
  };
  for (int total = 1; total <= bound; ++total)
    if (rec(0, total)) break;
  return out;
}

Certificate witness_certificate(const std::vector<Weight>& weights, const Weight& mu, const Search& s,
                                const std::string& rule) {
  Certificate c;
  c.kind = CertKind::Witness;
  c.rule = rule;
  c.weights = weights;
  c.witness = s.n;
  c.target = mu;
  c.value = s.value;
  return c;
}

Weight permute_weight(const Weight& w, const std::vector<int>& p) {
  Weight out(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) out[p[i]] = w[i];
  return out;
}

// least image under reordering and diagram automorphisms
std::vector<Weight> canonical_tuple(const RootSystem& R, const std::vector<Weight>& weights) {
  std::vector<Weight> best;
  for (const auto& p : diagram_automorphisms(R.type())) {
    std::vector<Weight> img;
    for (const auto& w : weights) img.push_back(permute_weight(w, p));
    std::sort(img.begin(), img.end());
    if (best.empty() || img < best) best = std::move(img);
  }
  return best;
}

std::vector<Support> supports_of(const std::vector<Weight>& weights) {
  std::vector<Support> s;
  for (const auto& w : weights) s.push_back(support(w));
  return s;
}

int codim_sum(const RootSystem& R, const std::vector<Weight>& weights) {
  int s = 0;
  for (const auto& w : weights) s += parabolic_codim(R, support(w));
  return s;
}

Verdict decided(Status st, Certificate c) {
  Verdict v;
  v.status = st;
  v.certificate = std::move(c);
  return v;
}

// a witness found behind a rule-based No becomes the primary certificate
Verdict no_with_witness(const RootSystem& R, const std::vector<Weight>& weights, Certificate rule_cert,
                        const CheckOptions& opt) {
  Verdict v = decided(Status::No, std::move(rule_cert));
  if (!opt.attach_witness) return v;
  const bool norm = fundamental_multiples(weights);
  const auto base = norm ? to_fundamentals(weights) : weights;
  auto s = witness_search(R, base, Weight(R.rank(), 0), 2, opt.search_bound, Clock::now() + opt.budget);
  if (s.found) {
    v.extra.push_back(v.certificate);
    v.certificate = witness_certificate(base, Weight(R.rank(), 0), s, norm ? "normalized" : "direct");
  }
  return v;
}

std::vector<QVec> qvecs(const std::vector<Weight>& ws) {
  std::vector<QVec> out;
  for (const auto& w : ws) out.push_back(to_qvec(w));
  return out;
}

bool same_tuple_orbit(const RootSystem& R, const std::vector<Weight>& a, const std::vector<Weight>& b) {
  return a.size() == b.size() && canonical_tuple(R, a) == canonical_tuple(R, b);
}

}  // namespace

WitnessSearch search_witness(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu,
                             long long threshold, int bound, std::chrono::milliseconds budget) {
  validate(R, weights, "search_witness");
  if (static_cast<int>(mu.size()) != R.rank() || !is_dominant(mu))
    throw std::invalid_argument("search_witness: mu must be a dominant weight of the right length");
  if (threshold < 1) throw std::invalid_argument("search_witness: threshold must be positive");
  auto s = witness_search(R, weights, mu, threshold, bound, Clock::now() + budget);
  WitnessSearch out;
  out.found = s.found;
  out.complete = s.complete;
  if (s.found) out.certificate = witness_certificate(weights, mu, s, "direct");
  return out;
}

Verdict check_primitive(const RootSystem& R, const std::vector<Weight>& weights, const CheckOptions& opt) {
  validate(R, weights, "check_primitive");
  const int d = static_cast<int>(weights.size());
  const int r = R.rank();
  const bool seven = fundamental_multiples(weights);

  if (d <= 2) {
    Certificate c;
    c.kind = CertKind::Formula;
    c.rule = "at-most-two-factors";
    return decided(Status::Yes, c);
  }

  if (d >= r + 3) {
    int s = sep_known(R);
    if (s > 0 && d >= s + 2) {
      Certificate c;
      c.kind = CertKind::Bound;
      c.rule = "sep";
      c.value = s;
      return no_with_witness(R, weights, c, opt);
    }
  }
  const long long w_order = static_cast<long long>(R.weyl_order());
  if (d >= w_order + 2) {
    Certificate c;
    c.kind = CertKind::Bound;
    c.rule = "weyl";
    c.value = w_order;
    return no_with_witness(R, weights, c, opt);
  }

  if (opt.use_tables && seven) {
    const int node = support(weights[0])[0];
    bool equal = std::all_of(weights.begin(), weights.end(), [&](const Weight& w) { return support(w)[0] == node; });
    if (equal) {
      auto rule = equal_index_rule(R.type(), node, d);
      Certificate c;
      c.kind = CertKind::TableRule;
      c.rule = rule.rule;
      if (rule.primitive) return decided(Status::Yes, c);
      return no_with_witness(R, weights, c, opt);
    }
  }

  if (seven && R.type().family == Family::A) {
    std::vector<int> idx;
    for (const auto& w : weights) idx.push_back(support(w)[0]);
    Certificate c;
    c.kind = CertKind::Quiver;
    c.rule = "sl-fundamental";
    c.witness = idx;
    if (is_primitive_sln_fund(r + 1, idx)) return decided(Status::Yes, c);
    return no_with_witness(R, weights, c, opt);
  }

  if (opt.use_tables && d == 3) {
    auto s = supports_of(weights);
    if (auto row = triple_rule(R.type(), {s[0], s[1], s[2]})) {
      Certificate c;
      c.kind = CertKind::TableRule;
      c.rule = *row;
      return decided(Status::Yes, c);
    }
  }

  const int cs = codim_sum(R, weights);
  if (seven && cs > R.dim_g()) {
    Certificate c;
    c.kind = CertKind::Bound;
    c.rule = "flag-dimension";
    c.value = cs;
    return no_with_witness(R, weights, c, opt);
  }

  if (opt.use_flags && R.type().classical()) {
    auto canon = canonical_tuple(R, weights);
    auto fr = open_orbit_flags(R, supports_of(canon), opt.samples, opt.seed);
    if (fr.status == OrbitStatus::Open) {
      Certificate c;
      c.kind = CertKind::OpenOrbit;
      c.rule = "flags";
      c.weights = canon;
      c.seed = fr.witness_seed;
      c.value = fr.expected;
      return decided(Status::Yes, c);
    }
  }

  const auto base = seven ? to_fundamentals(weights) : weights;
  auto s = witness_search(R, base, Weight(r, 0), 2, opt.search_bound, Clock::now() + opt.budget);
  if (s.found) return decided(Status::No, witness_certificate(base, Weight(r, 0), s, seven ? "normalized" : "direct"));
  Verdict v;
  v.certificate.detail = s.complete ? "no witness up to the search bound" : "search budget exhausted";
  return v;
}

Verdict check_primitive_at(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu,
                           const CheckOptions& opt) {
  validate(R, weights, "check_primitive_at");
  if (static_cast<int>(mu.size()) != R.rank() || !is_dominant(mu))
    throw std::invalid_argument("check_primitive_at: mu must be a dominant weight of the right length");
  if (is_zero(mu)) return check_primitive(R, weights, opt);
  if (weights.size() == 1) {
    Certificate c;
    c.kind = CertKind::Formula;
    c.rule = "single-factor";
    return decided(Status::Yes, c);
  }
  auto ext = weights;
  ext.push_back(dual_weight(R, mu));
  CheckOptions inner = opt;
  inner.attach_witness = false;
  auto v = check_primitive(R, ext, inner);
  if (v.status == Status::Yes) {
    v.certificate.detail = "extended tuple with the dual of mu is primitive";
    if (v.certificate.weights.empty()) v.certificate.weights = ext;
    return v;
  }
  auto s = witness_search(R, weights, mu, 2, opt.search_bound, Clock::now() + opt.budget);
  if (s.found) return decided(Status::No, witness_certificate(weights, mu, s, "direct"));
  Verdict u;
  u.certificate.detail = s.complete ? "no witness up to the search bound" : "search budget exhausted";
  return u;
}

Verdict check_invariant_free(const RootSystem& R, const std::vector<Weight>& weights, const CheckOptions& opt) {
  validate(R, weights, "check_invariant_free");
  const int d = static_cast<int>(weights.size());
  const int r = R.rank();
  if (d == 1) {
    Certificate c;
    c.kind = CertKind::Formula;
    c.rule = "single-factor";
    return decided(Status::Yes, c);
  }
  if (d > r) {
    Certificate c;
    c.kind = CertKind::Bound;
    c.rule = "length-exceeds-rank";
    c.value = r;
    return decided(Status::No, c);
  }
  for (int i = 0; i < d; ++i) {
    std::vector<QVec> others;
    for (int j = 0; j < d; ++j)
      if (j != i) others.push_back(to_qvec(weights[j]));
    QVec target = to_qvec(dual_weight(R, weights[i]));
    QVec coeffs;
    if (cone_coefficients(others, target, coeffs)) {
      Certificate c;
      c.kind = CertKind::ConeViolation;
      c.rule = "dual-ray-in-cone";
      c.index = i;
      c.coefficients = coeffs;
      return decided(Status::No, c);
    }
  }
  if (d == 2) {
    Certificate c;
    c.kind = CertKind::Formula;
    c.rule = "two-factor-lines";
    return decided(Status::Yes, c);
  }
  const auto base = gcd_normalized(weights);
  auto s = witness_search(R, base, Weight(r, 0), 1, opt.search_bound, Clock::now() + opt.budget);
  if (s.found) return decided(Status::No, witness_certificate(base, Weight(r, 0), s, "gcd-normalized"));
  Verdict v;
  v.certificate.detail = "cone screens passed; no invariant up to the search bound";
  return v;
}

namespace {

std::vector<Weight> weights_up_to(int r, int h) {
  std::vector<Weight> out;
  Weight w(r, 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == r) {
      out.push_back(w);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      w[pos] = v;
      rec(pos + 1, left - v);
    }
    w[pos] = 0;
  };
  rec(0, h);
  return out;
}

QVec primitive_direction(const std::vector<Weight>& tuple) {
  int g = 0;
  for (const auto& w : tuple)
    for (int x : w) g = std::gcd(g, x);
  QVec v;
  for (const auto& w : tuple)
    for (int x : w) v.push_back(Rational(x / g));
  return v;
}

RationalCone factor_cone(const std::vector<Weight>& weights) {
  const int d = static_cast<int>(weights.size());
  const int r = static_cast<int>(weights[0].size());
  std::vector<QVec> gens;
  for (int i = 0; i < d; ++i) {
    QVec g(d * r, 0);
    for (int k = 0; k < r; ++k) g[i * r + k] = weights[i][k];
    gens.push_back(std::move(g));
  }
  return RationalCone(gens, d * r);
}

// cone over LR-positive tuples of bounded height; empty when too many tuples
RationalCone gamma_inner_cone(const RootSystem& R, int d, const StableOptions& opt) {
  const int r = R.rank();
  if (d == 2) {
    std::vector<QVec> gens;
    for (int k = 1; k <= r; ++k) {
      Weight w = fundamental(r, k);
      Weight wd = dual_weight(R, w);
      QVec g(2 * r, 0);
      for (int j = 0; j < r; ++j) {
        g[j] = w[j];
        g[r + j] = wd[j];
      }
      gens.push_back(std::move(g));
    }
    return RationalCone(gens, 2 * r);
  }
  int h = opt.height;
  std::vector<Weight> pool;
  while (h >= 1) {
    pool = weights_up_to(r, h);
    double count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<double>(pool.size());
    if (count <= opt.max_tuples) break;
    --h;
  }
  if (h < 1) return RationalCone({}, d * r);
  std::set<QVec> dirs;
  std::vector<int> idx(d, 0);
  const int m = static_cast<int>(pool.size());
  while (true) {
    std::vector<Weight> tuple;
    bool nonzero = false;
    for (int i = 0; i < d; ++i) {
      tuple.push_back(pool[idx[i]]);
      nonzero = nonzero || !is_zero(pool[idx[i]]);
    }
    if (nonzero && gamma_member(R, tuple)) dirs.insert(primitive_direction(tuple));
    int k = d - 1;
    while (k >= 0 && ++idx[k] == m) idx[k--] = 0;
    if (k < 0) break;
  }
  return RationalCone({dirs.begin(), dirs.end()}, d * r);
}

bool dual_interior(const RootSystem& R, const std::vector<Weight>& weights, int i) {
  std::vector<QVec> others;
  for (std::size_t j = 0; j < weights.size(); ++j)
    if (static_cast<int>(j) != i) others.push_back(to_qvec(weights[j]));
  RationalCone C(others, R.rank());
  return C.full_dimensional() && cone_member(C, to_qvec(dual_weight(R, weights[i])), true);
}

bool partition_condition(const RootSystem& R, const std::vector<Weight>& weights, const std::vector<int>& part) {
  std::vector<QVec> a, b;
  std::vector<bool> in(weights.size(), false);
  for (int i : part) in[i] = true;
  for (std::size_t j = 0; j < weights.size(); ++j) {
    if (in[j]) a.push_back(to_qvec(weights[j]));
    else b.push_back(to_qvec(dual_weight(R, weights[j])));
  }
  if (a.empty() || b.empty()) return false;
  RationalCone A(a, R.rank()), B(b, R.rank());
  return A.full_dimensional() && B.full_dimensional() && interiors_intersect(A, B);
}

}  // namespace

Verdict check_stable(const RootSystem& R, const std::vector<Weight>& weights, const StableOptions& opt) {
  validate(R, weights, "check_stable");
  const int d = static_cast<int>(weights.size());
  if (opt.use_sep && R.rank() <= 3) {
    int s = sep_known(R);
    if (s > 0 && d >= s) {
      Certificate c;
      c.kind = CertKind::Bound;
      c.rule = "sep";
      c.value = s;
      return decided(Status::Yes, c);
    }
  }
  for (int i = 0; i < d; ++i)
    if (dual_interior(R, weights, i)) {
      Certificate c;
      c.kind = CertKind::Cone;
      c.rule = "dual-in-interior";
      c.index = i;
      return decided(Status::Yes, c);
    }
  if (d >= 2 && d <= 16)
    for (unsigned mask = 1; mask < (1u << d); mask += 2) {
      if (mask == (1u << d) - 1) continue;
      std::vector<int> part;
      for (int i = 0; i < d; ++i)
        if (mask & (1u << i)) part.push_back(i);
      if (partition_condition(R, weights, part)) {
        Certificate c;
        c.kind = CertKind::Cone;
        c.rule = "partition";
        c.part = part;
        return decided(Status::Yes, c);
      }
    }
  if (d >= 2) {
    auto K = gamma_inner_cone(R, d, opt);
    if ((d == 2 || K.full_dimensional()) && interiors_intersect(K, factor_cone(weights))) {
      Certificate c;
      c.kind = CertKind::Cone;
      c.rule = d == 2 ? "gamma-exact" : "gamma-inner";
      c.value = static_cast<long long>(K.generators.size());
      return decided(Status::Yes, c);
    }
  }
  Verdict v;
  v.certificate.detail = "no stability criterion applied";
  return v;
}

StableWitness stable_witness_point(const RootSystem& R, const std::vector<Weight>& weights) {
  validate(R, weights, "stable_witness_point");
  StableWitness out;
  SepOptions so;
  so.enumerate_cells = false;
  so.budget = std::chrono::milliseconds(20000);
  auto sr = sep_index(R, so);
  const auto& chambers = sr.certificate.chambers;
  if (chambers.empty() || chambers.size() > weights.size()) {
    out.reason = "not applicable: separating sequence longer than the tuple";
    return out;
  }
  out.applicable = true;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const auto& w = chambers[i < chambers.size() ? i : 0];
    out.elements.push_back(w);
    out.points.push_back(w.apply(weights[i]));
  }
  auto pts = qvecs(out.points);
  out.verified = affine_dimension(pts) == R.rank() && zero_in_interior_conv(pts);
  out.reason = out.verified ? "zero is interior to the convex hull" : "verification failed";
  return out;
}

PrimBounds prim_lower_bounds(const RootSystem& R) {
  PrimBounds b;
  const auto& t = R.type();
  switch (t.family) {
    case Family::A: b.lower = t.rank + 2; break;
    case Family::B:
    case Family::C:
    case Family::D: b.lower = 3; break;
    case Family::E: b.lower = t.rank == 6 ? 4 : t.rank == 7 ? 3 : 2; break;
    default: b.lower = 2;
  }
  int s = sep_known(R);
  if (s > 0) b.upper_sep = s + 1;
  b.upper_weyl = static_cast<long long>(R.weyl_order()) + 1;
  if (b.upper_sep > 0 && b.upper_sep < b.lower) throw std::logic_error("prim_lower_bounds: bounds cross");
  return b;
}

namespace {

bool replay_witness(const RootSystem& R, const std::vector<Weight>& weights, const Certificate& c, long long threshold) {
  if (c.witness.size() != weights.size() || c.weights.size() != weights.size()) return false;
  if (c.weights != weights) {
    if (c.rule == "normalized") {
      if (!fundamental_multiples(weights) || c.weights != to_fundamentals(weights)) return false;
    } else if (c.rule == "gcd-normalized") {
      if (c.weights != gcd_normalized(weights)) return false;
    } else {
      return false;
    }
  }
  Weight mu = c.target.empty() ? Weight(R.rank(), 0) : c.target;
  long long v = lr_coefficient(R, scaled(c.weights, c.witness), mu);
  return v == c.value && v >= threshold;
}

bool replay_prim_cert(const RootSystem& R, const std::vector<Weight>& weights, Status st, const Certificate& c) {
  const int d = static_cast<int>(weights.size());
  switch (c.kind) {
    case CertKind::Formula: return st == Status::Yes && d <= 2;
    case CertKind::Bound:
      if (st != Status::No) return false;
      if (c.rule == "sep") return sep_known(R) == c.value && d >= c.value + 2;
      if (c.rule == "weyl") return static_cast<long long>(R.weyl_order()) == c.value && d >= c.value + 2;
      if (c.rule == "flag-dimension")
        return fundamental_multiples(weights) && codim_sum(R, weights) == c.value && c.value > R.dim_g();
      return false;
    case CertKind::TableRule: {
      if (c.rule.rfind("table2.", 0) == 0) {
        if (!fundamental_multiples(weights) || d < 3) return false;
        const int node = support(weights[0])[0];
        for (const auto& w : weights)
          if (support(w)[0] != node) return false;
        auto r = equal_index_rule(R.type(), node, d);
        return r.rule == c.rule && r.primitive == (st == Status::Yes);
      }
      if (d != 3 || st != Status::Yes) return false;
      auto s = supports_of(weights);
      auto row = triple_rule(R.type(), {s[0], s[1], s[2]});
      return row && *row == c.rule;
    }
    case CertKind::Quiver: {
      if (R.type().family != Family::A || !fundamental_multiples(weights)) return false;
      std::vector<int> idx;
      for (const auto& w : weights) idx.push_back(support(w)[0]);
      return idx == c.witness && is_primitive_sln_fund(R.rank() + 1, idx) == (st == Status::Yes);
    }
    case CertKind::OpenOrbit:
      return st == Status::Yes && same_tuple_orbit(R, c.weights, weights) &&
             R.dim_g() - codim_sum(R, c.weights) == c.value &&
             flag_sample_intersection(R, supports_of(c.weights), c.seed) == c.value;
    case CertKind::Witness: return st == Status::No && replay_witness(R, weights, c, 2);
    default: return false;
  }
}

}  // namespace

bool replay_primitive(const RootSystem& R, const std::vector<Weight>& weights, const Verdict& v) {
  if (v.status == Status::Unknown) return v.certificate.kind == CertKind::None;
  if (!replay_prim_cert(R, weights, v.status, v.certificate)) return false;
  for (const auto& c : v.extra)
    if (!replay_prim_cert(R, weights, v.status, c)) return false;
  return true;
}

bool replay_primitive_at(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu, const Verdict& v) {
  if (is_zero(mu)) return replay_primitive(R, weights, v);
  if (v.status == Status::Unknown) return v.certificate.kind == CertKind::None;
  const auto& c = v.certificate;
  if (v.status == Status::No) return c.kind == CertKind::Witness && c.target == mu && replay_witness(R, weights, c, 2);
  if (c.kind == CertKind::Formula) return weights.size() == 1;
  auto ext = weights;
  ext.push_back(dual_weight(R, mu));
  return replay_primitive(R, ext, v);
}

bool replay_invariant_free(const RootSystem& R, const std::vector<Weight>& weights, const Verdict& v) {
  const int d = static_cast<int>(weights.size());
  const auto& c = v.certificate;
  switch (v.status) {
    case Status::Unknown: return c.kind == CertKind::None;
    case Status::Yes:
      if (c.kind != CertKind::Formula) return false;
      if (d == 1) return true;
      if (d != 2) return false;
      return !ray_in_cone(to_qvec(dual_weight(R, weights[0])), {to_qvec(weights[1])}) &&
             !ray_in_cone(to_qvec(dual_weight(R, weights[1])), {to_qvec(weights[0])});
    case Status::No:
      if (c.kind == CertKind::Bound) return c.value == R.rank() && d > R.rank();
      if (c.kind == CertKind::Witness) return replay_witness(R, weights, c, 1);
      if (c.kind == CertKind::ConeViolation) {
        if (c.index < 0 || c.index >= d || static_cast<int>(c.coefficients.size()) != d - 1) return false;
        QVec sum(R.rank(), 0);
        int k = 0;
        for (int j = 0; j < d; ++j) {
          if (j == c.index) continue;
          if (c.coefficients[k] < 0) return false;
          for (int t = 0; t < R.rank(); ++t) sum[t] += c.coefficients[k] * weights[j][t];
          ++k;
        }
        return sum == to_qvec(dual_weight(R, weights[c.index])) &&
               std::any_of(sum.begin(), sum.end(), [](const Rational& q) { return q != 0; });
      }
      return false;
  }
  return false;
}

bool replay_stable(const RootSystem& R, const std::vector<Weight>& weights, const Verdict& v) {
  const auto& c = v.certificate;
  if (v.status == Status::Unknown) return c.kind == CertKind::None;
  if (v.status != Status::Yes) return false;
  const int d = static_cast<int>(weights.size());
  if (c.kind == CertKind::Bound) return c.rule == "sep" && sep_known(R) == c.value && d >= c.value;
  if (c.kind != CertKind::Cone) return false;
  if (c.rule == "dual-in-interior") return c.index >= 0 && c.index < d && dual_interior(R, weights, c.index);
  if (c.rule == "partition") return partition_condition(R, weights, c.part);
  if (c.rule == "gamma-exact") return d == 2 && interiors_intersect(gamma_inner_cone(R, 2, {}), factor_cone(weights));
  if (c.rule == "gamma-inner") {
    StableOptions o;
    auto K = gamma_inner_cone(R, d, o);
    return K.full_dimensional() && interiors_intersect(K, factor_cone(weights));
  }
  return false;
}

}  // namespace flagprim
