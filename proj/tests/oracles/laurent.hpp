#pragma once

// Brute-force characters as Laurent polynomials: Weyl's alternating-sum
// formula divided out one positive root at a time, and tensor products
// decomposed by peeling off highest weights.

#include <map>
#include <stdexcept>

#include "flagprim/rootsys.hpp"

namespace oracle {

using flagprim::Weight;
using Laurent = std::map<Weight, long long>;

inline Weight plus(const Weight& a, const Weight& b, int k = 1) {
  Weight c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + k * b[i];
  return c;
}

// P / (1 - e^{-beta}); throws if not exact
inline Laurent divide_by(const Laurent& p, const Weight& beta) {
  // Q(x) = sum_{k>=0} P(x + k beta); walk each beta-line from its top
  Laurent q;
  std::map<Weight, bool> done;
  for (const auto& kv : p) {
    const Weight& x = kv.first;
    if (done.count(x)) continue;
    // all support points on the line x + Z beta, by offset
    std::map<long long, long long> line;
    for (const auto& [y, c] : p) {
      long long t = 0;
      bool on = true, set = false;
      for (std::size_t i = 0; i < x.size() && on; ++i) {
        long long diff = y[i] - x[i];
        if (beta[i] == 0) {
          on = diff == 0;
        } else if (diff % beta[i] != 0) {
          on = false;
        } else if (!set) {
          t = diff / beta[i];
          set = true;
        } else {
          on = t == diff / beta[i];
        }
      }
      if (on) {
        line[t] += c;
        done[y] = true;
      }
    }
    long long run = 0;
    const long long lo = line.begin()->first, hi = line.rbegin()->first;
    for (long long t = hi; t >= lo; --t) {
      auto it = line.find(t);
      if (it != line.end()) run += it->second;
      if (run != 0) q[plus(x, beta, static_cast<int>(t))] += run;
    }
    if (run != 0) throw std::logic_error("oracle: inexact division");
  }
  return q;
}

inline Laurent weyl_character(const flagprim::RootSystem& R, const Weight& lambda) {
  Laurent alt;
  Weight lr = plus(lambda, R.rho());
  for (const auto& w : R.weyl_group()) {
    long long sign = (w.word.size() % 2 == 0) ? 1 : -1;
    alt[w.apply(lr)] += sign;
  }
  Laurent p = alt;
  for (const auto& c : R.positive_roots()) p = divide_by(p, R.root_to_weight(c));
  Laurent out;
  Weight rho = R.rho();
  for (const auto& [x, c] : p)
    if (c) out[plus(x, rho, -1)] = c;
  return out;
}

inline Laurent multiply(const Laurent& a, const Laurent& b) {
  Laurent out;
  for (const auto& [x, c] : a)
    for (const auto& [y, d] : b) out[plus(x, y)] += c * d;
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

inline std::map<Weight, long long> decompose(const flagprim::RootSystem& R, Laurent ch) {
  std::map<Weight, long long> out;
  while (!ch.empty()) {
    // a weight of maximal height is a highest weight
    const Weight* best = nullptr;
    flagprim::Rational best_h;
    for (const auto& [x, c] : ch) {
      flagprim::Rational h = 0;
      for (const auto& v : R.weight_to_roots(flagprim::to_qvec(x))) h += v;
      if (!best || h > best_h) best = &x, best_h = h;
    }
    Weight hw = *best;
    long long m = ch[hw];
    if (m <= 0 || !flagprim::is_dominant(hw)) throw std::logic_error("oracle: bad highest weight");
    out[hw] = m;
    for (const auto& [x, c] : weyl_character(R, hw)) {
      ch[x] -= m * c;
      if (ch[x] == 0) ch.erase(x);
    }
  }
  return out;
}

inline std::map<Weight, long long> tensor(const flagprim::RootSystem& R, const Weight& a, const Weight& b) {
  return decompose(R, multiply(weyl_character(R, a), weyl_character(R, b)));
}

}  // namespace oracle
