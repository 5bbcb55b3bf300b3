#pragma once

// Multiplicity of E_mu in Sym^a(27) (x) Sym^b(27) (x) Sym^c(27) for E6, from
// the 27 minuscule weights alone:  c_mu = sum_w sign(w) m_V(mu + rho - w rho).

#include <functional>
#include <unordered_map>

#include "flagprim/rootsys.hpp"

namespace oracle {

struct WeightHash {
  std::size_t operator()(const flagprim::Weight& w) const {
    std::size_t h = 0;
    for (int x : w) h = h * 1000003u + static_cast<std::size_t>(x + 500);
    return h;
  }
};
using WeightCount = std::unordered_map<flagprim::Weight, long long, WeightHash>;

inline WeightCount symmetric_power(const std::vector<flagprim::Weight>& ws, int k) {
  WeightCount out;
  const std::size_t r = ws.empty() ? 0 : ws[0].size();
  std::function<void(flagprim::Weight&, std::size_t, int)> rec = [&](flagprim::Weight& w, std::size_t start, int left) {
    if (!left) {
      out[w]++;
      return;
    }
    for (std::size_t i = start; i < ws.size(); ++i) {
      for (std::size_t j = 0; j < r; ++j) w[j] += ws[i][j];
      rec(w, i, left - 1);
      for (std::size_t j = 0; j < r; ++j) w[j] -= ws[i][j];
    }
  };
  flagprim::Weight w(r, 0);
  rec(w, 0, k);
  return out;
}

inline long long brauer_sym_triple(const flagprim::RootSystem& R, const std::vector<flagprim::Weight>& minuscule,
                                   int a, int b, int c, const flagprim::Weight& mu) {
  auto sa = symmetric_power(minuscule, a), sb = symmetric_power(minuscule, b), sc = symmetric_power(minuscule, c);
  WeightCount sab;
  for (const auto& [x, m] : sa)
    for (const auto& [y, n] : sb) {
      flagprim::Weight z(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) z[i] = x[i] + y[i];
      sab[z] += m * n;
    }
  const flagprim::Weight rho = R.rho();
  long long total = 0;
  for (const auto& w : R.weyl_group()) {
    flagprim::Weight wr = w.apply(rho);
    flagprim::Weight pt(mu.size()), y(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) pt[i] = mu[i] + rho[i] - wr[i];
    long long mv = 0;
    for (const auto& [z, k] : sc) {
      for (std::size_t i = 0; i < mu.size(); ++i) y[i] = pt[i] - z[i];
      auto it = sab.find(y);
      if (it != sab.end()) mv += k * it->second;
    }
    total += (w.word.size() % 2 ? -1 : 1) * mv;
  }
  return total;
}

}  // namespace oracle
