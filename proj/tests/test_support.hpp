#pragma once

#include <random>
#include <string>
#include <vector>

#include "flagprim/rootsys.hpp"

namespace fpt {

inline std::vector<std::string> types_up_to_rank(int maxr) {
  std::vector<std::string> out;
  for (int l = 1; l <= maxr; ++l) out.push_back("A" + std::to_string(l));
  for (int l = 3; l <= maxr; ++l) out.push_back("B" + std::to_string(l));
  for (int l = 2; l <= maxr; ++l) out.push_back("C" + std::to_string(l));
  for (int l = 4; l <= maxr; ++l) out.push_back("D" + std::to_string(l));
  for (int l = 6; l <= std::min(maxr, 8); ++l) out.push_back("E" + std::to_string(l));
  if (maxr >= 4) out.push_back("F4");
  if (maxr >= 2) out.push_back("G2");
  return out;
}

inline flagprim::Weight random_weight(std::mt19937_64& rng, int r, int maxc) {
  std::uniform_int_distribution<int> u(0, maxc);
  flagprim::Weight w(r);
  for (auto& x : w) x = u(rng);
  return w;
}

inline flagprim::Weight random_nonzero_weight(std::mt19937_64& rng, int r, int maxc) {
  while (true) {
    auto w = random_weight(rng, r, maxc);
    if (!flagprim::is_zero(w)) return w;
  }
}

inline flagprim::Weight fund(int r, int i, int m = 1) {
  flagprim::Weight w(r, 0);
  w[i - 1] = m;
  return w;
}

}  // namespace fpt
