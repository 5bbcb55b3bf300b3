#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "flagprim/rootsys.hpp"

namespace flagprim {

// dominant weight -> multiplicity
using CharacterTable = std::map<Weight, long long>;
using WeightMultiset = std::map<Weight, long long>;
using ExpandedCharacter = std::vector<std::pair<Weight, long long>>;

Integer weyl_dim(const RootSystem& R, const Weight& w);
long long weyl_dim64(const RootSystem& R, const Weight& w);

// uncached Freudenthal recursion over dominant weights
CharacterTable freudenthal(const RootSystem& R, const Weight& w);

// memoized access; optional content-addressed disk cache
std::shared_ptr<const CharacterTable> character(const RootSystem& R, const Weight& w);
std::shared_ptr<const ExpandedCharacter> expanded_character(const RootSystem& R, const Weight& w);

struct CharCacheOptions {
  bool memo = true;
  std::string disk_dir;  // empty: no disk cache
};
void set_char_cache_options(const CharCacheOptions& o);
CharCacheOptions char_cache_options();
void clear_char_cache();
std::string char_cache_key(const RootSystem& R, const Weight& w);

// reflects v + rho into the dominant chamber; returns false on a wall
bool dot_dominant(const RootSystem& R, Weight& v, int& sign);

WeightMultiset tensor_decompose(const RootSystem& R, const Weight& a, const Weight& b);
WeightMultiset tensor_decompose(const RootSystem& R, const std::vector<Weight>& factors);
// multiplicity of E_target in E_a (x) E_b without building the full product
long long klimyk_coefficient(const RootSystem& R, const Weight& a, const Weight& b, const Weight& target);
long long multiset_coefficient(const RootSystem& R, const WeightMultiset& m, const Weight& b, const Weight& target);

// c^mu_{lambda_1..lambda_d}
long long lr_coefficient(const RootSystem& R, const std::vector<Weight>& factors, const Weight& mu);
inline long long invariant_dim(const RootSystem& R, const std::vector<Weight>& factors) {
  return lr_coefficient(R, factors, Weight(R.rank(), 0));
}
bool gamma_member(const RootSystem& R, const std::vector<Weight>& mus);

Integer module_dimension(const RootSystem& R, const WeightMultiset& m);

WeightMultiset e6_fastpath(int s, int t);
int invariant_dim_e6_system(int n1, int n2, int n3, int n4);

// mu <= nu in dominance order (nu - mu is a nonnegative sum of simple roots)
bool dominance_leq(const RootSystem& R, const Weight& mu, const Weight& nu);

}  // namespace flagprim
