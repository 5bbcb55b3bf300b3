#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "flagprim/rational.hpp"

namespace flagprim {

enum class Family { A, B, C, D, E, F, G };

struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  // "A3", "E6", "B2" (read as C2)
  static SimpleType parse(const std::string& s);
  std::string name() const;
  void validate() const;
  bool classical() const { return family <= Family::D; }
  auto operator<=>(const SimpleType&) const = default;
};

char family_letter(Family f);

// node labels are 1-based, sorted
using Support = std::vector<int>;

struct WeylElement {
  std::vector<int> word;  // 0-based simple reflection indices, leftmost acts last
  IMat matrix;            // acts on fundamental coordinates

  Weight apply(const Weight& v) const;
  QVec apply(const QVec& v) const;
};

struct BoundData {
  int dim_g = 0;
  int max_levi = 0;
  Integer num;  // reduced 2 dim G / (dim G - max dim L)
  Integer den;
  int bound = 0;
  std::vector<int> argmax;  // 1-based
};

class RootSystem {
 public:
  explicit RootSystem(SimpleType t);

  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank; }
  // cartan()[i][j] = <alpha_i^vee, alpha_j>
  const IMat& cartan() const { return cartan_; }
  const QMat& inv_cartan() const { return inv_cartan_; }
  const std::vector<int>& symmetrizer() const { return d_; }
  const IMat& positive_roots() const { return pos_roots_; }
  const std::vector<int>& w0_perm() const { return w0_perm_; }
  int dim_g() const { return dim_g_; }
  std::size_t weyl_order() const;

  Weight root_to_weight(const std::vector<int>& c) const;
  QVec weight_to_roots(const QVec& w) const;
  // coroot of a positive root, simple-coroot coordinates
  std::vector<int> coroot(const std::vector<int>& c) const;
  const std::vector<int>& highest_root() const { return pos_roots_.back(); }
  std::vector<int> highest_coroot() const { return coroot(highest_root()); }
  // squared length over 2, short roots have 1
  int root_norm(const std::vector<int>& c) const;

  // invariant form on weights scaled by form_scale() to integers
  long long form(const Weight& a, const Weight& b) const;
  long long form_scale() const { return form_scale_; }
  const std::vector<std::vector<long long>>& form_matrix() const { return form_; }

  Weight reflect(const Weight& v, int i) const;
  QVec reflect(const QVec& v, int i) const;
  // moves v into the dominant chamber; word lists the reflections applied in order
  Weight to_dominant(const Weight& v, std::vector<int>* word = nullptr) const;
  QVec to_dominant(const QVec& v, std::vector<int>* word = nullptr) const;
  WeylElement element(const std::vector<int>& word) const;
  // ordered by length then lexicographically; |W| entries, intended for rank <= 4
  const std::vector<WeylElement>& weyl_group() const;

  Weight rho() const { return Weight(rank(), 1); }

  int levi_dimension(int node) const;  // 1-based
  BoundData bound_data() const;
  int bound_bG() const { return bound_data().bound; }

 private:
  SimpleType type_;
  IMat cartan_;
  QMat inv_cartan_;
  std::vector<int> d_;
  IMat gram_;
  IMat pos_roots_;
  std::vector<int> w0_perm_;
  int dim_g_ = 0;
  std::vector<std::vector<long long>> form_;
  long long form_scale_ = 1;
  mutable std::shared_ptr<const std::vector<WeylElement>> weyl_;
};

std::shared_ptr<const RootSystem> root_system(const SimpleType& t);
std::shared_ptr<const RootSystem> root_system(const std::string& name);

Weight dual_weight(const RootSystem& R, const Weight& w);
Support support(const Weight& w);
bool same_parabolic(const Weight& a, const Weight& b);
bool is_dominant(const Weight& w);
bool is_zero(const Weight& w);

std::set<Weight> weyl_orbit(const RootSystem& R, const Weight& v);
std::set<QVec> weyl_orbit(const RootSystem& R, const QVec& v);

// diagram automorphisms as 0-based node permutations, identity first
std::vector<std::vector<int>> diagram_automorphisms(const SimpleType& t);

}  // namespace flagprim
