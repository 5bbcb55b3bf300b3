#pragma once

#include <vector>

#include "flagprim/rootsys.hpp"

namespace flagprim {

// maximize c.x subject to A_eq x = b_eq, A_le x <= b_le, x >= 0
struct LinearProgram {
  QMat a_eq;
  QVec b_eq;
  QMat a_le;
  QVec b_le;
  QVec c;
};

struct LPSolution {
  enum class Status { Optimal, Infeasible, Unbounded };
  Status status = Status::Infeasible;
  Rational value;
  QVec x;
};

LPSolution solve_lp(const LinearProgram& lp, int nvars);

struct Constraint {
  enum class Kind { Eq, Ge, Gt };
  QVec a;
  Rational b;
  Kind kind = Kind::Ge;
};

struct SystemResult {
  bool feasible = false;
  QVec point;
};

// free variables unless nonneg[i]; strict rows handled by a bounded slack
SystemResult solve_system(int nvars, const std::vector<Constraint>& cons, const std::vector<bool>& nonneg = {});

struct RationalCone {
  std::vector<QVec> generators;
  int ambient = 0;

  RationalCone() = default;
  RationalCone(std::vector<QVec> gens, int dim);
  static RationalCone from_weights(const std::vector<Weight>& gens, int dim);
  int dimension() const;
  bool full_dimensional() const { return dimension() == ambient; }
};

bool cone_member(const RationalCone& C, const QVec& x, bool strict);
bool zero_in_conv(const std::vector<QVec>& pts);
bool zero_in_interior_conv(const std::vector<QVec>& pts);
int affine_dimension(const std::vector<QVec>& pts);
bool interiors_intersect(const RationalCone& a, const RationalCone& b);
bool ray_in_cone(const QVec& v, const std::vector<QVec>& others);
// nonnegative rational coefficients with sum c_i g_i = x, if any
bool cone_coefficients(const std::vector<QVec>& gens, const QVec& x, QVec& coeffs);

// Fourier-Motzkin oracle: rows a.x <= b, < b when strict, = b when eq
struct FMRow {
  QVec a;
  Rational b;
  bool strict = false;
  bool eq = false;
};
bool fm_feasible(std::vector<FMRow> rows, int nvars);
bool cone_member_fm(const RationalCone& C, const QVec& x, bool strict);

struct Chamber {
  WeylElement owner;
  std::vector<Weight> generators;  // owner applied to the fundamental weights
};

Chamber chamber_of(const RootSystem& R, const WeylElement& w);
std::vector<Chamber> suter_chambers(const RootSystem& R);
// coroot coefficients (simple coroot basis) of the highest root of the dual system
std::vector<int> dual_highest_root(const RootSystem& R);

}  // namespace flagprim
