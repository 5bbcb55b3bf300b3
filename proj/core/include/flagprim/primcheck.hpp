#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "flagprim/rootsys.hpp"

namespace flagprim {

enum class Status { Yes, No, Unknown };
std::string to_string(Status s);

enum class CertKind { None, Formula, Bound, TableRule, Quiver, OpenOrbit, Witness, ConeViolation, Cone };
std::string to_string(CertKind k);

struct Certificate {
  CertKind kind = CertKind::None;
  std::string rule;             // rule id or short name of the argument
  std::vector<Weight> weights;  // tuple the witness refers to (may be normalized)
  std::vector<int> witness;     // scalings n_1..n_d
  Weight target;                // mu for multiplicity witnesses
  long long value = 0;          // multiplicity found, or the bound compared against
  std::uint64_t seed = 0;       // flag-orbit sample seed
  int index = -1;               // distinguished factor for cone arguments
  QVec coefficients;
  std::vector<int> part;        // one side of a partition, 0-based
  std::string detail;
};

struct Verdict {
  Status status = Status::Unknown;
  Certificate certificate;
  std::vector<Certificate> extra;  // supporting certificates, e.g. a witness next to a bound
};

struct CheckOptions {
  int search_bound = 8;
  int samples = 20;
  std::uint64_t seed = 42;
  std::chrono::milliseconds budget{60000};
  bool use_flags = true;
  bool use_tables = true;
  bool attach_witness = true;  // search for a witness behind rule-based No verdicts
};

Verdict check_primitive(const RootSystem& R, const std::vector<Weight>& weights, const CheckOptions& opt = {});
Verdict check_primitive_at(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu,
                           const CheckOptions& opt = {});
Verdict check_invariant_free(const RootSystem& R, const std::vector<Weight>& weights, const CheckOptions& opt = {});

struct StableOptions {
  int height = 4;        // coordinate sum bound per factor for the inner approximation
  int max_tuples = 1500;
  bool use_sep = true;
};
// Yes or Unknown only
Verdict check_stable(const RootSystem& R, const std::vector<Weight>& weights, const StableOptions& opt = {});

struct StableWitness {
  bool applicable = false;
  std::vector<WeylElement> elements;
  std::vector<Weight> points;  // w_i applied to lambda_i
  bool verified = false;
  std::string reason;
};
StableWitness stable_witness_point(const RootSystem& R, const std::vector<Weight>& weights);

struct PrimBounds {
  int lower = 2;
  int upper_sep = -1;   // sep + 1 when sep is known
  long long upper_weyl = 0;  // |W| + 1
  bool exact() const { return upper_sep == lower; }
};
PrimBounds prim_lower_bounds(const RootSystem& R);

struct WitnessSearch {
  bool found = false;
  bool complete = true;  // false when the budget ran out first
  Certificate certificate;
};
// least total first, then lexicographic; multiplicity of mu in the scaled product >= threshold
WitnessSearch search_witness(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu,
                             long long threshold, int bound, std::chrono::milliseconds budget);

// independent re-evaluation of a verdict's certificate
bool replay_primitive(const RootSystem& R, const std::vector<Weight>& weights, const Verdict& v);
bool replay_primitive_at(const RootSystem& R, const std::vector<Weight>& weights, const Weight& mu, const Verdict& v);
bool replay_invariant_free(const RootSystem& R, const std::vector<Weight>& weights, const Verdict& v);
bool replay_stable(const RootSystem& R, const std::vector<Weight>& weights, const Verdict& v);

// every weight a positive multiple of a fundamental weight
bool fundamental_multiples(const std::vector<Weight>& weights);

}  // namespace flagprim
