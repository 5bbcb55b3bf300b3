#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagprim/linalg.hpp"
#include "flagprim/rootsys.hpp"

namespace flagprim {

// matrix model of a classical Lie algebra over GF(P), graded by roots
struct ClassicalRealization {
  SimpleType type;
  int N = 0;                             // matrix size
  std::vector<modp::Mat> basis;          // root vectors and Cartan elements
  std::vector<std::vector<int>> root;    // simple-root coordinates, all zero for Cartan elements
  modp::Mat coords;                      // flattened matrix -> basis coordinates

  int dim() const { return static_cast<int>(basis.size()); }
  // basis indices spanning the parabolic of a support (1-based nodes)
  std::vector<int> parabolic(const Support& s) const;
};

const ClassicalRealization& classical_realization(const SimpleType& t);

enum class OrbitStatus { Open, NotOpen, ProbablyNotOpen };
std::string to_string(OrbitStatus s);

struct FlagOrbitResult {
  OrbitStatus status = OrbitStatus::ProbablyNotOpen;
  bool by_dimension = false;   // codimensions exceed dim G
  int samples_used = 0;
  std::uint64_t witness_seed = 0;  // seed of the sample that opened
  int min_intersection = -1;
  int expected = 0;            // dim G minus the sum of codimensions
  int codim_sum = 0;
};

int parabolic_codim(const RootSystem& R, const Support& s);

FlagOrbitResult open_orbit_flags(const RootSystem& R, const std::vector<Support>& supports, int samples,
                                 std::uint64_t seed);
// replays one sample; returns dim of the intersection of conjugated parabolics
int flag_sample_intersection(const RootSystem& R, const std::vector<Support>& supports, std::uint64_t sample_seed);

enum class Evidence { Primitive, NotPrimitive, Unknown };
std::string to_string(Evidence e);

struct BridgeResult {
  Evidence status = Evidence::Unknown;
  bool certified = false;
  std::string reason;
};

BridgeResult primitivity_bridge(const std::vector<Weight>& weights, OrbitStatus verdict);

}  // namespace flagprim
