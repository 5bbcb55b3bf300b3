#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagprim {

// star quiver: vertex 0 is the central sink, vertices 1..d are sources
using DimVector = std::vector<int>;

enum class RootKind { Real, Isotropic, Imaginary };
std::string to_string(RootKind k);

struct Summand {
  DimVector root;
  int multiplicity = 1;
  RootKind kind = RootKind::Real;
};

struct CanonicalDecomposition {
  std::vector<Summand> summands;
  bool all_real() const;
};

long long euler_form(int d, const DimVector& x, const DimVector& y);

CanonicalDecomposition canonical_decomposition(int d, const DimVector& gamma, std::uint64_t seed = 1);

// gamma = (n, i_1, ..., i_d)
bool is_primitive_sln_fund(int n, const std::vector<int>& indices);

// generic dimensions between random representations over a large prime field
int generic_hom(int d, const DimVector& a, const DimVector& b, std::uint64_t seed = 1);
// endomorphisms of one random representation; 1 exactly for Schur roots
int generic_end(int d, const DimVector& a, std::uint64_t seed = 1);
int generic_ext(int d, const DimVector& a, const DimVector& b, std::uint64_t seed = 1);

struct OpenOrbitResult {
  bool open = false;
  int samples_used = 0;
  int min_stabilizer = -1;  // smallest stabilizer dimension seen
  int expected = 0;         // <gamma, gamma>, the stabilizer dimension of an open orbit
  std::uint64_t witness_hash = 0;  // hash of the matrices of the opening sample
  bool excluded_by_bound = false;  // <gamma, gamma> < 1, no sampling needed
};

OpenOrbitResult open_orbit_oracle(int d, const DimVector& gamma, int samples, std::uint64_t seed,
                                  bool use_bound = true);

}  // namespace flagprim
