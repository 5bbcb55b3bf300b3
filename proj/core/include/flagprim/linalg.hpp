#pragma once

#include <cstdint>
#include <vector>

#include "flagprim/rational.hpp"

namespace flagprim {

QMat identity(int n);
QMat multiply(const QMat& a, const QMat& b);
QMat inverse(QMat a);
int rank(QMat a);
// basis of {x : a x = 0}
std::vector<QVec> nullspace(QMat a, int ncols);
Rational dot(const QVec& a, const QVec& b);

// arithmetic modulo the Mersenne prime 2^61 - 1
namespace modp {

constexpr std::uint64_t P = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t reduce(std::int64_t x) {
  std::int64_t r = x % static_cast<std::int64_t>(P);
  if (r < 0) r += static_cast<std::int64_t>(P);
  return static_cast<std::uint64_t>(r);
}

inline std::uint64_t add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t s = a + b;
  return s >= P ? s - P : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b) {
  return a >= b ? a - b : a + P - b;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
  std::uint64_t lo = static_cast<std::uint64_t>(z & P);
  std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
  return add(lo, hi);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e);
inline std::uint64_t inv(std::uint64_t a) { return pow(a, P - 2); }

using Mat = std::vector<std::vector<std::uint64_t>>;

int rank(Mat a);
// returns false when singular
bool inverse(const Mat& a, Mat& out);
Mat multiply(const Mat& a, const Mat& b);
// basis of {x : a x = 0}, one vector per row
Mat nullspace(Mat a, int ncols);
// reduced rows spanning the row space
Mat row_basis(Mat a, int ncols);
// left inverse of the n x k matrix whose columns are the given basis vectors
Mat coordinate_map(const Mat& basis, int n);

}  // namespace modp

}  // namespace flagprim
