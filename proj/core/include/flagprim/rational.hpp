#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace flagprim {

using Integer = mpz_class;
using Rational = mpq_class;
using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// fundamental-weight coordinates; dominant iff every entry >= 0
using Weight = std::vector<int>;
using IMat = std::vector<std::vector<int>>;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline QVec to_qvec(const Weight& w) {
  QVec v(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) v[i] = w[i];
  return v;
}

inline std::string to_string(const Rational& q) {
  return q.get_str();
}

// p/q or integer form
Rational parse_rational(const std::string& s);

std::int64_t to_int64(const Integer& z);

}  // namespace flagprim
