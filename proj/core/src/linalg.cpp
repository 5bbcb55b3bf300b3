#include "flagprim/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace flagprim {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit 64 bits");
  return z.get_si();
}

QMat identity(int n) {
  QMat m(n, QVec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

QMat multiply(const QMat& a, const QMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  QMat c(n, QVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
    }
  return c;
}

Rational dot(const QVec& a, const QVec& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QMat inverse(QMat a) {
  const int n = static_cast<int>(a.size());
  QMat inv = identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) throw std::domain_error("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rational p = a[col][col];
    for (int j = 0; j < n; ++j) { a[col][j] /= p; inv[col][j] /= p; }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

namespace {

// reduced row echelon form in place; returns pivot columns
std::vector<int> rref(QMat& a, int ncols) {
  std::vector<int> pivots;
  int row = 0;
  const int nrows = static_cast<int>(a.size());
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    Rational p = a[row][col];
    for (int j = col; j < ncols; ++j) a[row][j] /= p;
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      Rational f = a[r][col];
      for (int j = col; j < ncols; ++j) a[r][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

int rank(QMat a) {
  if (a.empty()) return 0;
  return static_cast<int>(rref(a, static_cast<int>(a[0].size())).size());
}

std::vector<QVec> nullspace(QMat a, int ncols) {
  std::vector<int> piv = rref(a, ncols);
  std::vector<char> is_piv(ncols, 0);
  for (int c : piv) is_piv[c] = 1;
  std::vector<QVec> basis;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    QVec v(ncols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace modp {

std::uint64_t pow(std::uint64_t a, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

int rank(Mat a) {
  if (a.empty()) return 0;
  const int nrows = static_cast<int>(a.size());
  const int ncols = static_cast<int>(a[0].size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    std::uint64_t ip = inv(a[row][col]);
    for (int j = col; j < ncols; ++j) a[row][j] = mul(a[row][j], ip);
    for (int r = row + 1; r < nrows; ++r) {
      std::uint64_t f = a[r][col];
      if (f == 0) continue;
      for (int j = col; j < ncols; ++j) a[r][j] = sub(a[r][j], mul(f, a[row][j]));
    }
    ++row;
  }
  return row;
}

Mat nullspace(Mat a, int ncols) {
  const int nrows = static_cast<int>(a.size());
  std::vector<int> pivcol;
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    std::uint64_t ip = inv(a[row][col]);
    for (int j = col; j < ncols; ++j) a[row][j] = mul(a[row][j], ip);
    for (int r = 0; r < nrows; ++r) {
      if (r == row) continue;
      std::uint64_t f = a[r][col];
      if (f == 0) continue;
      for (int j = col; j < ncols; ++j) a[r][j] = sub(a[r][j], mul(f, a[row][j]));
    }
    pivcol.push_back(col);
    ++row;
  }
  std::vector<bool> is_piv(ncols, false);
  for (int c : pivcol) is_piv[c] = true;
  Mat out;
  for (int f = 0; f < ncols; ++f) {
    if (is_piv[f]) continue;
    std::vector<std::uint64_t> v(ncols, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < pivcol.size(); ++i) v[pivcol[i]] = sub(0, a[i][f]);
    out.push_back(std::move(v));
  }
  return out;
}

// reduced rows spanning the same space
Mat row_basis(Mat a, int ncols) {
  const int nrows = static_cast<int>(a.size());
  int row = 0;
  for (int col = 0; col < ncols && row < nrows; ++col) {
    int piv = -1;
    for (int r = row; r < nrows; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[row]);
    const std::uint64_t ip = inv(a[row][col]);
    for (int j = col; j < ncols; ++j) a[row][j] = mul(a[row][j], ip);
    for (int r = 0; r < nrows; ++r) {
      if (r == row || a[r][col] == 0) continue;
      const std::uint64_t f = a[r][col];
      for (int j = col; j < ncols; ++j) a[r][j] = sub(a[r][j], mul(f, a[row][j]));
    }
    ++row;
  }
  a.resize(row);
  return a;
}

// left inverse of the matrix whose columns are the basis vectors
Mat coordinate_map(const Mat& basis, int n) {
  const int k = static_cast<int>(basis.size());
  std::vector<int> rows;
  Mat acc;
  for (int r = 0; r < n && static_cast<int>(rows.size()) < k; ++r) {
    std::vector<std::uint64_t> line(k);
    for (int t = 0; t < k; ++t) line[t] = basis[t][r];
    acc.push_back(line);
    if (rank(acc) == static_cast<int>(acc.size())) {
      rows.push_back(r);
    } else {
      acc.pop_back();
    }
  }
  if (static_cast<int>(rows.size()) != k) throw std::logic_error("coordinate_map: dependent basis");
  Mat sinv;
  if (!inverse(acc, sinv)) throw std::logic_error("coordinate_map: singular");
  Mat left(k, std::vector<std::uint64_t>(n, 0));
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < k; ++i) left[t][rows[i]] = sinv[t][i];
  return left;
}

bool inverse(const Mat& src, Mat& out) {
  const int n = static_cast<int>(src.size());
  Mat a = src;
  out.assign(n, std::vector<std::uint64_t>(n, 0));
  for (int i = 0; i < n; ++i) out[i][i] = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) { piv = r; break; }
    if (piv < 0) return false;
    std::swap(a[piv], a[col]);
    std::swap(out[piv], out[col]);
    std::uint64_t ip = inv(a[col][col]);
    for (int j = 0; j < n; ++j) { a[col][j] = mul(a[col][j], ip); out[col][j] = mul(out[col][j], ip); }
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      std::uint64_t f = a[r][col];
      for (int j = 0; j < n; ++j) {
        a[r][j] = sub(a[r][j], mul(f, a[col][j]));
        out[r][j] = sub(out[r][j], mul(f, out[col][j]));
      }
    }
  }
  return true;
}

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Mat c(n, std::vector<std::uint64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t t = 0; t < k; ++t) {
      std::uint64_t x = a[i][t];
      if (!x) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] = add(c[i][j], mul(x, b[t][j]));
    }
  return c;
}

}  // namespace modp

}  // namespace flagprim
