#pragma once

// Exact matrix algebra over a finite commutative ring: arithmetic,
// division-free determinant (Laplace expansion memoized over column
// subsets), cofactors/adjugate, indexed submatrices, and the usual special
// matrices. Operations return fresh values; matrices are safe to share
// read-only.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ortho/ring.hpp"

namespace ortho {

class Matrix {
public:
  Matrix() = default;

  Matrix(Ring ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), ent_(rows * cols, Elem{0}) {}

  static Matrix from_entries(Ring ring, std::size_t rows, std::size_t cols,
                             std::vector<Elem> entries) {
    if (entries.size() != rows * cols) throw Error("matrix entry count mismatch");
    Matrix m(std::move(ring), rows, cols);
    for (Elem e : entries)
      if (!m.ring_.contains(e)) throw Error("matrix entry not in ring");
    m.ent_ = std::move(entries);
    return m;
  }

  const Ring& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Elem at(std::size_t r, std::size_t c) const { return ent_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Elem e) {
    if (r >= rows_ || c >= cols_) throw Error("matrix index out of range");
    if (!ring_.contains(e)) throw Error("matrix entry not in ring");
    ent_[r * cols_ + c] = e;
  }

  std::span<const Elem> entries() const { return ent_; }

  bool is_zero() const {
    for (Elem e : ent_)
      if (e.index != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.ring_.same_ring(b.ring_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
           a.ent_ == b.ent_;
  }

private:
  Ring ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> ent_;
};

namespace detail {

inline void require_same_ring(const Matrix& a, const Matrix& b, const char* op) {
  if (!a.ring().same_ring(b.ring())) throw Error(std::string(op) + ": ring mismatch");
}

} // namespace detail

inline Matrix operator+(const Matrix& a, const Matrix& b) {
  detail::require_same_ring(a, b, "add");
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error("add: shape mismatch");
  Matrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out.set(r, c, a.ring().add(a.at(r, c), b.at(r, c)));
  return out;
}

inline Matrix operator-(const Matrix& a) {
  Matrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.ring().neg(a.at(r, c)));
  return out;
}

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  detail::require_same_ring(a, b, "mul");
  if (a.cols() != b.rows()) throw Error("mul: shape mismatch");
  const Ring& R = a.ring();
  Matrix out(R, a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) {
      std::uint32_t acc = 0;
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = R.add_idx(acc, R.mul_idx(a.at(r, k).index, b.at(k, c).index));
      out.set(r, c, Elem{acc});
    }
  return out;
}

inline Matrix transpose(const Matrix& a) {
  Matrix out(a.ring(), a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(c, r, a.at(r, c));
  return out;
}

inline Matrix scalar_mul(Elem s, const Matrix& a) {
  if (!a.ring().contains(s)) throw Error("scalar_mul: scalar not in ring");
  Matrix out(a.ring(), a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a.ring().mul(s, a.at(r, c)));
  return out;
}

namespace detail {

// Determinant over raw entry indices. Subset DP: det of the submatrix made
// of the first popcount(mask) rows and the column set `mask`, expanding
// along its last row. Division-free, so valid over any commutative ring.
inline std::uint32_t det_raw(const Ring& R, const std::uint32_t* ent, std::size_t n,
                             std::vector<std::uint32_t>& memo) {
  if (n == 0) return R.one().index;
  if (n > 16) throw Error("determinant: size too large");
  const std::size_t full = std::size_t{1} << n;
  memo.assign(full, 0);
  memo[0] = R.one().index;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const int k = std::popcount(mask);
    const std::size_t row = static_cast<std::size_t>(k - 1);
    std::uint32_t acc = 0;
    int t = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(mask & (std::size_t{1} << j))) continue;
      std::uint32_t term = R.mul_idx(ent[row * n + j], memo[mask ^ (std::size_t{1} << j)]);
      if (((k - 1) + t) % 2 != 0) term = R.neg_idx(term);
      acc = R.add_idx(acc, term);
      ++t;
    }
    memo[mask] = acc;
  }
  return memo[full - 1];
}

} // namespace detail

inline Elem determinant(const Matrix& a) {
  if (!a.square()) throw Error("determinant: matrix not square");
  const std::size_t n = a.rows();
  std::vector<std::uint32_t> ent(n * n);
  for (std::size_t i = 0; i < n * n; ++i) ent[i] = a.entries()[i].index;
  std::vector<std::uint32_t> memo;
  return Elem{detail::det_raw(a.ring(), ent.data(), n, memo)};
}

/// 1-based row/column index tuple; repetition permitted.
using IndexTuple = std::vector<std::size_t>;

/// Indexed selection: entry (i, j) of the result is A[rows[i], cols[j]].
/// Empty tuples give the 0x0 matrix, whose determinant is 1.
inline Matrix submatrix(const Matrix& a, const IndexTuple& rows, const IndexTuple& cols) {
  for (std::size_t r : rows)
    if (r < 1 || r > a.rows()) throw Error("submatrix: row index out of range");
  for (std::size_t c : cols)
    if (c < 1 || c > a.cols()) throw Error("submatrix: column index out of range");
  Matrix out(a.ring(), rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      out.set(i, j, a.at(rows[i] - 1, cols[j] - 1));
  return out;
}

/// Cofactor matrix: entry (i, j) is (-1)^(i+j) times the minor with row i
/// and column j removed. For 1x1 input this is [[1]] (empty minor).
inline Matrix cofactor_matrix(const Matrix& a) {
  if (!a.square()) throw Error("cofactor: matrix not square");
  const std::size_t n = a.rows();
  const Ring& R = a.ring();
  Matrix out(R, n, n);
  std::vector<std::uint32_t> minor((n - 1) * (n - 1));
  std::vector<std::uint32_t> memo;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t p = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == j) continue;
          minor[p++] = a.at(r, c).index;
        }
      }
      std::uint32_t d = detail::det_raw(R, minor.data(), n - 1, memo);
      if ((i + j) % 2 != 0) d = R.neg_idx(d);
      out.set(i, j, Elem{d});
    }
  return out;
}

/// Adjugate: transpose of the cofactor matrix. Satisfies
/// adj(A)*A = A*adj(A) = det(A)*E over any commutative ring.
inline Matrix adjugate(const Matrix& a) { return transpose(cofactor_matrix(a)); }

inline Matrix zero_matrix(Ring ring, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw Error("zero_matrix: sizes must be positive");
  return Matrix(std::move(ring), rows, cols);
}

inline Matrix identity_matrix(Ring ring, std::size_t n) {
  if (n == 0) throw Error("identity_matrix: size must be positive");
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ring.one());
  return m;
}

/// Jordan cell of size n with eigenvalue 0: ones on the superdiagonal.
inline Matrix jordan_cell(Ring ring, std::size_t n) {
  if (n == 0) throw Error("jordan_cell: size must be positive");
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.set(i, i + 1, ring.one());
  return m;
}

/// Matrix unit E_{kl} (1-based): single 1 at row k, column l.
inline Matrix matrix_unit(Ring ring, std::size_t n, std::size_t k, std::size_t l) {
  if (k < 1 || k > n || l < 1 || l > n) throw Error("matrix_unit: index out of range");
  Matrix m(ring, n, n);
  m.set(k - 1, l - 1, ring.one());
  return m;
}

/// aE, the image of a under the embedding R -> M_n(R).
inline Matrix scalar_matrix(Ring ring, Elem a, std::size_t n) {
  if (!ring.contains(a)) throw Error("scalar_matrix: element not in ring");
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, a);
  return m;
}

/// Permutation matrix with entry 1 at (i, sigma(i)); sigma is 1-based and
/// must be a bijection on {1..n}.
inline Matrix permutation_matrix(Ring ring, const std::vector<std::size_t>& sigma) {
  const std::size_t n = sigma.size();
  std::vector<std::uint8_t> seen(n, 0);
  for (std::size_t v : sigma) {
    if (v < 1 || v > n || seen[v - 1]) throw Error("permutation_matrix: not a permutation");
    seen[v - 1] = 1;
  }
  Matrix m(ring, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, sigma[i] - 1, ring.one());
  return m;
}

/// xy = yx = 0.
inline bool orthogonal(const Matrix& a, const Matrix& b) {
  return (a * b).is_zero() && (b * a).is_zero();
}

/// A square matrix is a (two-sided) zero-divisor in M_n(R) exactly when its
/// determinant is a zero-divisor in R.
inline bool is_zero_divisor_matrix(const Matrix& a) {
  return a.ring().is_zero_divisor(determinant(a));
}

/// Membership in M_n(I): every entry lies in the ideal.
inline bool in_matrix_ideal(const Matrix& a, const Ideal& I) {
  if (!a.ring().same_ring(I.ring())) throw Error("in_matrix_ideal: ring mismatch");
  for (Elem e : a.entries())
    if (!I.contains(e)) return false;
  return true;
}

/// Literal form: rows separated by ';', entries by ',', each entry in the
/// ring's element syntax ("2,0;0,1").
inline std::string format_matrix(const Matrix& a) {
  std::string out;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (r) out += ";";
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (c) out += ",";
      out += a.ring().format(a.at(r, c));
    }
  }
  return out;
}

} // namespace ortho
