#pragma once

// Constructive witnesses for matrices over finite commutative rings:
//  - maximal minors outside an ideal, with certificates
//  - annihilating complements B with B not in M_n(I), AB, BA in M_n(I)
//  - orthogonal witnesses C with AC = CA = 0
//  - common orthogonal families through a scalar matrix
//  - explicit short paths in the orthogonality graph (length <= 2 to a
//    scalar vertex, length <= 4 between any two vertices)
//
// Every returned path is validated against its own invariants before being
// handed back.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ortho/matrix.hpp"
#include "ortho/ring.hpp"

namespace ortho {

/// Certificate that k is the largest size of a square index-selection of A
/// whose determinant lies outside the ideal I: the chosen k-minor is
/// outside, and every (k+1)-minor is inside.
struct MinorCertificate {
  std::size_t k = 0;
  IndexTuple rows, cols;   // 1-based, strictly increasing, length k
  Elem minor_det{0};
};

namespace detail {

// First strictly increasing k-tuple out of 1..n, then lexicographic
// successor; false when exhausted.
inline bool first_combination(IndexTuple& t, std::size_t k) {
  t.resize(k);
  std::iota(t.begin(), t.end(), std::size_t{1});
  return true;
}

inline bool next_combination(IndexTuple& t, std::size_t n) {
  const std::size_t k = t.size();
  for (std::size_t i = k; i-- > 0;) {
    if (t[i] < n - (k - 1 - i)) {
      ++t[i];
      for (std::size_t j = i + 1; j < k; ++j) t[j] = t[j - 1] + 1;
      return true;
    }
  }
  return false;
}

} // namespace detail

/// Scans k = n-1 down to 0, row tuples outer and column tuples inner, both
/// in lexicographic order over strictly increasing sequences; the first
/// minor with determinant outside I wins. Restricting to increasing tuples
/// is sound because ideals are closed under negation, so membership of a
/// minor determinant is invariant under row/column exchanges.
///
/// Requires det(A) in I and I proper, which forces k < n. When every entry
/// of A lies in I the result is k = 0 with empty tuples and determinant 1
/// (the 0x0 minor).
inline MinorCertificate maximal_minor_outside_ideal(const Matrix& A, const Ideal& I) {
  if (!A.square()) throw Error("maximal_minor_outside_ideal: matrix not square");
  if (!A.ring().same_ring(I.ring()))
    throw Error("maximal_minor_outside_ideal: ring mismatch");
  if (!I.is_proper()) throw Error("maximal_minor_outside_ideal: ideal is not proper");
  if (!I.contains(determinant(A)))
    throw Error("maximal_minor_outside_ideal: det(A) is not in the ideal");
  const std::size_t n = A.rows();
  for (std::size_t k = n; k-- > 1;) {
    IndexTuple rows, cols;
    detail::first_combination(rows, k);
    do {
      detail::first_combination(cols, k);
      do {
        const Elem d = determinant(submatrix(A, rows, cols));
        if (!I.contains(d)) return MinorCertificate{k, rows, cols, d};
      } while (detail::next_combination(cols, n));
    } while (detail::next_combination(rows, n));
  }
  return MinorCertificate{0, {}, {}, A.ring().one()};
}

/// Theorem contract: given det(A) in a proper ideal I, produce B with
/// B not in M_n(I) and AB, BA in M_n(I).
///
/// Construction: take a maximal minor certificate (k, P', P''), permute rows
/// and columns so that minor becomes leading-principal (A0), pad the
/// adjugate of the leading (k+1)x(k+1) block of A0 with zeros, and permute
/// back.
inline Matrix annihilating_complement(const Matrix& A, const Ideal& I) {
  const MinorCertificate cert = maximal_minor_outside_ideal(A, I);
  const std::size_t n = A.rows();
  const std::size_t k = cert.k;
  const std::size_t m = k + 1;

  // rho/gamma: selected indices first (in order), remaining ascending; 0-based.
  auto extend = [n](const IndexTuple& sel) {
    std::vector<std::size_t> perm;
    perm.reserve(n);
    std::vector<std::uint8_t> used(n, 0);
    for (std::size_t v : sel) {
      perm.push_back(v - 1);
      used[v - 1] = 1;
    }
    for (std::size_t i = 0; i < n; ++i)
      if (!used[i]) perm.push_back(i);
    return perm;
  };
  const std::vector<std::size_t> rho = extend(cert.rows);
  const std::vector<std::size_t> gamma = extend(cert.cols);

  Matrix A0(A.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) A0.set(i, j, A.at(rho[i], gamma[j]));

  Matrix C(A.ring(), m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) C.set(i, j, A0.at(i, j));
  const Matrix adjC = adjugate(C);

  Matrix B0(A.ring(), n, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) B0.set(i, j, adjC.at(i, j));

  // A = P A0 Q  =>  B = Q^{-1} B0 P^{-1}, i.e. scatter through the same
  // index permutations.
  Matrix B(A.ring(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) B.set(gamma[i], rho[j], B0.at(i, j));
  return B;
}

/// Given c != 0 with c*det(A) = 0, returns C = c*B for B the annihilating
/// complement modulo Ann(c): C != 0, C in cS, AC = CA = 0.
inline Matrix orthogonal_witness(const Matrix& A, Elem c) {
  const Ring& R = A.ring();
  if (!R.contains(c)) throw Error("orthogonal_witness: element not in ring");
  if (c.index == 0) throw Error("orthogonal_witness: c must be nonzero");
  if (R.mul(c, determinant(A)).index != 0)
    throw Error("orthogonal_witness: c does not annihilate det(A)");
  const Ideal I = annihilator(R, c);
  const Matrix B = annihilating_complement(A, I);
  return scalar_mul(c, B);
}

/// Output of common_orthogonal_family: a nonzero zero-divisor b and, per
/// input matrix, a nonzero witness C_A with bE orthogonal to C_A orthogonal
/// to A. All witnesses lie in cS for the recorded common element c.
struct OrthogonalFamily {
  Elem b{0};
  Elem c{0};
  std::vector<Matrix> witnesses;  // aligned with the input order
};

inline OrthogonalFamily common_orthogonal_family(const std::vector<Matrix>& D) {
  if (D.empty()) throw Error("common_orthogonal_family: empty input");
  const Ring& R = D.front().ring();
  const std::size_t n = D.front().rows();
  for (const Matrix& A : D) {
    if (!A.ring().same_ring(R)) throw Error("common_orthogonal_family: ring mismatch");
    if (!A.square() || A.rows() != n) throw Error("common_orthogonal_family: size mismatch");
  }
  Ideal I = annihilator(R, determinant(D.front()));
  for (std::size_t i = 1; i < D.size(); ++i)
    I = intersect(I, annihilator(R, determinant(D[i])));
  if (I.is_zero())
    throw Error("common_orthogonal_family: trivial intersection of annihilator ideals");
  // A nonzero ideal in a ring with zero-divisors meets the zero-divisor set
  // nontrivially; pick the first such element.
  std::optional<Elem> c;
  for (Elem e : I.members())
    if (e.index != 0 && R.is_zero_divisor(e)) {
      c = e;
      break;
    }
  if (!c) throw Error("common_orthogonal_family: no zero-divisor in the intersection");
  std::optional<Elem> b;
  for (std::size_t x = 1; x < R.order(); ++x)
    if (R.mul_idx(static_cast<std::uint32_t>(x), c->index) == 0) {
      b = Elem{static_cast<std::uint32_t>(x)};
      break;
    }
  OrthogonalFamily fam;
  fam.b = *b;
  fam.c = *c;
  for (const Matrix& A : D) fam.witnesses.push_back(orthogonal_witness(A, *c));
  return fam;
}

/// A path in the orthogonality graph: consecutive vertices are distinct and
/// orthogonal, and every vertex is a nonzero zero-divisor matrix.
struct OrthoPath {
  std::vector<Matrix> vertices;

  std::size_t length() const { return vertices.size() - 1; }

  void validate() const {
    if (vertices.empty()) throw Error("path: empty");
    const Ring& R = vertices.front().ring();
    const std::size_t n = vertices.front().rows();
    for (const Matrix& V : vertices) {
      if (!V.ring().same_ring(R) || !V.square() || V.rows() != n)
        throw Error("path: vertex ring/shape mismatch");
      if (V.is_zero()) throw Error("path: zero matrix is not a vertex");
      if (!is_zero_divisor_matrix(V)) throw Error("path: vertex is not a zero-divisor matrix");
    }
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
      if (vertices[i] == vertices[i + 1]) throw Error("path: repeated consecutive vertex");
      if (!orthogonal(vertices[i], vertices[i + 1]))
        throw Error("path: consecutive vertices not orthogonal");
    }
  }
};

namespace detail {

// Splice out cycles: whenever a vertex reappears later, drop everything in
// between. Orthogonality of the joined pair is inherited from the removed
// occurrence, so validity is preserved and length only shrinks.
inline OrthoPath normalize_path(std::vector<Matrix> verts) {
  for (std::size_t i = 0; i < verts.size(); ++i) {
    for (std::size_t j = verts.size(); j-- > i + 1;) {
      if (verts[j] == verts[i]) {
        verts.erase(verts.begin() + static_cast<std::ptrdiff_t>(i) + 1,
                    verts.begin() + static_cast<std::ptrdiff_t>(j) + 1);
        break;
      }
    }
  }
  OrthoPath p{std::move(verts)};
  p.validate();
  return p;
}

inline void require_vertex(const Matrix& A, const char* op) {
  if (!A.square()) throw Error(std::string(op) + ": matrix not square");
  if (A.is_zero()) throw Error(std::string(op) + ": zero matrix is not a vertex");
  if (!is_zero_divisor_matrix(A))
    throw Error(std::string(op) + ": matrix is not a zero-divisor");
}

inline bool is_scalar(const Matrix& A) {
  return A == scalar_matrix(A.ring(), A.at(0, 0), A.rows());
}

} // namespace detail

/// Path of length <= 2 from a vertex A to some scalar vertex bE with
/// b a nonzero zero-divisor (length 0 if A is itself scalar, 1 if A is
/// directly orthogonal to a scalar vertex).
inline OrthoPath path_to_scalar(const Matrix& A) {
  detail::require_vertex(A, "path_to_scalar");
  const Ring& R = A.ring();
  const std::size_t n = A.rows();
  if (detail::is_scalar(A)) return detail::normalize_path({A});
  for (std::size_t b = 1; b < R.order(); ++b) {
    const Elem eb{static_cast<std::uint32_t>(b)};
    if (!R.is_zero_divisor(eb)) continue;
    const Matrix S = scalar_matrix(R, eb, n);
    if (orthogonal(A, S)) return detail::normalize_path({A, S});
  }
  const OrthogonalFamily fam = common_orthogonal_family({A});
  return detail::normalize_path({A, fam.witnesses.front(), scalar_matrix(R, fam.b, n)});
}

/// Path of length <= 4 between two vertices, mirroring the constructive
/// case split: direct edge; else a pair c1 in Ann(det A1), c2 in
/// Ann(det A2) with c1*c2 = 0 gives length <= 3; else the two annihilator
/// ideals coincide and a common orthogonal family through a scalar vertex
/// gives length <= 4. The (c1, c2) search runs in carrier-index order.
/// Shortest paths are the graph module's business, not this one's.
inline OrthoPath connect(const Matrix& A1, const Matrix& A2) {
  detail::require_vertex(A1, "connect");
  detail::require_vertex(A2, "connect");
  if (!A1.ring().same_ring(A2.ring())) throw Error("connect: ring mismatch");
  if (A1.rows() != A2.rows()) throw Error("connect: size mismatch");
  if (A1 == A2) return detail::normalize_path({A1});
  if (orthogonal(A1, A2)) return detail::normalize_path({A1, A2});
  const Ring& R = A1.ring();
  const Ideal I1 = annihilator(R, determinant(A1));
  const Ideal I2 = annihilator(R, determinant(A2));
  for (Elem c1 : I1.members()) {
    if (c1.index == 0) continue;
    for (Elem c2 : I2.members()) {
      if (c2.index == 0) continue;
      if (R.mul(c1, c2).index != 0) continue;
      const Matrix C1 = orthogonal_witness(A1, c1);
      const Matrix C2 = orthogonal_witness(A2, c2);
      return detail::normalize_path({A1, C1, C2, A2});
    }
  }
  const OrthogonalFamily fam = common_orthogonal_family({A1, A2});
  const Matrix S = scalar_matrix(R, fam.b, A1.rows());
  return detail::normalize_path({A1, fam.witnesses[0], S, fam.witnesses[1], A2});
}

/// The extremal vertex pair (J_n + a*E_{n1}, its transpose); for suitable a
/// this pair realizes the diameter lower bounds.
inline std::pair<Matrix, Matrix> extremal_pair(const Ring& ring, std::size_t n, Elem a) {
  if (n < 2) throw Error("extremal_pair: size must be >= 2");
  if (!ring.contains(a)) throw Error("extremal_pair: element not in ring");
  if (!ring.is_zero_divisor(a)) throw Error("extremal_pair: element is not a zero-divisor");
  Matrix A = jordan_cell(ring, n);
  A.set(n - 1, 0, a);
  return {A, transpose(A)};
}

} // namespace ortho
