#pragma once

// Orthogonal matrices and 1D transforms. Every basis in this library is
// generated from an OrthoMatrix, so the constructor is the single place
// where orthonormality is enforced.
//
// Convention used throughout: the columns u_k of U are the basis vectors.
// The forward transform g = U^T f takes inner products against columns;
// the inverse f = U g resynthesizes from them. Indices are 0-based.

#include <Eigen/Dense>

#include <cstdint>
#include <span>

#include "obi/io.hpp"  // Matrix/Vector aliases

namespace obi {

/// Max per-entry deviation allowed in U·U^T = U^T·U = I.
inline constexpr double kOrthoTol = 1e-12;

class OrthoMatrix {
 public:
  /// Validates orthonormality (both products and unit row/column norms)
  /// within kOrthoTol; throws std::invalid_argument otherwise.
  explicit OrthoMatrix(Matrix u);

  int n() const { return static_cast<int>(u_.rows()); }
  const Matrix& mat() const { return u_; }
  Vector col(int k) const { return u_.col(k); }

  /// Entry-for-entry equality; used to reject mixing objects built from
  /// different generators.
  bool same_as(const OrthoMatrix& other) const;

 private:
  Matrix u_;
};

/// Worst deviation of u from orthonormality over both identity products.
double ortho_deviation(const Matrix& u);

OrthoMatrix make_identity(int order);

/// Normalized Walsh-Hadamard matrix by Sylvester recursion; order must be
/// a power of two, at least 2.
OrthoMatrix make_wht(int order);

/// Orthonormal DCT-II basis in the columns: column 0 is 1/sqrt(N), column
/// k entry n is sqrt(2/N)*cos(pi*(2n+1)*k/2N).
OrthoMatrix make_dct(int order);

/// Orthonormal DST basis, entry (k,n) = sqrt(2/(N+1))*sin(pi*(k+1)*(n+1)/(N+1)).
/// The matrix is symmetric, so rows and columns carry the same basis.
OrthoMatrix make_dst(int order);

/// Deterministic random orthogonal matrix: a seeded uniform [-1,1) matrix
/// is orthonormalized and each column is flipped so its first nonzero
/// entry is positive. Same seed, same matrix.
OrthoMatrix make_random_orthogonal(int order, std::uint64_t seed);

/// g = U^T f.
Vector forward_1d(const OrthoMatrix& u, const Vector& f);
/// f = U g.
Vector inverse_1d(const OrthoMatrix& u, const Vector& g);

/// Sum of squared components.
double energy(std::span<const double> xs);
double energy(const Vector& x);
double energy(const Matrix& x);

}  // namespace obi
