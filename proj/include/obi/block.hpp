#pragma once

// The block matrix whose entries are basis images. With the transposed
// index order, entry (m,n) = a_(nm), the block product of the matrix
// with itself is the block identity and applying it to block vectors is
// an involution. The direct order, entry (m,n) = a_mn, deliberately
// breaks this: its block square is N times itself.

#include <vector>

#include "obi/basis.hpp"
#include "obi/ortho.hpp"

namespace obi {

// Blocks are generated on demand from the generator; nothing of size
// N^4 is stored unless dense() is called.
class BlockMatrix {
 public:
  // transposed: entry (m,n) = a_(nm) (the involution arrangement)
  // direct:     entry (m,n) = a_mn   (the N*beta counterexample)
  enum class Indexing { transposed, direct };

  BlockMatrix(OrthoMatrix generator, Indexing indexing);

  int n() const { return generator_.n(); }
  Indexing indexing() const { return indexing_; }
  const OrthoMatrix& generator() const { return generator_; }

  /// Block at position (m,n): a_(nm) or a_mn depending on indexing.
  Matrix block(int m, int n) const;

  /// Dense N^2 x N^2 export with entry (m*N+x, n*N+y) = block(m,n)(x,y).
  Matrix dense() const;

  bool same_generator(const BlockMatrix& other) const;

 private:
  OrthoMatrix generator_;
  Indexing indexing_;
};

// Row-major grid of the N x N result blocks of a block product.
using BlockGrid = std::vector<std::vector<Matrix>>;

// Ordered list of N component matrices, each N x Q.
using BlockVector = std::vector<Matrix>;

/// The involution arrangement: entry (m,n) = a_(nm).
BlockMatrix build_b(const OrthoMatrix& u);

/// The direct arrangement: entry (m,n) = a_mn.
BlockMatrix build_beta(const OrthoMatrix& u);

/// Block product: grid (m,n) = sum_k lhs(m,k) * rhs(k,n).
BlockGrid block_mul(const BlockMatrix& lhs, const BlockMatrix& rhs);

/// g_p = sum_k block(p,k) * f_k. For the involution arrangement this is
/// g_p = sum_k a_kp f_k, and applying it twice returns f.
BlockVector block_apply(const BlockMatrix& b, const BlockVector& f);

/// Primitive row (k,x): the concatenation over m of row x of the
/// basis images sitting in block column k; length N^2. These rows form
/// an orthonormal set.
Vector primitive_row(const BlockMatrix& b, int k, int x);

/// Coefficients of f (length N^2, component-major) against the
/// primitive rows: coeffs[k*N+x] = <r_kx, f>.
Vector biorthogonal_coeffs(const BlockMatrix& b, const Vector& f);

/// Resynthesis over block columns: the inverse of biorthogonal_coeffs.
Vector biorthogonal_reconstruct(const BlockMatrix& b, const Vector& coeffs);

}  // namespace obi
