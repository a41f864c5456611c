#pragma once

// Basis images a_kp = u_k (x) u_p and the 2D transform written as a
// decomposition over them. a_kp has pixels a_kp(x,y) = U(x,k)*U(y,p);
// the N^2 of them form an orthonormal basis of N x N matrices.

#include "obi/ortho.hpp"

namespace obi {

struct BasisImage {
  int k = 0;         // column index of the first factor (0-based)
  int p = 0;         // column index of the second factor (0-based)
  Matrix pixels;     // pixels(x,y) = U(x,k)*U(y,p)
  Matrix generator;  // entries of the generating U, for compatibility checks
};

/// a_kp as the outer product of columns k and p of U.
BasisImage basis_image(const OrthoMatrix& u, int k, int p);

/// The unit matrix e_ab: single 1 at (a,b), zero elsewhere.
Matrix unit_matrix(int n, int a, int b);

/// Basis image generated by transforming a unit matrix: U e U^T. Passing
/// the transpose of U yields the dual row-built images instead.
Matrix basis_from_unit(const OrthoMatrix& u, const Matrix& e);

/// G = U^T F V (F is MxN, U is MxM, V is NxN).
Matrix forward_2d(const OrthoMatrix& u, const OrthoMatrix& v, const Matrix& f);

/// F = U G V^T.
Matrix inverse_2d(const OrthoMatrix& u, const OrthoMatrix& v, const Matrix& g);

/// Coefficients G_kp = <F, a_kp> computed by direct Frobenius inner
/// products against each basis image. Deliberately does not reuse
/// forward_2d, so the identity decompose == forward_2d is a real
/// cross-check between the two routes.
Matrix decompose(const OrthoMatrix& u, const Matrix& f);

/// Matrix product of two basis images from the same generator; equals
/// a_kn when p == m and the zero matrix otherwise.
Matrix product(const BasisImage& a, const BasisImage& b);

/// All N^2 basis images tiled into an N^2 x N^2 grid, row-major in (k,p),
/// each tile affinely rescaled to [0,255] (flat tiles map to 128).
Matrix atlas(const OrthoMatrix& u);

}  // namespace obi
