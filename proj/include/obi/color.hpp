#pragma once

// Three-dimensional orthogonal transforms and RGB basis images. An RGB
// image is an M x N x 3 array; transforming it with spatial generators
// U, V and a 3x3 channel mixer W yields coefficients tau(k,p,s). Each
// 3D basis element t_kps stacks three scaled copies of the same
// grayscale basis image a_kp, one per channel.

#include <vector>

#include "obi/basis.hpp"
#include "obi/ortho.hpp"

namespace obi {

// Planar channel-major M x N x Z array: planes[q](m, n) holds entry
// (m, n, q). For RGB images Z = 3 and q = 0,1,2 are red, green, blue.
class Array3 {
 public:
  Array3() = default;
  Array3(int rows, int cols, int depth);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int depth() const { return static_cast<int>(planes_.size()); }

  Matrix& plane(int q) { return planes_.at(q); }
  const Matrix& plane(int q) const { return planes_.at(q); }

  double& at(int m, int n, int q) { return planes_.at(q)(m, n); }
  double at(int m, int n, int q) const { return planes_.at(q)(m, n); }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Matrix> planes_;
};

struct ColorBasisImage {
  int k = 0;  // spatial row-factor index (0-based)
  int p = 0;  // spatial column-factor index (0-based)
  int s = 0;  // channel-transform index (0..2)
  Matrix r;   // a_kp * W(0,s)
  Matrix g;   // a_kp * W(1,s)
  Matrix b;   // a_kp * W(2,s)
};

/// tau(k,p,s) = sum_{m,n,q} U(m,k) V(n,p) W(q,s) T(m,n,q).
Array3 forward_3d(const OrthoMatrix& u, const OrthoMatrix& v,
                  const OrthoMatrix& w, const Array3& t);

/// T = sum_{k,p,s} (u_k (x) v_p (x) w_s) * tau(k,p,s).
Array3 inverse_3d(const OrthoMatrix& u, const OrthoMatrix& v,
                  const OrthoMatrix& w, const Array3& tau);

/// The 3D basis element t_kps: channel q is a_kp scaled by W(q,s).
/// W must be 3x3.
ColorBasisImage color_basis_image(const OrthoMatrix& u, const OrthoMatrix& w,
                                  int k, int p, int s);

/// Total energy (sum of squared entries across all planes).
double energy(const Array3& t);

}  // namespace obi
