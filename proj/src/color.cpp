#include "obi/color.hpp"

#include <stdexcept>

namespace obi {

Array3::Array3(int rows, int cols, int depth) : rows_(rows), cols_(cols) {
  if (rows <= 0 || cols <= 0 || depth <= 0) {
    throw std::invalid_argument("Array3 dimensions must be positive");
  }
  planes_.assign(depth, Matrix::Zero(rows, cols));
}

namespace {

void check_dims(const OrthoMatrix& u, const OrthoMatrix& v,
                const OrthoMatrix& w, const Array3& t) {
  if (t.rows() != u.n() || t.cols() != v.n() || t.depth() != w.n()) {
    throw std::invalid_argument("array dimensions do not match transform orders");
  }
}

}  // namespace

Array3 forward_3d(const OrthoMatrix& u, const OrthoMatrix& v,
                  const OrthoMatrix& w, const Array3& t) {
  check_dims(u, v, w, t);
  const int depth = t.depth();
  // Spatial pass per plane, then mix the planes along the third axis.
  std::vector<Matrix> spatial(depth);
  for (int q = 0; q < depth; ++q) {
    spatial[q] = u.mat().transpose() * t.plane(q) * v.mat();
  }
  Array3 tau(u.n(), v.n(), depth);
  for (int s = 0; s < depth; ++s) {
    Matrix acc = Matrix::Zero(u.n(), v.n());
    for (int q = 0; q < depth; ++q) {
      acc += w.mat()(q, s) * spatial[q];
    }
    tau.plane(s) = acc;
  }
  return tau;
}

Array3 inverse_3d(const OrthoMatrix& u, const OrthoMatrix& v,
                  const OrthoMatrix& w, const Array3& tau) {
  check_dims(u, v, w, tau);
  const int depth = tau.depth();
  std::vector<Matrix> spatial(depth);
  for (int s = 0; s < depth; ++s) {
    spatial[s] = u.mat() * tau.plane(s) * v.mat().transpose();
  }
  Array3 t(u.n(), v.n(), depth);
  for (int q = 0; q < depth; ++q) {
    Matrix acc = Matrix::Zero(u.n(), v.n());
    for (int s = 0; s < depth; ++s) {
      acc += w.mat()(q, s) * spatial[s];
    }
    t.plane(q) = acc;
  }
  return t;
}

ColorBasisImage color_basis_image(const OrthoMatrix& u, const OrthoMatrix& w,
                                  int k, int p, int s) {
  if (w.n() != 3) {
    throw std::invalid_argument("channel transform must be 3x3");
  }
  if (s < 0 || s >= 3) {
    throw std::invalid_argument("channel index out of range");
  }
  const Matrix a = basis_image(u, k, p).pixels;
  ColorBasisImage t;
  t.k = k;
  t.p = p;
  t.s = s;
  t.r = a * w.mat()(0, s);
  t.g = a * w.mat()(1, s);
  t.b = a * w.mat()(2, s);
  return t;
}

double energy(const Array3& t) {
  double e = 0.0;
  for (int q = 0; q < t.depth(); ++q) {
    e += t.plane(q).squaredNorm();
  }
  return e;
}

}  // namespace obi
