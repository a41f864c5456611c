#include "obi/basis.hpp"

#include <cmath>
#include <stdexcept>

namespace obi {

namespace {

void check_index(const OrthoMatrix& u, int k, const char* name) {
  if (k < 0 || k >= u.n()) {
    throw std::invalid_argument(std::string(name) + " index out of range");
  }
}

}  // namespace

BasisImage basis_image(const OrthoMatrix& u, int k, int p) {
  check_index(u, k, "k");
  check_index(u, p, "p");
  BasisImage a;
  a.k = k;
  a.p = p;
  a.pixels = u.col(k) * u.col(p).transpose();
  a.generator = u.mat();
  return a;
}

Matrix unit_matrix(int n, int a, int b) {
  if (n <= 0) throw std::invalid_argument("unit_matrix order must be positive");
  if (a < 0 || a >= n || b < 0 || b >= n) {
    throw std::invalid_argument("unit_matrix position out of range");
  }
  Matrix e = Matrix::Zero(n, n);
  e(a, b) = 1.0;
  return e;
}

Matrix basis_from_unit(const OrthoMatrix& u, const Matrix& e) {
  if (e.rows() != u.n() || e.cols() != u.n()) {
    throw std::invalid_argument("unit matrix order does not match generator");
  }
  return u.mat() * e * u.mat().transpose();
}

Matrix forward_2d(const OrthoMatrix& u, const OrthoMatrix& v, const Matrix& f) {
  if (f.rows() != u.n() || f.cols() != v.n()) {
    throw std::invalid_argument("image shape does not match transform orders");
  }
  return u.mat().transpose() * f * v.mat();
}

Matrix inverse_2d(const OrthoMatrix& u, const OrthoMatrix& v, const Matrix& g) {
  if (g.rows() != u.n() || g.cols() != v.n()) {
    throw std::invalid_argument("coefficient shape does not match transform orders");
  }
  return u.mat() * g * v.mat().transpose();
}

Matrix decompose(const OrthoMatrix& u, const Matrix& f) {
  const int n = u.n();
  if (f.rows() != n || f.cols() != n) {
    throw std::invalid_argument("image shape does not match transform order");
  }
  Matrix g(n, n);
  for (int k = 0; k < n; ++k) {
    for (int p = 0; p < n; ++p) {
      double s = 0.0;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          s += f(x, y) * u.mat()(x, k) * u.mat()(y, p);
        }
      }
      g(k, p) = s;
    }
  }
  return g;
}

Matrix product(const BasisImage& a, const BasisImage& b) {
  if (a.generator.rows() != b.generator.rows() ||
      !(a.generator.array() == b.generator.array()).all()) {
    throw std::invalid_argument("basis images come from different generators");
  }
  return a.pixels * b.pixels;
}

Matrix atlas(const OrthoMatrix& u) {
  const int n = u.n();
  Matrix img(n * n, n * n);
  for (int k = 0; k < n; ++k) {
    for (int p = 0; p < n; ++p) {
      const Matrix tile = basis_image(u, k, p).pixels;
      const double lo = tile.minCoeff();
      const double hi = tile.maxCoeff();
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          double v = hi > lo ? (tile(x, y) - lo) / (hi - lo) * 255.0 : 128.0;
          img(k * n + x, p * n + y) = v;
        }
      }
    }
  }
  return img;
}

}  // namespace obi
