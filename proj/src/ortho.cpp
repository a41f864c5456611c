#include "obi/ortho.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

namespace obi {

namespace {

void require_order(int order, const char* who) {
  if (order < 1) throw std::invalid_argument(std::string(who) + ": order must be positive");
}

}  // namespace

double ortho_deviation(const Matrix& u) {
  const Matrix id = Matrix::Identity(u.rows(), u.cols());
  const double left = (u * u.transpose() - id).cwiseAbs().maxCoeff();
  const double right = (u.transpose() * u - id).cwiseAbs().maxCoeff();
  return std::max(left, right);
}

OrthoMatrix::OrthoMatrix(Matrix u) : u_(std::move(u)) {
  if (u_.rows() < 1 || u_.rows() != u_.cols())
    throw std::invalid_argument("OrthoMatrix: nonempty square matrix required");
  if (!u_.allFinite()) throw std::invalid_argument("OrthoMatrix: entries must be finite");
  if (ortho_deviation(u_) > kOrthoTol)
    throw std::invalid_argument("OrthoMatrix: not orthonormal within 1e-12");
  for (Eigen::Index i = 0; i < u_.rows(); ++i) {
    if (std::abs(u_.row(i).norm() - 1.0) > kOrthoTol || std::abs(u_.col(i).norm() - 1.0) > kOrthoTol)
      throw std::invalid_argument("OrthoMatrix: row/column norms must be 1 within 1e-12");
  }
}

bool OrthoMatrix::same_as(const OrthoMatrix& other) const {
  return u_.rows() == other.u_.rows() &&
         (u_.array() == other.u_.array()).all();
}

OrthoMatrix make_identity(int order) {
  require_order(order, "make_identity");
  return OrthoMatrix(Matrix::Identity(order, order));
}

OrthoMatrix make_wht(int order) {
  if (order < 2 || (order & (order - 1)) != 0)
    throw std::invalid_argument("make_wht: order must be a power of two, at least 2");
  Matrix h = Matrix::Ones(1, 1);
  for (int size = 1; size < order; size *= 2) {
    Matrix next(2 * size, 2 * size);
    next.topLeftCorner(size, size) = h;
    next.topRightCorner(size, size) = h;
    next.bottomLeftCorner(size, size) = h;
    next.bottomRightCorner(size, size) = -h;
    h = std::move(next);
  }
  h *= 1.0 / std::sqrt(static_cast<double>(order));
  return OrthoMatrix(std::move(h));
}

OrthoMatrix make_dct(int order) {
  require_order(order, "make_dct");
  const double n = static_cast<double>(order);
  Matrix u(order, order);
  for (int k = 0; k < order; ++k) {
    const double scale = std::sqrt((k == 0 ? 1.0 : 2.0) / n);
    for (int x = 0; x < order; ++x)
      u(x, k) = scale * std::cos(std::numbers::pi * (2 * x + 1) * k / (2.0 * n));
  }
  return OrthoMatrix(std::move(u));
}

OrthoMatrix make_dst(int order) {
  require_order(order, "make_dst");
  const double n = static_cast<double>(order);
  const double scale = std::sqrt(2.0 / (n + 1.0));
  Matrix u(order, order);
  for (int k = 0; k < order; ++k)
    for (int x = 0; x < order; ++x)
      u(x, k) = scale * std::sin(std::numbers::pi * (k + 1) * (x + 1) / (n + 1.0));
  return OrthoMatrix(std::move(u));
}

OrthoMatrix make_random_orthogonal(int order, std::uint64_t seed) {
  require_order(order, "make_random_orthogonal");
  std::mt19937_64 rng(seed);
  // Uniform [-1,1) straight from the engine bits; avoids distribution
  // implementations that differ between standard libraries.
  auto draw = [&rng] { return 2.0 * ((rng() >> 11) * 0x1.0p-53) - 1.0; };
  Matrix a(order, order);
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) a(i, j) = draw();
  Eigen::HouseholderQR<Matrix> qr(a);
  Matrix q = qr.householderQ();
  for (int j = 0; j < order; ++j) {
    for (int i = 0; i < order; ++i) {
      if (q(i, j) != 0.0) {
        if (q(i, j) < 0.0) q.col(j) = -q.col(j);
        break;
      }
    }
  }
  return OrthoMatrix(std::move(q));
}

Vector forward_1d(const OrthoMatrix& u, const Vector& f) {
  if (f.size() != u.n()) throw std::invalid_argument("forward_1d: length mismatch");
  return u.mat().transpose() * f;
}

Vector inverse_1d(const OrthoMatrix& u, const Vector& g) {
  if (g.size() != u.n()) throw std::invalid_argument("inverse_1d: length mismatch");
  return u.mat() * g;
}

double energy(std::span<const double> xs) {
  double sum = 0.0;
  for (double x : xs) sum += x * x;
  return sum;
}

double energy(const Vector& x) { return energy(std::span<const double>(x.data(), static_cast<size_t>(x.size()))); }

double energy(const Matrix& x) { return energy(std::span<const double>(x.data(), static_cast<size_t>(x.size()))); }

}  // namespace obi
