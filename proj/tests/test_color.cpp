#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "obi/color.hpp"
#include "oracles.hpp"

using obi::Array3;
using obi::Matrix;

namespace {

Array3 random_array3(int rows, int cols, int depth, std::uint64_t seed) {
  Array3 t(rows, cols, depth);
  for (int q = 0; q < depth; ++q) {
    t.plane(q) = oracle::random_matrix(rows, cols, seed + q);
  }
  return t;
}

// Entrywise sextuple sum, sharing nothing with the mode-product path.
Array3 naive_forward_3d(const Matrix& u, const Matrix& v, const Matrix& w,
                        const Array3& t) {
  Array3 tau(static_cast<int>(u.cols()), static_cast<int>(v.cols()),
             static_cast<int>(w.cols()));
  for (int k = 0; k < u.cols(); ++k) {
    for (int p = 0; p < v.cols(); ++p) {
      for (int s = 0; s < w.cols(); ++s) {
        double sum = 0.0;
        for (int m = 0; m < t.rows(); ++m) {
          for (int n = 0; n < t.cols(); ++n) {
            for (int q = 0; q < t.depth(); ++q) {
              sum += u(m, k) * v(n, p) * w(q, s) * t.at(m, n, q);
            }
          }
        }
        tau.at(k, p, s) = sum;
      }
    }
  }
  return tau;
}

double max_abs_diff3(const Array3& a, const Array3& b) {
  double worst = 0.0;
  for (int q = 0; q < a.depth(); ++q) {
    worst = std::max(worst, oracle::max_abs_diff(a.plane(q), b.plane(q)));
  }
  return worst;
}

}  // namespace

TEST_CASE("3d transform under identities is a no-op") {
  const obi::OrthoMatrix i4 = obi::make_identity(4);
  const obi::OrthoMatrix i3 = obi::make_identity(3);
  const Array3 t = random_array3(4, 4, 3, 10);
  CHECK(max_abs_diff3(obi::forward_3d(i4, i4, i3, t), t) == 0.0);
  CHECK(max_abs_diff3(obi::inverse_3d(i4, i4, i3, t), t) == 0.0);
}

TEST_CASE("3d transform matches the entrywise sum") {
  const obi::OrthoMatrix u = obi::make_dct(4);
  const obi::OrthoMatrix v = obi::make_random_orthogonal(4, 3);
  const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 4);
  const Array3 t = random_array3(4, 4, 3, 20);
  const Array3 tau = obi::forward_3d(u, v, w, t);
  CHECK(max_abs_diff3(tau, naive_forward_3d(u.mat(), v.mat(), w.mat(), t)) <
        1e-12);
}

TEST_CASE("3d round trip and energy preservation") {
  const obi::OrthoMatrix u = obi::make_dct(4);
  const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 7);
  const Array3 t = random_array3(4, 4, 3, 30);
  const Array3 tau = obi::forward_3d(u, u, w, t);
  CHECK(std::abs(obi::energy(tau) - obi::energy(t)) <=
        1e-12 * obi::energy(t));
  CHECK(max_abs_diff3(obi::inverse_3d(u, u, w, tau), t) < 1e-10);
}

TEST_CASE("channel-wise transform with identity mixer equals per-plane 2d") {
  const obi::OrthoMatrix u = obi::make_dct(4);
  const obi::OrthoMatrix v = obi::make_dst(4);
  const obi::OrthoMatrix i3 = obi::make_identity(3);
  const Array3 t = random_array3(4, 4, 3, 40);
  const Array3 tau = obi::forward_3d(u, v, i3, t);
  for (int q = 0; q < 3; ++q) {
    CHECK(oracle::max_abs_diff(tau.plane(q),
                               obi::forward_2d(u, v, t.plane(q))) < 1e-12);
  }
}

TEST_CASE("a single coefficient synthesizes a scaled channel stack") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 9);
  Array3 tau(2, 2, 3);
  tau.at(1, 0, 2) = 1.0;
  const Array3 t = obi::inverse_3d(u, u, w, tau);
  const Matrix a = obi::basis_image(u, 1, 0).pixels;
  for (int q = 0; q < 3; ++q) {
    CHECK(oracle::max_abs_diff(t.plane(q), Matrix(a * w.mat()(q, 2))) < 1e-12);
  }
}

TEST_CASE("3d transform rejects dimension mismatches") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const obi::OrthoMatrix w = obi::make_identity(3);
  const Array3 t = random_array3(4, 4, 3, 50);
  CHECK_THROWS_AS(obi::forward_3d(u, u, w, t), std::invalid_argument);
  CHECK_THROWS_AS(obi::inverse_3d(u, u, w, t), std::invalid_argument);
}

TEST_CASE("color basis image channels scale one grayscale basis image") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const obi::OrthoMatrix i3 = obi::make_identity(3);
  SUBCASE("identity mixer puts everything in one channel") {
    const obi::ColorBasisImage t = obi::color_basis_image(u, i3, 0, 1, 0);
    CHECK(oracle::same_values(t.r, obi::basis_image(u, 0, 1).pixels));
    CHECK(t.g.cwiseAbs().maxCoeff() == 0.0);
    CHECK(t.b.cwiseAbs().maxCoeff() == 0.0);
  }
  SUBCASE("random mixer keeps the stacked norm at one") {
    const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 12);
    for (int s = 0; s < 3; ++s) {
      const obi::ColorBasisImage t = obi::color_basis_image(u, w, 1, 1, s);
      const double norm2 = t.r.squaredNorm() + t.g.squaredNorm() +
                           t.b.squaredNorm();
      CHECK(std::abs(norm2 - 1.0) < 1e-12);
    }
  }
  SUBCASE("each channel is an exact scalar multiple") {
    const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 13);
    const obi::ColorBasisImage t = obi::color_basis_image(u, w, 0, 1, 2);
    const Matrix a = obi::basis_image(u, 0, 1).pixels;
    CHECK(oracle::max_abs_diff(t.r, Matrix(a * w.mat()(0, 2))) < 1e-15);
    CHECK(oracle::max_abs_diff(t.g, Matrix(a * w.mat()(1, 2))) < 1e-15);
    CHECK(oracle::max_abs_diff(t.b, Matrix(a * w.mat()(2, 2))) < 1e-15);
  }
}

TEST_CASE("color basis image rejects non-3x3 mixers and bad channels") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  CHECK_THROWS_AS(obi::color_basis_image(u, obi::make_identity(2), 0, 0, 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(obi::color_basis_image(u, obi::make_identity(3), 0, 0, 3),
                  std::invalid_argument);
}

TEST_CASE("color basis family is orthonormal across all channel stacks") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 21);
  double worst = 0.0;
  for (int k = 0; k < 2; ++k) {
    for (int p = 0; p < 2; ++p) {
      for (int s = 0; s < 3; ++s) {
        const obi::ColorBasisImage a = obi::color_basis_image(u, w, k, p, s);
        for (int m = 0; m < 2; ++m) {
          for (int n = 0; n < 2; ++n) {
            for (int q = 0; q < 3; ++q) {
              const obi::ColorBasisImage b =
                  obi::color_basis_image(u, w, m, n, q);
              const double got = oracle::frobenius_inner(a.r, b.r) +
                                 oracle::frobenius_inner(a.g, b.g) +
                                 oracle::frobenius_inner(a.b, b.b);
              const double want =
                  (k == m && p == n && s == q) ? 1.0 : 0.0;
              worst = std::max(worst, std::abs(got - want));
            }
          }
        }
      }
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("a pure-red constant image decomposes into the red channel slice") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const obi::OrthoMatrix i3 = obi::make_identity(3);
  Array3 t(2, 2, 3);
  t.plane(0) = Matrix::Constant(2, 2, 1.0);  // red only
  const Array3 tau = obi::forward_3d(u, u, i3, t);
  CHECK(tau.plane(1).cwiseAbs().maxCoeff() == 0.0);
  CHECK(tau.plane(2).cwiseAbs().maxCoeff() == 0.0);
  CHECK(tau.plane(0).cwiseAbs().maxCoeff() > 0.5);
}

TEST_CASE("coefficients resynthesize a color image over the basis stacks") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const obi::OrthoMatrix w = obi::make_random_orthogonal(3, 31);
  const Array3 c = random_array3(2, 2, 3, 60);
  const Array3 tau = obi::forward_3d(u, u, w, c);
  Array3 back(2, 2, 3);
  for (int k = 0; k < 2; ++k) {
    for (int p = 0; p < 2; ++p) {
      for (int s = 0; s < 3; ++s) {
        const obi::ColorBasisImage t = obi::color_basis_image(u, w, k, p, s);
        const double coeff = tau.at(k, p, s);
        back.plane(0) += coeff * t.r;
        back.plane(1) += coeff * t.g;
        back.plane(2) += coeff * t.b;
      }
    }
  }
  CHECK(max_abs_diff3(back, c) < 1e-10);
}
