#include "obi/block.hpp"

#include <stdexcept>
#include <utility>

namespace obi {

BlockMatrix::BlockMatrix(OrthoMatrix generator, Indexing indexing)
    : generator_(std::move(generator)), indexing_(indexing) {}

Matrix BlockMatrix::block(int m, int n) const {
  if (m < 0 || m >= this->n() || n < 0 || n >= this->n()) {
    throw std::invalid_argument("block position out of range");
  }
  return indexing_ == Indexing::transposed
             ? basis_image(generator_, n, m).pixels
             : basis_image(generator_, m, n).pixels;
}

Matrix BlockMatrix::dense() const {
  const int order = n();
  Matrix d(order * order, order * order);
  for (int m = 0; m < order; ++m) {
    for (int nn = 0; nn < order; ++nn) {
      d.block(m * order, nn * order, order, order) = block(m, nn);
    }
  }
  return d;
}

bool BlockMatrix::same_generator(const BlockMatrix& other) const {
  return generator_.same_as(other.generator_);
}

BlockMatrix build_b(const OrthoMatrix& u) {
  return BlockMatrix(u, BlockMatrix::Indexing::transposed);
}

BlockMatrix build_beta(const OrthoMatrix& u) {
  return BlockMatrix(u, BlockMatrix::Indexing::direct);
}

BlockGrid block_mul(const BlockMatrix& lhs, const BlockMatrix& rhs) {
  if (!lhs.same_generator(rhs)) {
    throw std::invalid_argument("block matrices come from different generators");
  }
  const int order = lhs.n();
  BlockGrid grid(order, std::vector<Matrix>(order));
  for (int m = 0; m < order; ++m) {
    for (int n = 0; n < order; ++n) {
      Matrix acc = Matrix::Zero(order, order);
      for (int k = 0; k < order; ++k) {
        acc += lhs.block(m, k) * rhs.block(k, n);
      }
      grid[m][n] = std::move(acc);
    }
  }
  return grid;
}

BlockVector block_apply(const BlockMatrix& b, const BlockVector& f) {
  const int order = b.n();
  if (static_cast<int>(f.size()) != order) {
    throw std::invalid_argument("block vector length does not match order");
  }
  const Eigen::Index q = f.front().cols();
  for (const Matrix& comp : f) {
    if (comp.rows() != order || comp.cols() != q || q < 1) {
      throw std::invalid_argument("block vector components must share shape NxQ");
    }
  }
  BlockVector g(order);
  for (int p = 0; p < order; ++p) {
    Matrix acc = Matrix::Zero(order, q);
    for (int k = 0; k < order; ++k) {
      acc += b.block(p, k) * f[k];
    }
    g[p] = std::move(acc);
  }
  return g;
}

Vector primitive_row(const BlockMatrix& b, int k, int x) {
  const int order = b.n();
  if (k < 0 || k >= order || x < 0 || x >= order) {
    throw std::invalid_argument("primitive row position out of range");
  }
  Vector r(order * order);
  for (int n = 0; n < order; ++n) {
    r.segment(n * order, order) = b.block(k, n).row(x).transpose();
  }
  return r;
}

Vector biorthogonal_coeffs(const BlockMatrix& b, const Vector& f) {
  const int order = b.n();
  if (f.size() != static_cast<Eigen::Index>(order) * order) {
    throw std::invalid_argument("vector length must be N*N");
  }
  Vector coeffs(order * order);
  for (int k = 0; k < order; ++k) {
    for (int x = 0; x < order; ++x) {
      coeffs[k * order + x] = primitive_row(b, k, x).dot(f);
    }
  }
  return coeffs;
}

Vector biorthogonal_reconstruct(const BlockMatrix& b, const Vector& coeffs) {
  const int order = b.n();
  if (coeffs.size() != static_cast<Eigen::Index>(order) * order) {
    throw std::invalid_argument("coefficient length must be N*N");
  }
  Vector f = Vector::Zero(order * order);
  for (int m = 0; m < order; ++m) {
    for (int k = 0; k < order; ++k) {
      f.segment(m * order, order) +=
          b.block(m, k) * coeffs.segment(k * order, order);
    }
  }
  return f;
}

}  // namespace obi
