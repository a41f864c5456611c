#include "obi/wavelet.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace obi {

namespace {

constexpr double kFilterTol = 1e-12;

// Analysis along the first axis (columns as signals): for each output
// row j, out(j,:) = sum_i filt[i] * f((2j+i) mod n, :).
Matrix analyze_rows(const std::vector<double>& filt, const Matrix& f) {
  const int n = static_cast<int>(f.rows());
  const int half = n / 2;
  Matrix out = Matrix::Zero(half, f.cols());
  for (int j = 0; j < half; ++j) {
    for (int i = 0; i < static_cast<int>(filt.size()); ++i) {
      out.row(j) += filt[i] * f.row((2 * j + i) % n);
    }
  }
  return out;
}

// Transpose scatter of analyze_rows: each coefficient row j adds
// filt[i] back into sample (2j+i) mod n.
Matrix synthesize_rows(const std::vector<double>& filt, const Matrix& c,
                       int n) {
  Matrix out = Matrix::Zero(n, c.cols());
  for (int j = 0; j < static_cast<int>(c.rows()); ++j) {
    for (int i = 0; i < static_cast<int>(filt.size()); ++i) {
      out.row((2 * j + i) % n) += filt[i] * c.row(j);
    }
  }
  return out;
}

void check_even_square(const Matrix& f) {
  if (f.rows() != f.cols()) {
    throw std::invalid_argument("image must be square");
  }
  if (f.rows() < 2 || f.rows() % 2 != 0) {
    throw std::invalid_argument("image size must be even and at least 2");
  }
}

void check_band_index(int k, int p, int half) {
  if (k < 0 || k >= half || p < 0 || p >= half) {
    throw std::invalid_argument("band position out of range");
  }
}

}  // namespace

FilterBank::FilterBank(std::string name, std::vector<double> low)
    : name_(std::move(name)), low_(std::move(low)) {
  const int len = static_cast<int>(low_.size());
  if (len < 2 || len % 2 != 0) {
    throw std::invalid_argument("filter length must be even and at least 2");
  }
  double norm = 0.0;
  for (double c : low_) norm += c * c;
  if (std::abs(norm - 1.0) > kFilterTol) {
    throw std::invalid_argument("low-pass filter is not unit-norm");
  }
  for (int m = 1; 2 * m < len; ++m) {
    double dot = 0.0;
    for (int i = 0; i + 2 * m < len; ++i) dot += low_[i] * low_[i + 2 * m];
    if (std::abs(dot) > kFilterTol) {
      throw std::invalid_argument("low-pass filter shifts are not orthogonal");
    }
  }
  high_.resize(len);
  for (int i = 0; i < len; ++i) {
    high_[i] = (i % 2 == 0 ? 1.0 : -1.0) * low_[len - 1 - i];
  }
}

FilterBank FilterBank::haar() {
  const double r = 1.0 / std::numbers::sqrt2;
  return FilterBank("haar", {r, r});
}

FilterBank FilterBank::db2() {
  return FilterBank("db2", {0.48296291314453414, 0.83651630373780791,
                            0.22414386804201338, -0.12940952255126038});
}

Band band_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Band::A;
  if (s == "H" || s == "h") return Band::H;
  if (s == "V" || s == "v") return Band::V;
  if (s == "D" || s == "d") return Band::D;
  throw std::invalid_argument("unknown band '" + s + "' (expected A, H, V or D)");
}

std::string band_to_string(Band band) {
  switch (band) {
    case Band::A: return "A";
    case Band::H: return "H";
    case Band::V: return "V";
    case Band::D: return "D";
  }
  throw std::invalid_argument("invalid band value");
}

DwtCoeffs dwt2(const FilterBank& fb, const Matrix& f) {
  check_even_square(f);
  const Matrix lo_x = analyze_rows(fb.low(), f);    // low-pass along x
  const Matrix hi_x = analyze_rows(fb.high(), f);   // high-pass along x
  DwtCoeffs g;
  g.cA = analyze_rows(fb.low(), lo_x.transpose()).transpose();
  g.cV = analyze_rows(fb.high(), lo_x.transpose()).transpose();
  g.cH = analyze_rows(fb.low(), hi_x.transpose()).transpose();
  g.cD = analyze_rows(fb.high(), hi_x.transpose()).transpose();
  return g;
}

Matrix idwt2(const FilterBank& fb, const DwtCoeffs& g) {
  const int half = static_cast<int>(g.cA.rows());
  auto square_of = [half](const Matrix& m, const char* name) {
    if (m.rows() != half || m.cols() != half) {
      throw std::invalid_argument(std::string("coefficient block ") + name +
                                  " has mismatched size");
    }
  };
  square_of(g.cA, "cA");
  square_of(g.cH, "cH");
  square_of(g.cV, "cV");
  square_of(g.cD, "cD");
  if (half < 1 || g.cA.rows() != g.cA.cols()) {
    throw std::invalid_argument("coefficient blocks must be square");
  }
  const int n = 2 * half;
  // Undo the column pass first, then the row pass.
  const Matrix lo_x =
      synthesize_rows(fb.low(), g.cA.transpose(), n).transpose() +
      synthesize_rows(fb.high(), g.cV.transpose(), n).transpose();
  const Matrix hi_x =
      synthesize_rows(fb.low(), g.cH.transpose(), n).transpose() +
      synthesize_rows(fb.high(), g.cD.transpose(), n).transpose();
  return synthesize_rows(fb.low(), lo_x, n) + synthesize_rows(fb.high(), hi_x, n);
}

WaveletBasisImage wavelet_basis_image(const FilterBank& fb, Band band,
                                      int k, int p, int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("image size must be even and at least 2");
  }
  const int half = n / 2;
  check_band_index(k, p, half);
  DwtCoeffs g;
  g.cA = Matrix::Zero(half, half);
  g.cH = Matrix::Zero(half, half);
  g.cV = Matrix::Zero(half, half);
  g.cD = Matrix::Zero(half, half);
  switch (band) {
    case Band::A: g.cA(k, p) = 1.0; break;
    case Band::H: g.cH(k, p) = 1.0; break;
    case Band::V: g.cV(k, p) = 1.0; break;
    case Band::D: g.cD(k, p) = 1.0; break;
  }
  WaveletBasisImage e;
  e.band = band;
  e.k = k;
  e.p = p;
  e.pixels = idwt2(fb, g);
  return e;
}

Matrix band_reconstruction(const FilterBank& fb, const DwtCoeffs& g,
                           Band band) {
  const int half = static_cast<int>(g.cA.rows());
  DwtCoeffs only;
  only.cA = Matrix::Zero(half, half);
  only.cH = Matrix::Zero(half, half);
  only.cV = Matrix::Zero(half, half);
  only.cD = Matrix::Zero(half, half);
  switch (band) {
    case Band::A: only.cA = g.cA; break;
    case Band::H: only.cH = g.cH; break;
    case Band::V: only.cV = g.cV; break;
    case Band::D: only.cD = g.cD; break;
  }
  return idwt2(fb, only);
}

DwtCoeffs forward_basis_image(const FilterBank& fb, int x, int y, int n) {
  if (n < 2 || n % 2 != 0) {
    throw std::invalid_argument("image size must be even and at least 2");
  }
  if (x < 0 || x >= n || y < 0 || y >= n) {
    throw std::invalid_argument("pixel position out of range");
  }
  Matrix e = Matrix::Zero(n, n);
  e(x, y) = 1.0;
  return dwt2(fb, e);
}

double energy(const DwtCoeffs& g) {
  return g.cA.squaredNorm() + g.cH.squaredNorm() + g.cV.squaredNorm() +
         g.cD.squaredNorm();
}

}  // namespace obi
