#pragma once

// Single-level 2D orthogonal wavelet analysis/synthesis with periodic
// boundary extension, plus the wavelet basis images obtained by
// synthesizing a unit coefficient in one band.
//
// Conventions (fixed so results are bit-comparable across tools):
//   - analysis keeps even-phase outputs: out[j] = sum_i filt[i]*f[(2j+i) mod n]
//   - cA: low-pass both axes; cH: high-pass along x, low-pass along y;
//     cV: low-pass along x, high-pass along y; cD: high-pass both axes
//   - indices are 0-based: band positions k,p run over 0..n/2-1

#include <string>
#include <vector>

#include "obi/ortho.hpp"

namespace obi {

// Orthonormal two-channel FIR filter bank. The high-pass is derived
// from the low-pass by the quadrature mirror rule
// high[i] = (-1)^i * low[L-1-i].
class FilterBank {
 public:
  FilterBank(std::string name, std::vector<double> low);

  static FilterBank haar();
  static FilterBank db2();

  const std::string& name() const { return name_; }
  const std::vector<double>& low() const { return low_; }
  const std::vector<double>& high() const { return high_; }

 private:
  std::string name_;
  std::vector<double> low_;
  std::vector<double> high_;
};

struct DwtCoeffs {
  Matrix cA, cH, cV, cD;  // each n/2 x n/2 for an n x n source
};

enum class Band { A, H, V, D };

struct WaveletBasisImage {
  Band band = Band::A;
  int k = 0;      // row position within the band (0-based)
  int p = 0;      // column position within the band (0-based)
  Matrix pixels;  // n x n spatial image
};

Band band_from_string(const std::string& s);
std::string band_to_string(Band band);

/// One analysis level: separable periodic filtering and 2:1 downsampling.
DwtCoeffs dwt2(const FilterBank& fb, const Matrix& f);

/// Perfect-reconstruction synthesis (inverse of dwt2).
Matrix idwt2(const FilterBank& fb, const DwtCoeffs& g);

/// Synthesis of a unit coefficient at (k,p) of the named band: the
/// spatial image that contributes that one coefficient.
WaveletBasisImage wavelet_basis_image(const FilterBank& fb, Band band,
                                      int k, int p, int n);

/// Synthesis with every band except `band` zeroed. The four band
/// reconstructions sum to idwt2(g).
Matrix band_reconstruction(const FilterBank& fb, const DwtCoeffs& g, Band band);

/// Analysis of the spatial unit matrix e_xy: the block-structured
/// coefficient picture of one pixel.
DwtCoeffs forward_basis_image(const FilterBank& fb, int x, int y, int n);

double energy(const DwtCoeffs& g);

}  // namespace obi
