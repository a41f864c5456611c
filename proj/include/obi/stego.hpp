#pragma once

// Non-separable tensor blocks g_p = sum_k a_kp (x) psi_k, the
// single-component extraction <a_kp, g_p> = psi_k, and the
// four-message frequency-domain embedding/detection scheme built on it.
//
// A TensorBlock couples an N x N spatial index pair (x,y) with a
// P x P payload index pair. Binary payloads use antipodal signaling:
// bit 0 -> -strength, bit 1 -> +strength, detected by sign.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "obi/basis.hpp"
#include "obi/ortho.hpp"

namespace obi {

// 4D array indexed (x,y,alpha,beta); stored as N*N payload slices, one
// P x P matrix per spatial position.
class TensorBlock {
 public:
  TensorBlock() = default;
  TensorBlock(int n, int p);  // zero-filled

  int n() const { return n_; }
  int p() const { return p_; }

  Matrix& slice(int x, int y);
  const Matrix& slice(int x, int y) const;

  double at(int x, int y, int alpha, int beta) const {
    return slice(x, y)(alpha, beta);
  }

 private:
  int n_ = 0;
  int p_ = 0;
  std::vector<Matrix> slices_;
};

/// 1 (x) psi: payload on the spatial diagonal, zero elsewhere.
TensorBlock identity_tensor(int n, const Matrix& psi);

/// (a (x) 1) g: left-multiply the spatial part by a, keep payloads.
TensorBlock spatial_mul(const Matrix& a, const TensorBlock& g);

/// g_p = sum_k a_kp (x) psi_k for every p; all psi_k must share shape.
std::vector<TensorBlock> mix(const OrthoMatrix& u,
                             const std::vector<Matrix>& psis);

/// psi_k recovered from the single component g_p via the spatial
/// projection sum_xy a_kp(x,y)*g_p(x,y,.,.). The result does not depend
/// on which p was used.
Matrix extract(const OrthoMatrix& u, const TensorBlock& g_p, int k, int p);

/// Two-component spatial rewrite of a message placed in the second
/// frequency component: f1M = a11*f1 + a21*g2M, f2M = a11*f2 + a22*g2M.
/// Requires a 2x2 generator.
std::pair<Matrix, Matrix> standard_embed(const OrthoMatrix& u,
                                         const Matrix& f1, const Matrix& f2,
                                         const Matrix& g2m);

/// Recovers g2M = a12*f1M + a22*f2M from both modified components.
Matrix standard_detect(const OrthoMatrix& u, const Matrix& f1m,
                       const Matrix& f2m);

/// Four messages in the frequency components of a 2x2 generator:
/// f1M = a11 (x) M1 + a22 (x) M3, f2M = a11 (x) M2 + a22 (x) M4.
std::pair<TensorBlock, TensorBlock> embed4(const OrthoMatrix& u,
                                           const Matrix& m1, const Matrix& m2,
                                           const Matrix& m3, const Matrix& m4);

/// Messages carried by one spatial component: component 1 yields
/// (M1, M3), component 2 yields (M2, M4), via the projections
/// <a11, .> and <a22, .>.
std::pair<Matrix, Matrix> detect4(const OrthoMatrix& u, const TensorBlock& fm,
                                  int component);

/// sigma2/sigma1 of the (xy) x (alpha beta) unfolding: 0 for a single
/// tensor product, near 1 for balanced independent payloads.
double separability_index(const TensorBlock& g);

/// N*P x N*P image of P x P tiles: tile (x,y) holds slice (x,y) plus a
/// mid-gray offset of 128. Values are clipped only at file-write time.
Matrix flatten_tensor(const TensorBlock& g);

/// Inverse of flatten_tensor for a given (n,p) split.
TensorBlock unflatten_tensor(const Matrix& img, int n, int p);

/// Antipodal encoding of a 0/1 bit matrix: 0 -> -strength, 1 -> +strength.
Matrix bits_to_message(const Matrix& bits, double strength);

/// Sign detection: entries > 0 -> 1, else 0.
Matrix message_to_bits(const Matrix& msg);

/// Fraction of positions where two 0/1 matrices differ.
double bit_error_rate(const Matrix& sent, const Matrix& received);

// The parameter set shared by embedder and detector; serialized as a
// small JSON object. Unknown keys are rejected.
struct StegoKey {
  std::string generator = "wht";  // wht | dct | random
  int n = 2;                      // spatial transform order
  std::uint64_t seed = 0;         // used when generator == "random"
  int p = 8;                      // message side length
  double strength = 16.0;         // antipodal amplitude in gray levels
};

StegoKey parse_key(const std::string& json_text);
StegoKey load_key(const std::string& path);
OrthoMatrix key_generator(const StegoKey& key);

}  // namespace obi
