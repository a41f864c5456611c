#include "obi/stego.hpp"

#include <Eigen/SVD>

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace obi {

TensorBlock::TensorBlock(int n, int p) : n_(n), p_(p) {
  if (n <= 0 || p <= 0) {
    throw std::invalid_argument("tensor block dimensions must be positive");
  }
  slices_.assign(static_cast<size_t>(n) * n, Matrix::Zero(p, p));
}

Matrix& TensorBlock::slice(int x, int y) {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw std::invalid_argument("spatial position out of range");
  }
  return slices_[static_cast<size_t>(x) * n_ + y];
}

const Matrix& TensorBlock::slice(int x, int y) const {
  if (x < 0 || x >= n_ || y < 0 || y >= n_) {
    throw std::invalid_argument("spatial position out of range");
  }
  return slices_[static_cast<size_t>(x) * n_ + y];
}

TensorBlock identity_tensor(int n, const Matrix& psi) {
  if (psi.rows() != psi.cols() || psi.rows() < 1) {
    throw std::invalid_argument("payload must be square and nonempty");
  }
  TensorBlock t(n, static_cast<int>(psi.rows()));
  for (int x = 0; x < n; ++x) t.slice(x, x) = psi;
  return t;
}

TensorBlock spatial_mul(const Matrix& a, const TensorBlock& g) {
  if (a.rows() != g.n() || a.cols() != g.n()) {
    throw std::invalid_argument("spatial factor does not match tensor order");
  }
  TensorBlock out(g.n(), g.p());
  for (int x = 0; x < g.n(); ++x) {
    for (int y = 0; y < g.n(); ++y) {
      Matrix acc = Matrix::Zero(g.p(), g.p());
      for (int z = 0; z < g.n(); ++z) {
        acc += a(x, z) * g.slice(z, y);
      }
      out.slice(x, y) = acc;
    }
  }
  return out;
}

std::vector<TensorBlock> mix(const OrthoMatrix& u,
                             const std::vector<Matrix>& psis) {
  const int n = u.n();
  if (static_cast<int>(psis.size()) != n) {
    throw std::invalid_argument("need one payload per transform order");
  }
  const Eigen::Index p = psis.front().rows();
  for (const Matrix& psi : psis) {
    if (psi.rows() != p || psi.cols() != p || p < 1) {
      throw std::invalid_argument("payloads must share a square shape");
    }
  }
  std::vector<TensorBlock> gs;
  gs.reserve(n);
  for (int comp = 0; comp < n; ++comp) {
    TensorBlock g(n, static_cast<int>(p));
    for (int k = 0; k < n; ++k) {
      const Matrix a = basis_image(u, k, comp).pixels;
      for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
          g.slice(x, y) += a(x, y) * psis[k];
        }
      }
    }
    gs.push_back(std::move(g));
  }
  return gs;
}

Matrix extract(const OrthoMatrix& u, const TensorBlock& g_p, int k, int p) {
  if (g_p.n() != u.n()) {
    throw std::invalid_argument("tensor order does not match generator");
  }
  const Matrix a = basis_image(u, k, p).pixels;  // validates k, p
  Matrix psi = Matrix::Zero(g_p.p(), g_p.p());
  for (int x = 0; x < g_p.n(); ++x) {
    for (int y = 0; y < g_p.n(); ++y) {
      psi += a(x, y) * g_p.slice(x, y);
    }
  }
  return psi;
}

namespace {

void require_order2(const OrthoMatrix& u) {
  if (u.n() != 2) {
    throw std::invalid_argument("this scheme requires a 2x2 generator");
  }
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument(std::string(what) + " shapes do not match");
  }
}

}  // namespace

std::pair<Matrix, Matrix> standard_embed(const OrthoMatrix& u,
                                         const Matrix& f1, const Matrix& f2,
                                         const Matrix& g2m) {
  require_order2(u);
  require_same_shape(f1, f2, "carrier");
  require_same_shape(f1, g2m, "carrier/message");
  if (f1.rows() != 2) {
    throw std::invalid_argument("components must have 2 rows to multiply by 2x2 basis images");
  }
  const Matrix a11 = basis_image(u, 0, 0).pixels;
  const Matrix a21 = basis_image(u, 1, 0).pixels;
  const Matrix a22 = basis_image(u, 1, 1).pixels;
  return {a11 * f1 + a21 * g2m, a11 * f2 + a22 * g2m};
}

Matrix standard_detect(const OrthoMatrix& u, const Matrix& f1m,
                       const Matrix& f2m) {
  require_order2(u);
  require_same_shape(f1m, f2m, "component");
  if (f1m.rows() != 2) {
    throw std::invalid_argument("components must have 2 rows to multiply by 2x2 basis images");
  }
  const Matrix a12 = basis_image(u, 0, 1).pixels;
  const Matrix a22 = basis_image(u, 1, 1).pixels;
  return a12 * f1m + a22 * f2m;
}

std::pair<TensorBlock, TensorBlock> embed4(const OrthoMatrix& u,
                                           const Matrix& m1, const Matrix& m2,
                                           const Matrix& m3, const Matrix& m4) {
  require_order2(u);
  require_same_shape(m1, m2, "message");
  require_same_shape(m1, m3, "message");
  require_same_shape(m1, m4, "message");
  if (m1.rows() != m1.cols() || m1.rows() < 1) {
    throw std::invalid_argument("messages must be square and nonempty");
  }
  const int p = static_cast<int>(m1.rows());
  const Matrix a11 = basis_image(u, 0, 0).pixels;
  const Matrix a22 = basis_image(u, 1, 1).pixels;
  TensorBlock f1m(2, p);
  TensorBlock f2m(2, p);
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      f1m.slice(x, y) = a11(x, y) * m1 + a22(x, y) * m3;
      f2m.slice(x, y) = a11(x, y) * m2 + a22(x, y) * m4;
    }
  }
  return {std::move(f1m), std::move(f2m)};
}

std::pair<Matrix, Matrix> detect4(const OrthoMatrix& u, const TensorBlock& fm,
                                  int component) {
  require_order2(u);
  if (component != 1 && component != 2) {
    throw std::invalid_argument("component must be 1 or 2");
  }
  // Both carriers project against the same pair of diagonal basis
  // images; the component only decides which messages come out.
  return {extract(u, fm, 0, 0), extract(u, fm, 1, 1)};
}

double separability_index(const TensorBlock& g) {
  const int n = g.n();
  const int p = g.p();
  Matrix unfolding(n * n, p * p);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const Matrix& s = g.slice(x, y);
      for (int alpha = 0; alpha < p; ++alpha) {
        for (int beta = 0; beta < p; ++beta) {
          unfolding(x * n + y, alpha * p + beta) = s(alpha, beta);
        }
      }
    }
  }
  Eigen::JacobiSVD<Matrix> svd(unfolding);
  const auto& sv = svd.singularValues();
  if (sv.size() < 2 || sv(0) == 0.0) return 0.0;
  return sv(1) / sv(0);
}

Matrix flatten_tensor(const TensorBlock& g) {
  const int n = g.n();
  const int p = g.p();
  Matrix img(n * p, n * p);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      img.block(x * p, y * p, p, p) = g.slice(x, y).array() + 128.0;
    }
  }
  return img;
}

TensorBlock unflatten_tensor(const Matrix& img, int n, int p) {
  if (n <= 0 || p <= 0 || img.rows() != static_cast<Eigen::Index>(n) * p ||
      img.cols() != static_cast<Eigen::Index>(n) * p) {
    throw std::invalid_argument("image size does not match tensor split");
  }
  TensorBlock g(n, p);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      g.slice(x, y) = img.block(x * p, y * p, p, p).array() - 128.0;
    }
  }
  return g;
}

Matrix bits_to_message(const Matrix& bits, double strength) {
  if (!(strength > 0.0)) {
    throw std::invalid_argument("strength must be positive");
  }
  Matrix msg(bits.rows(), bits.cols());
  for (Eigen::Index i = 0; i < bits.rows(); ++i) {
    for (Eigen::Index j = 0; j < bits.cols(); ++j) {
      const double b = bits(i, j);
      if (b != 0.0 && b != 1.0) {
        throw std::invalid_argument("bit matrix entries must be 0 or 1");
      }
      msg(i, j) = b == 1.0 ? strength : -strength;
    }
  }
  return msg;
}

Matrix message_to_bits(const Matrix& msg) {
  Matrix bits(msg.rows(), msg.cols());
  for (Eigen::Index i = 0; i < msg.rows(); ++i) {
    for (Eigen::Index j = 0; j < msg.cols(); ++j) {
      bits(i, j) = msg(i, j) > 0.0 ? 1.0 : 0.0;
    }
  }
  return bits;
}

double bit_error_rate(const Matrix& sent, const Matrix& received) {
  require_same_shape(sent, received, "bit matrix");
  if (sent.size() == 0) {
    throw std::invalid_argument("bit matrices must be nonempty");
  }
  Eigen::Index errors = 0;
  for (Eigen::Index i = 0; i < sent.rows(); ++i) {
    for (Eigen::Index j = 0; j < sent.cols(); ++j) {
      if (sent(i, j) != received(i, j)) ++errors;
    }
  }
  return static_cast<double>(errors) / static_cast<double>(sent.size());
}

StegoKey parse_key(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("bad key config: ") + e.what());
  }
  if (!j.is_object()) {
    throw std::runtime_error("key config must be a JSON object");
  }
  StegoKey key;
  for (const auto& [name, value] : j.items()) {
    if (name == "generator") {
      key.generator = value.get<std::string>();
    } else if (name == "n") {
      key.n = value.get<int>();
    } else if (name == "seed") {
      key.seed = value.get<std::uint64_t>();
    } else if (name == "p") {
      key.p = value.get<int>();
    } else if (name == "strength") {
      key.strength = value.get<double>();
    } else {
      throw std::runtime_error("unknown key config field '" + name + "'");
    }
  }
  if (key.generator != "wht" && key.generator != "dct" &&
      key.generator != "random") {
    throw std::runtime_error("generator must be one of wht, dct, random");
  }
  if (key.n < 2) throw std::runtime_error("n must be at least 2");
  if (key.p < 1) throw std::runtime_error("p must be at least 1");
  if (!(key.strength > 0.0)) throw std::runtime_error("strength must be positive");
  return key;
}

StegoKey load_key(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open key config " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_key(text.str());
}

OrthoMatrix key_generator(const StegoKey& key) {
  if (key.generator == "wht") return make_wht(key.n);
  if (key.generator == "dct") return make_dct(key.n);
  return make_random_orthogonal(key.n, key.seed);
}

}  // namespace obi
