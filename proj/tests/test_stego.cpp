#include <doctest.h>

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "obi/io.hpp"
#include "obi/stego.hpp"
#include "oracles.hpp"

using obi::Matrix;
using obi::TensorBlock;

namespace {

double tensor_diff(const TensorBlock& a, const TensorBlock& b) {
  double worst = 0.0;
  for (int x = 0; x < a.n(); ++x) {
    for (int y = 0; y < a.n(); ++y) {
      worst = std::max(worst, oracle::max_abs_diff(a.slice(x, y), b.slice(x, y)));
    }
  }
  return worst;
}

double tensor_max(const TensorBlock& a) {
  double worst = 0.0;
  for (int x = 0; x < a.n(); ++x) {
    for (int y = 0; y < a.n(); ++y) {
      worst = std::max(worst, a.slice(x, y).cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

Matrix random_bits(int p, std::uint64_t seed) {
  oracle::Rng rng(seed);
  Matrix bits(p, p);
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) bits(i, j) = rng.uniform() < 0.0 ? 0.0 : 1.0;
  }
  return bits;
}

}  // namespace

TEST_CASE("mixing a single payload stays a plain tensor product") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const Matrix psi = oracle::random_matrix(3, 3, 1);
  const std::vector<TensorBlock> gs =
      obi::mix(u, {psi, Matrix(Matrix::Zero(3, 3))});
  for (int p = 0; p < 2; ++p) {
    const Matrix a = obi::basis_image(u, 0, p).pixels;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        CHECK(oracle::max_abs_diff(gs[p].slice(x, y), Matrix(a(x, y) * psi)) <
              1e-15);
      }
    }
    CHECK(obi::separability_index(gs[p]) < 1e-12);
  }
}

TEST_CASE("mixing two unit payloads writes each basis image on its diagonal") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const Matrix psi1 = obi::unit_matrix(2, 0, 0);
  const Matrix psi2 = obi::unit_matrix(2, 1, 1);
  const std::vector<TensorBlock> gs = obi::mix(u, {psi1, psi2});
  const Matrix a00 = obi::basis_image(u, 0, 0).pixels;
  const Matrix a10 = obi::basis_image(u, 1, 0).pixels;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      CHECK(gs[0].at(x, y, 0, 0) == a00(x, y));
      CHECK(gs[0].at(x, y, 1, 1) == a10(x, y));
      CHECK(gs[0].at(x, y, 0, 1) == 0.0);
      CHECK(gs[0].at(x, y, 1, 0) == 0.0);
    }
  }
}

TEST_CASE("the inverse block relation recovers every diagonal payload") {
  const obi::OrthoMatrix u = obi::make_random_orthogonal(3, 5);
  std::vector<Matrix> psis;
  for (int k = 0; k < 3; ++k) psis.push_back(oracle::random_matrix(4, 4, 70 + k));
  const std::vector<TensorBlock> gs = obi::mix(u, psis);
  for (int k = 0; k < 3; ++k) {
    TensorBlock sum(3, 4);
    for (int p = 0; p < 3; ++p) {
      const TensorBlock term =
          obi::spatial_mul(obi::basis_image(u, p, k).pixels, gs[p]);
      for (int x = 0; x < 3; ++x) {
        for (int y = 0; y < 3; ++y) sum.slice(x, y) += term.slice(x, y);
      }
    }
    CHECK(tensor_diff(sum, obi::identity_tensor(3, psis[k])) < 1e-12);
  }
}

TEST_CASE("mix rejects mismatched payload lists") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  CHECK_THROWS_AS(obi::mix(u, {Matrix(Matrix::Zero(3, 3))}),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      obi::mix(u, {Matrix(Matrix::Zero(3, 3)), Matrix(Matrix::Zero(2, 2))}),
      std::invalid_argument);
}

TEST_CASE("extraction returns the same payload from every component") {
  const obi::OrthoMatrix u = obi::make_dct(4);
  std::vector<Matrix> psis;
  for (int k = 0; k < 4; ++k) psis.push_back(oracle::random_matrix(8, 8, 80 + k));
  const std::vector<TensorBlock> gs = obi::mix(u, psis);
  for (int k = 0; k < 4; ++k) {
    const Matrix from_first = obi::extract(u, gs[0], k, 0);
    for (int p = 0; p < 4; ++p) {
      const Matrix psi = obi::extract(u, gs[p], k, p);
      CHECK(oracle::max_abs_diff(psi, psis[k]) < 1e-12);
      CHECK(oracle::max_abs_diff(psi, from_first) < 1e-12);
    }
  }
}

TEST_CASE("extracting an absent payload gives zero") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const std::vector<TensorBlock> gs =
      obi::mix(u, {oracle::random_matrix(4, 4, 2), Matrix(Matrix::Zero(4, 4))});
  CHECK(obi::extract(u, gs[1], 1, 1).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("extract validates indices and shapes") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const TensorBlock g(2, 4);
  CHECK_THROWS_AS(obi::extract(u, g, 2, 0), std::invalid_argument);
  const TensorBlock wrong(3, 4);
  CHECK_THROWS_AS(obi::extract(u, wrong, 0, 0), std::invalid_argument);
}

TEST_CASE("two-component rewrite without a message keeps only the carrier part") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const Matrix f1 = oracle::random_matrix(2, 2, 3);
  const Matrix f2 = oracle::random_matrix(2, 2, 4);
  const Matrix zero = Matrix::Zero(2, 2);
  const auto [f1m, f2m] = obi::standard_embed(u, f1, f2, zero);
  const Matrix a11 = obi::basis_image(u, 0, 0).pixels;
  CHECK(oracle::max_abs_diff(f1m, Matrix(a11 * f1)) < 1e-15);
  CHECK(oracle::max_abs_diff(f2m, Matrix(a11 * f2)) < 1e-15);
}

TEST_CASE("two-component rewrite against hand products at order 2") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const Matrix e = Matrix::Identity(2, 2);
  const auto [f1m, f2m] = obi::standard_embed(u, e, e, e);
  const Matrix a11 = obi::basis_image(u, 0, 0).pixels;
  const Matrix a21 = obi::basis_image(u, 1, 0).pixels;
  const Matrix a22 = obi::basis_image(u, 1, 1).pixels;
  CHECK(oracle::max_abs_diff(f1m, Matrix(a11 + a21)) < 1e-15);
  CHECK(oracle::max_abs_diff(f2m, Matrix(a11 + a22)) < 1e-15);
}

TEST_CASE("two-component detection recovers the embedded frequency item") {
  for (std::uint64_t seed : {10, 11, 12}) {
    const obi::OrthoMatrix u = obi::make_random_orthogonal(2, seed);
    const Matrix f1 = oracle::random_matrix(2, 3, seed + 50);
    const Matrix f2 = oracle::random_matrix(2, 3, seed + 60);
    const Matrix g2m = oracle::random_matrix(2, 3, seed + 70);
    const auto [f1m, f2m] = obi::standard_embed(u, f1, f2, g2m);
    CHECK(oracle::max_abs_diff(obi::standard_detect(u, f1m, f2m), g2m) <
          1e-12);
  }
}

TEST_CASE("two-component scheme rejects bad shapes") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const Matrix ok = Matrix::Zero(2, 2);
  const Matrix bad = Matrix::Zero(3, 3);
  CHECK_THROWS_AS(obi::standard_embed(u, ok, ok, bad), std::invalid_argument);
  CHECK_THROWS_AS(obi::standard_embed(u, bad, bad, bad), std::invalid_argument);
  CHECK_THROWS_AS(obi::standard_detect(u, ok, bad), std::invalid_argument);
  CHECK_THROWS_AS(obi::standard_embed(obi::make_wht(4), ok, ok, ok),
                  std::invalid_argument);
}

TEST_CASE("four-message embedding produces the displayed tensor sums") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  SUBCASE("all-zero messages give zero carriers") {
    const Matrix z = Matrix::Zero(4, 4);
    const auto [f1m, f2m] = obi::embed4(u, z, z, z, z);
    CHECK(tensor_max(f1m) == 0.0);
    CHECK(tensor_max(f2m) == 0.0);
  }
  SUBCASE("a single message lands in the first carrier only") {
    const Matrix m1 = obi::unit_matrix(4, 0, 0);
    const Matrix z = Matrix::Zero(4, 4);
    const auto [f1m, f2m] = obi::embed4(u, m1, z, z, z);
    const Matrix a11 = obi::basis_image(u, 0, 0).pixels;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        CHECK(oracle::max_abs_diff(f1m.slice(x, y), Matrix(a11(x, y) * m1)) <
              1e-15);
      }
    }
    CHECK(tensor_max(f2m) == 0.0);
  }
  SUBCASE("term-by-term structure of both carriers") {
    const Matrix m1 = oracle::random_matrix(3, 3, 90);
    const Matrix m2 = oracle::random_matrix(3, 3, 91);
    const Matrix m3 = oracle::random_matrix(3, 3, 92);
    const Matrix m4 = oracle::random_matrix(3, 3, 93);
    const auto [f1m, f2m] = obi::embed4(u, m1, m2, m3, m4);
    const Matrix a11 = obi::basis_image(u, 0, 0).pixels;
    const Matrix a22 = obi::basis_image(u, 1, 1).pixels;
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        CHECK(oracle::max_abs_diff(
                  f1m.slice(x, y), Matrix(a11(x, y) * m1 + a22(x, y) * m3)) <
              1e-15);
        CHECK(oracle::max_abs_diff(
                  f2m.slice(x, y), Matrix(a11(x, y) * m2 + a22(x, y) * m4)) <
              1e-15);
      }
    }
  }
}

TEST_CASE("four-message detection recovers all messages exactly") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const Matrix m1 = oracle::random_matrix(8, 8, 101);
  const Matrix m2 = oracle::random_matrix(8, 8, 102);
  const Matrix m3 = oracle::random_matrix(8, 8, 103);
  const Matrix m4 = oracle::random_matrix(8, 8, 104);
  const auto [f1m, f2m] = obi::embed4(u, m1, m2, m3, m4);
  const auto [got1, got3] = obi::detect4(u, f1m, 1);
  const auto [got2, got4] = obi::detect4(u, f2m, 2);
  CHECK(oracle::max_abs_diff(got1, m1) < 1e-12);
  CHECK(oracle::max_abs_diff(got2, m2) < 1e-12);
  CHECK(oracle::max_abs_diff(got3, m3) < 1e-12);
  CHECK(oracle::max_abs_diff(got4, m4) < 1e-12);
}

TEST_CASE("detection of a zero carrier yields zero messages") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const auto [a, b] = obi::detect4(u, TensorBlock(2, 4), 1);
  CHECK(a.cwiseAbs().maxCoeff() == 0.0);
  CHECK(b.cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("no crosstalk between the two messages of one carrier") {
  const obi::OrthoMatrix u = obi::make_random_orthogonal(2, 33);
  const Matrix m1 = oracle::random_matrix(8, 8, 110);
  const Matrix z = Matrix::Zero(8, 8);
  const auto [f1m, f2m] = obi::embed4(u, m1, z, z, z);
  const auto [got1, got3] = obi::detect4(u, f1m, 1);
  CHECK(oracle::max_abs_diff(got1, m1) < 1e-12);
  CHECK(got3.cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("detect4 validates the component number") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  CHECK_THROWS_AS(obi::detect4(u, TensorBlock(2, 4), 0), std::invalid_argument);
  CHECK_THROWS_AS(obi::detect4(u, TensorBlock(2, 4), 3), std::invalid_argument);
}

TEST_CASE("separability index separates the three regimes") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  SUBCASE("single product is separable") {
    const std::vector<TensorBlock> gs =
        obi::mix(u, {oracle::random_matrix(4, 4, 8), Matrix(Matrix::Zero(4, 4))});
    CHECK(obi::separability_index(gs[0]) < 1e-12);
  }
  SUBCASE("orthogonal equal-norm payloads are maximally entangled") {
    const std::vector<TensorBlock> gs =
        obi::mix(u, {obi::unit_matrix(2, 0, 0), obi::unit_matrix(2, 1, 1)});
    CHECK(obi::separability_index(gs[0]) == doctest::Approx(1.0).epsilon(1e-12));
  }
  SUBCASE("independent random payloads with equal norms stay above one half") {
    Matrix psi1 = oracle::random_matrix(8, 8, 9);
    Matrix psi2 = oracle::random_matrix(8, 8, 10);
    psi1 /= psi1.norm();
    psi2 /= psi2.norm();
    const std::vector<TensorBlock> gs = obi::mix(u, {psi1, psi2});
    CHECK(obi::separability_index(gs[0]) > 0.5);
    CHECK(obi::separability_index(gs[1]) > 0.5);
  }
  SUBCASE("zero tensor reports zero") {
    CHECK(obi::separability_index(TensorBlock(2, 3)) == 0.0);
  }
}

TEST_CASE("flattening writes payload tiles around mid-gray") {
  TensorBlock g(2, 2);
  g.slice(0, 0)(0, 1) = 7.0;
  g.slice(1, 0)(1, 1) = -5.0;
  const Matrix img = obi::flatten_tensor(g);
  REQUIRE(img.rows() == 4);
  REQUIRE(img.cols() == 4);
  CHECK(img(0, 1) == 135.0);  // tile (0,0), payload (0,1)
  CHECK(img(3, 1) == 123.0);  // tile (1,0), payload (1,1)
  CHECK(img(0, 0) == 128.0);
  const TensorBlock back = obi::unflatten_tensor(img, 2, 2);
  CHECK(tensor_diff(back, g) == 0.0);
}

TEST_CASE("unflattening validates the split") {
  CHECK_THROWS_AS(obi::unflatten_tensor(Matrix(Matrix::Zero(4, 4)), 2, 3),
                  std::invalid_argument);
}

TEST_CASE("antipodal bit coding and its inverse") {
  Matrix bits(2, 2);
  bits << 1, 0, 0, 1;
  const Matrix msg = obi::bits_to_message(bits, 16.0);
  CHECK(msg(0, 0) == 16.0);
  CHECK(msg(0, 1) == -16.0);
  CHECK(oracle::same_values(obi::message_to_bits(msg), bits));
  Matrix bad(1, 1);
  bad << 0.5;
  CHECK_THROWS_AS(obi::bits_to_message(bad, 16.0), std::invalid_argument);
  CHECK_THROWS_AS(obi::bits_to_message(bits, 0.0), std::invalid_argument);
}

TEST_CASE("bit error rate counts disagreements") {
  Matrix a(2, 2);
  a << 1, 0, 1, 0;
  Matrix b(2, 2);
  b << 1, 1, 1, 1;
  CHECK(obi::bit_error_rate(a, a) == 0.0);
  CHECK(obi::bit_error_rate(a, b) == 0.5);
  CHECK_THROWS_AS(obi::bit_error_rate(a, Matrix(Matrix::Zero(2, 3))),
                  std::invalid_argument);
}

TEST_CASE("binary payloads survive 8-bit quantization at strength 16") {
  const obi::OrthoMatrix u = obi::make_wht(2);
  const double strength = 16.0;
  const Matrix b1 = random_bits(8, 120);
  const Matrix b2 = random_bits(8, 121);
  const Matrix b3 = random_bits(8, 122);
  const Matrix b4 = random_bits(8, 123);
  const auto [f1m, f2m] = obi::embed4(u, obi::bits_to_message(b1, strength),
                                      obi::bits_to_message(b2, strength),
                                      obi::bits_to_message(b3, strength),
                                      obi::bits_to_message(b4, strength));
  // simulate the image channel: flatten, write as 8-bit pixels, read back
  std::stringstream file;
  obi::io::write_pgm(file, obi::flatten_tensor(f1m));
  const TensorBlock degraded =
      obi::unflatten_tensor(obi::io::read_pgm(file), 2, 8);
  const auto [got1, got3] = obi::detect4(u, degraded, 1);
  CHECK(obi::bit_error_rate(b1, obi::message_to_bits(got1)) == 0.0);
  CHECK(obi::bit_error_rate(b3, obi::message_to_bits(got3)) == 0.0);
}

TEST_CASE("key configs parse with defaults and reject junk") {
  SUBCASE("full object") {
    const obi::StegoKey k = obi::parse_key(
        R"({"generator":"random","n":4,"seed":9,"p":16,"strength":8.5})");
    CHECK(k.generator == "random");
    CHECK(k.n == 4);
    CHECK(k.seed == 9);
    CHECK(k.p == 16);
    CHECK(k.strength == 8.5);
  }
  SUBCASE("missing fields fall back to defaults") {
    const obi::StegoKey k = obi::parse_key(R"({"generator":"dct"})");
    CHECK(k.generator == "dct");
    CHECK(k.n == 2);
    CHECK(k.p == 8);
    CHECK(k.strength == 16.0);
  }
  SUBCASE("unknown keys are rejected") {
    CHECK_THROWS_WITH_AS(obi::parse_key(R"({"generator":"wht","power":3})"),
                         doctest::Contains("power"), std::runtime_error);
  }
  SUBCASE("bad values are rejected") {
    CHECK_THROWS_AS(obi::parse_key(R"({"generator":"fft"})"),
                    std::runtime_error);
    CHECK_THROWS_AS(obi::parse_key(R"({"n":1})"), std::runtime_error);
    CHECK_THROWS_AS(obi::parse_key(R"({"p":0})"), std::runtime_error);
    CHECK_THROWS_AS(obi::parse_key(R"({"strength":-2})"), std::runtime_error);
    CHECK_THROWS_AS(obi::parse_key("[1,2]"), std::runtime_error);
    CHECK_THROWS_AS(obi::parse_key("{nope"), std::runtime_error);
  }
}

TEST_CASE("key configs pick deterministic generators") {
  obi::StegoKey k;
  k.generator = "random";
  k.n = 4;
  k.seed = 77;
  const obi::OrthoMatrix a = obi::key_generator(k);
  const obi::OrthoMatrix b = obi::key_generator(k);
  CHECK(a.same_as(b));
  k.generator = "wht";
  k.n = 2;
  CHECK(obi::key_generator(k).same_as(obi::make_wht(2)));
}
