#pragma once

// File formats used by the CLI and tests. Everything is plain text or
// netpbm binary so outputs stay byte-comparable across runs and tools.

#include <Eigen/Dense>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace obi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

}  // namespace obi

namespace obi::io {

/// Clip to [0,255] and round half away from zero. The only place a real
/// value becomes a pixel byte.
std::uint8_t quantize_byte(double v);

// MTX1: first line "MTX1 <rows> <cols>", then one line per row of
// space-separated decimals printed with 17 significant digits, which
// round-trips IEEE doubles losslessly.
void write_mtx(std::ostream& out, const Matrix& m);
void write_mtx(const std::string& path, const Matrix& m);
Matrix read_mtx(std::istream& in);
Matrix read_mtx(const std::string& path);

// Binary PGM, magic "P5", maxval 255. Values are quantized on write;
// reads return doubles in [0,255].
void write_pgm(std::ostream& out, const Matrix& m);
void write_pgm(const std::string& path, const Matrix& m);
Matrix read_pgm(std::istream& in);
Matrix read_pgm(const std::string& path);

// Binary PPM, magic "P6", maxval 255. Channels are planar in memory,
// interleaved in the file.
struct RgbImage {
  Matrix r, g, b;
};
void write_ppm(std::ostream& out, const Matrix& r, const Matrix& g, const Matrix& b);
void write_ppm(const std::string& path, const Matrix& r, const Matrix& g, const Matrix& b);
RgbImage read_ppm(std::istream& in);
RgbImage read_ppm(const std::string& path);

// Text bitmap: one line per row of '0'/'1' characters. Used for message
// payloads.
void write_bits(std::ostream& out, const Matrix& bits);
void write_bits(const std::string& path, const Matrix& bits);
Matrix read_bits(std::istream& in);
Matrix read_bits(const std::string& path);

}  // namespace obi::io
