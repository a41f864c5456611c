#include "obi/io.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace obi::io {

namespace {

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
  std::ifstream f(path, mode);
  if (!f) throw std::runtime_error("cannot open for reading: " + path);
  return f;
}

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream f(path, mode);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  return f;
}

void format_double(std::string& buf, double v) {
  char tmp[40];
  std::snprintf(tmp, sizeof tmp, "%.17g", v);
  buf += tmp;
}

// netpbm header token: skips whitespace and '#' comments.
std::string pnm_token(std::istream& in) {
  int c = in.get();
  while (c != EOF && (std::isspace(c) || c == '#')) {
    if (c == '#') {
      while (c != EOF && c != '\n') c = in.get();
    }
    c = in.get();
  }
  std::string tok;
  while (c != EOF && !std::isspace(c)) {
    tok.push_back(static_cast<char>(c));
    c = in.get();
  }
  if (tok.empty()) throw std::runtime_error("truncated netpbm header");
  return tok;
}

int pnm_int(std::istream& in) {
  const std::string tok = pnm_token(in);
  try {
    return std::stoi(tok);
  } catch (const std::exception&) {
    throw std::runtime_error("bad netpbm header field: " + tok);
  }
}

// Parses "P5"/"P6" header, returns (rows, cols); leaves the stream at the
// first pixel byte.
std::pair<int, int> pnm_header(std::istream& in, const char* magic) {
  if (pnm_token(in) != magic) throw std::runtime_error(std::string("expected magic ") + magic);
  const int cols = pnm_int(in);
  const int rows = pnm_int(in);
  const int maxval = pnm_int(in);
  if (cols < 1 || rows < 1) throw std::runtime_error("bad netpbm dimensions");
  if (maxval != 255) throw std::runtime_error("unsupported netpbm maxval (want 255)");
  return {rows, cols};
}

}  // namespace

std::uint8_t quantize_byte(double v) {
  const long r = std::lround(v);  // half away from zero
  if (r < 0) return 0;
  if (r > 255) return 255;
  return static_cast<std::uint8_t>(r);
}

void write_mtx(std::ostream& out, const Matrix& m) {
  std::string buf = "MTX1 " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) buf.push_back(' ');
      format_double(buf, m(i, j));
    }
    buf.push_back('\n');
  }
  out << buf;
  if (!out) throw std::runtime_error("MTX1 write failed");
}

void write_mtx(const std::string& path, const Matrix& m) {
  auto f = open_out(path);
  write_mtx(f, m);
}

Matrix read_mtx(std::istream& in) {
  std::string magic;
  long rows = 0, cols = 0;
  in >> magic >> rows >> cols;
  if (!in || magic != "MTX1") throw std::runtime_error("not an MTX1 stream");
  if (rows < 1 || cols < 1) throw std::runtime_error("bad MTX1 dimensions");
  Matrix m(rows, cols);
  for (long i = 0; i < rows; ++i)
    for (long j = 0; j < cols; ++j)
      if (!(in >> m(i, j))) throw std::runtime_error("truncated MTX1 data");
  return m;
}

Matrix read_mtx(const std::string& path) {
  auto f = open_in(path);
  return read_mtx(f);
}

void write_pgm(std::ostream& out, const Matrix& m) {
  out << "P5\n" << m.cols() << " " << m.rows() << "\n255\n";
  std::vector<char> row(static_cast<size_t>(m.cols()));
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row[static_cast<size_t>(j)] = static_cast<char>(quantize_byte(m(i, j)));
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw std::runtime_error("PGM write failed");
}

void write_pgm(const std::string& path, const Matrix& m) {
  auto f = open_out(path, std::ios::out | std::ios::binary);
  write_pgm(f, m);
}

Matrix read_pgm(std::istream& in) {
  const auto [rows, cols] = pnm_header(in, "P5");
  Matrix m(rows, cols);
  std::vector<char> row(static_cast<size_t>(cols));
  for (int i = 0; i < rows; ++i) {
    in.read(row.data(), cols);
    if (in.gcount() != cols) throw std::runtime_error("truncated PGM data");
    for (int j = 0; j < cols; ++j)
      m(i, j) = static_cast<double>(static_cast<unsigned char>(row[static_cast<size_t>(j)]));
  }
  return m;
}

Matrix read_pgm(const std::string& path) {
  auto f = open_in(path, std::ios::in | std::ios::binary);
  return read_pgm(f);
}

void write_ppm(std::ostream& out, const Matrix& r, const Matrix& g, const Matrix& b) {
  if (r.rows() != g.rows() || r.rows() != b.rows() || r.cols() != g.cols() || r.cols() != b.cols())
    throw std::invalid_argument("PPM channels must share one shape");
  out << "P6\n" << r.cols() << " " << r.rows() << "\n255\n";
  std::vector<char> row(static_cast<size_t>(3 * r.cols()));
  for (Eigen::Index i = 0; i < r.rows(); ++i) {
    for (Eigen::Index j = 0; j < r.cols(); ++j) {
      row[static_cast<size_t>(3 * j + 0)] = static_cast<char>(quantize_byte(r(i, j)));
      row[static_cast<size_t>(3 * j + 1)] = static_cast<char>(quantize_byte(g(i, j)));
      row[static_cast<size_t>(3 * j + 2)] = static_cast<char>(quantize_byte(b(i, j)));
    }
    out.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
  if (!out) throw std::runtime_error("PPM write failed");
}

void write_ppm(const std::string& path, const Matrix& r, const Matrix& g, const Matrix& b) {
  auto f = open_out(path, std::ios::out | std::ios::binary);
  write_ppm(f, r, g, b);
}

RgbImage read_ppm(std::istream& in) {
  const auto [rows, cols] = pnm_header(in, "P6");
  RgbImage img{Matrix(rows, cols), Matrix(rows, cols), Matrix(rows, cols)};
  std::vector<char> row(static_cast<size_t>(3 * cols));
  for (int i = 0; i < rows; ++i) {
    in.read(row.data(), 3 * cols);
    if (in.gcount() != 3 * cols) throw std::runtime_error("truncated PPM data");
    for (int j = 0; j < cols; ++j) {
      img.r(i, j) = static_cast<double>(static_cast<unsigned char>(row[static_cast<size_t>(3 * j + 0)]));
      img.g(i, j) = static_cast<double>(static_cast<unsigned char>(row[static_cast<size_t>(3 * j + 1)]));
      img.b(i, j) = static_cast<double>(static_cast<unsigned char>(row[static_cast<size_t>(3 * j + 2)]));
    }
  }
  return img;
}

RgbImage read_ppm(const std::string& path) {
  auto f = open_in(path, std::ios::in | std::ios::binary);
  return read_ppm(f);
}

void write_bits(std::ostream& out, const Matrix& bits) {
  for (Eigen::Index i = 0; i < bits.rows(); ++i) {
    for (Eigen::Index j = 0; j < bits.cols(); ++j) {
      const double v = bits(i, j);
      if (v != 0.0 && v != 1.0) throw std::invalid_argument("bitmap entries must be 0 or 1");
      out.put(v == 1.0 ? '1' : '0');
    }
    out.put('\n');
  }
  if (!out) throw std::runtime_error("bitmap write failed");
}

void write_bits(const std::string& path, const Matrix& bits) {
  auto f = open_out(path);
  write_bits(f, bits);
}

Matrix read_bits(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty()) continue;
    lines.push_back(line);
  }
  if (lines.empty()) throw std::runtime_error("empty bitmap");
  const size_t cols = lines.front().size();
  Matrix m(static_cast<Eigen::Index>(lines.size()), static_cast<Eigen::Index>(cols));
  for (size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].size() != cols) throw std::runtime_error("ragged bitmap rows");
    for (size_t j = 0; j < cols; ++j) {
      const char c = lines[i][j];
      if (c != '0' && c != '1') throw std::runtime_error("bitmap characters must be 0 or 1");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = (c == '1') ? 1.0 : 0.0;
    }
  }
  return m;
}

Matrix read_bits(const std::string& path) {
  auto f = open_in(path);
  return read_bits(f);
}

}  // namespace obi::io
