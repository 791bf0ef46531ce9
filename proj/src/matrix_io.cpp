#include "sbound/matrix_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sbound/errors.hpp"

namespace sbound {
namespace {

std::string format_entry(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.16e", value);
  return buf;
}

}  // namespace

DenseMatrix read_matrix(std::istream& in) {
  long long rows = 0;
  long long cols = 0;
  std::string header;
  if (!std::getline(in, header)) throw ParseError("matrix input is empty");
  {
    std::istringstream hs(header);
    std::string extra;
    if (!(hs >> rows >> cols) || (hs >> extra)) {
      throw ParseError("matrix header must be \"n k\", got \"" + header + "\"");
    }
  }
  if (rows < 1 || cols < 1) throw ParseError("matrix dimensions must be positive");

  DenseMatrix m(rows, cols);
  for (long long i = 0; i < rows; ++i) {
    std::string line;
    if (!std::getline(in, line)) {
      throw ParseError("expected " + std::to_string(rows) + " rows, got " + std::to_string(i));
    }
    std::istringstream ls(line);
    for (long long j = 0; j < cols; ++j) {
      std::string token;
      if (!(ls >> token)) {
        throw ParseError("row " + std::to_string(i + 1) + " has fewer than " +
                         std::to_string(cols) + " entries");
      }
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || !std::isfinite(value)) {
        throw ParseError("row " + std::to_string(i + 1) + ": bad number \"" + token + "\"");
      }
      m(i, j) = value;
    }
    std::string extra;
    if (ls >> extra) {
      throw ParseError("row " + std::to_string(i + 1) + " has more than " +
                       std::to_string(cols) + " entries");
    }
  }
  std::string rest;
  while (in >> rest) throw ParseError("trailing content after matrix rows: \"" + rest + "\"");
  return m;
}

DenseMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const DenseMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j > 0) out << ' ';
      out << format_entry(m(i, j));
    }
    out << '\n';
  }
}

std::string matrix_to_string(const DenseMatrix& m) {
  std::ostringstream out;
  write_matrix(out, m);
  return out.str();
}

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

}  // namespace sbound
