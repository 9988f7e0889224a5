#include "greendecay/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "greendecay/errors.hpp"

namespace greendecay {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c) != 0; });
}

enum class Symmetry { general, symmetric, skew };

}  // namespace

BandedMatrix read_matrix_market(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError(0, "empty input");
  ++lineno;
  std::istringstream banner(line);
  std::string tag, object, format, field, symmetry;
  banner >> tag >> object >> format >> field >> symmetry;
  if (tag != "%%MatrixMarket")
    throw ParseError(lineno, "missing %%MatrixMarket banner");
  if (lower(object) != "matrix")
    throw ParseError(lineno, "unsupported object '" + object + "'");
  if (lower(format) != "coordinate")
    throw ParseError(lineno, "only coordinate format is supported");
  field = lower(field);
  if (field != "real" && field != "integer")
    throw ParseError(lineno, "unsupported field '" + field + "'");
  Symmetry sym;
  symmetry = lower(symmetry);
  if (symmetry == "general")
    sym = Symmetry::general;
  else if (symmetry == "symmetric")
    sym = Symmetry::symmetric;
  else if (symmetry == "skew-symmetric")
    sym = Symmetry::skew;
  else
    throw ParseError(lineno, "unsupported symmetry '" + symmetry + "'");

  // Comments, then the size line.
  long long rows = 0, cols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line)) throw ParseError(lineno, "missing size line");
    ++lineno;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream sz(line);
    if (!(sz >> rows >> cols >> nnz) || rows <= 0 || cols <= 0 || nnz < 0)
      throw ParseError(lineno, "malformed size line");
    break;
  }
  if (rows != cols)
    throw ShapeError("matrix is " + std::to_string(rows) + "x" +
                     std::to_string(cols) + ", expected square");

  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rows, cols);
  long long seen = 0;
  while (seen < nnz) {
    if (!std::getline(in, line))
      throw ParseError(lineno, "expected " + std::to_string(nnz) +
                                   " entries, found " + std::to_string(seen));
    ++lineno;
    if (line.empty() || line[0] == '%' || blank(line)) continue;
    std::istringstream entry(line);
    long long i = 0, j = 0;
    double v = 0.0;
    if (!(entry >> i >> j >> v))
      throw ParseError(lineno, "malformed entry");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError(lineno, "index out of range");
    m(i - 1, j - 1) += v;
    if (i != j) {
      if (sym == Symmetry::symmetric) m(j - 1, i - 1) += v;
      if (sym == Symmetry::skew) m(j - 1, i - 1) -= v;
    }
    ++seen;
  }
  if (rows < 2)
    throw ShapeError("matrix must be at least 2x2 to carry a lower band");
  return BandedMatrix::from_dense(m);
}

BandedMatrix read_matrix_market(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_matrix_market(in);
}

void write_matrix_market(std::ostream& out, const BandedMatrix& a) {
  const Eigen::MatrixXd& m = a.dense();
  std::vector<std::tuple<Eigen::Index, Eigen::Index, double>> nz;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != 0.0) nz.emplace_back(i + 1, j + 1, m(i, j));
  out << "%%MatrixMarket matrix coordinate real general\n";
  out << m.rows() << ' ' << m.cols() << ' ' << nz.size() << '\n';
  out << std::setprecision(std::numeric_limits<double>::max_digits10);
  for (const auto& [i, j, v] : nz) out << i << ' ' << j << ' ' << v << '\n';
}

}  // namespace greendecay
