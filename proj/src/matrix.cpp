#include "symideal/matrix.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace symideal {

IntMatrix identity_matrix(Index k) {
  IntMatrix m = IntMatrix::Constant(k, k, BigInt(0));
  for (Index i = 0; i < k; ++i) m(i, i) = 1;
  return m;
}

IntMatrix diagonal_matrix(const std::vector<BigInt>& diag) {
  const auto k = static_cast<Index>(diag.size());
  IntMatrix m = IntMatrix::Constant(k, k, BigInt(0));
  for (Index i = 0; i < k; ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

IntMatrix matrix_from_rows(const std::vector<std::vector<std::int64_t>>& rows,
                           Index cols) {
  if (cols < 0) cols = rows.empty() ? 0 : static_cast<Index>(rows[0].size());
  IntMatrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<Index>(rows[i].size()) != cols)
      throw std::invalid_argument("matrix_from_rows: ragged rows");
    for (Index j = 0; j < cols; ++j)
      m(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  }
  return m;
}

void write_matrix(std::ostream& os, const IntMatrix& m) {
  os << m.rows() << ' ' << m.cols() << '\n';
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

IntMatrix read_matrix(std::istream& is) {
  Index rows = 0, cols = 0;
  if (!(is >> rows >> cols) || rows < 0 || cols < 0)
    throw std::runtime_error("read_matrix: bad header");
  IntMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::runtime_error("read_matrix: truncated");
      try {
        m(i, j) = BigInt(tok);
      } catch (const std::exception&) {
        throw std::runtime_error("read_matrix: bad entry '" + tok + "'");
      }
    }
  return m;
}

}  // namespace symideal
