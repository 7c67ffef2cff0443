#include "toricode/matrix.hpp"

#include <algorithm>
#include <sstream>

namespace toricode {

std::size_t rref_in_place(FqMatrix& m, const FiniteField& F) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols && rank < m.rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    if (pivot != rank)
      std::swap_ranges(m.row(pivot).begin(), m.row(pivot).end(), m.row(rank).begin());

    const std::uint16_t scale = F.inv(m.at(rank, col));
    if (scale != 1)
      for (std::size_t c = col; c < m.cols; ++c) m.at(rank, c) = F.mul(m.at(rank, c), scale);

    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r == rank) continue;
      const std::uint16_t factor = m.at(r, col);
      if (factor == 0) continue;
      for (std::size_t c = col; c < m.cols; ++c)
        m.at(r, c) = F.sub(m.at(r, c), F.mul(factor, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

FqMatrix top_rows(const FqMatrix& m, std::size_t count) {
  FqMatrix out(count, m.cols);
  std::copy(m.a.begin(), m.a.begin() + static_cast<std::ptrdiff_t>(count * m.cols), out.a.begin());
  return out;
}

std::string matrix_text(const FqMatrix& m) {
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) {
      if (c) os << ' ';
      os << m.at(r, c);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace toricode
