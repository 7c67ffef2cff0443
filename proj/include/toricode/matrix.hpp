#ifndef TORICODE_MATRIX_HPP
#define TORICODE_MATRIX_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "toricode/field.hpp"

namespace toricode {

// Dense row-major matrix of canonical GF(q) encodings.
struct FqMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::uint16_t> a;

  FqMatrix() = default;
  FqMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}

  std::uint16_t& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
  std::uint16_t at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }
  std::span<const std::uint16_t> row(std::size_t r) const { return {a.data() + r * cols, cols}; }
  std::span<std::uint16_t> row(std::size_t r) { return {a.data() + r * cols, cols}; }
};

// Reduced row echelon form with first-nonzero pivoting; returns the rank.
// RREF is canonical, so serialized bases are reproducible.
std::size_t rref_in_place(FqMatrix& m, const FiniteField& F);

// The first `rank` rows of an RREF matrix.
FqMatrix top_rows(const FqMatrix& m, std::size_t count);

// Plain-text rendering, one space-separated row per line.
std::string matrix_text(const FqMatrix& m);

}  // namespace toricode

#endif
