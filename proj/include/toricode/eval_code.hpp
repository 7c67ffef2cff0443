#ifndef TORICODE_EVAL_CODE_HPP
#define TORICODE_EVAL_CODE_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "toricode/budget.hpp"
#include "toricode/matrix.hpp"
#include "toricode/toric_set.hpp"

namespace toricode {

// Exponent vectors of all degree-d monomials in `vars` variables, graded-lex
// descending (t1^d first), the fixed row order of every evaluation matrix.
std::vector<std::vector<int>> monomial_exponents(std::size_t vars, int degree);

// One row per degree-d monomial, one column per point of X. Points carry a
// leading 1, so dividing by t1^d is the identity on representatives and the
// entry is the plain monomial evaluation.
FqMatrix evaluation_matrix(const ToricSet& X, int degree, const Budget& budget = {});

struct LinearCode {
  FieldPtr field;
  std::size_t length = 0;
  FqMatrix generator;   // raw monomial images
  FqMatrix basis;       // reduced row echelon basis of the row space
  std::size_t dimension = 0;
  std::optional<std::uint64_t> min_distance;
  std::optional<std::map<std::uint64_t, std::uint64_t>> weights;
};

LinearCode code_from(const ToricSet& X, int degree, const Budget& budget = {});

// Exact minimum Hamming weight over nonzero codewords, enumerating messages
// projectively (first nonzero entry fixed to 1; weight is scalar-invariant).
std::uint64_t minimum_distance(const LinearCode& code, const Budget& budget = {});

// Weight -> codeword count over all q^dim codewords, including weight 0.
std::map<std::uint64_t, std::uint64_t> weight_distribution(const LinearCode& code,
                                                           const Budget& budget = {});

// dim of the degree-d piece of the coordinate ring: rank of the evaluation
// matrix. d = 0 gives 1.
std::size_t hilbert_function(const ToricSet& X, int degree, const Budget& budget = {});

// Smallest d >= 0 with hilbert_function(X, d) == |X|.
int regularity_index(const ToricSet& X, const Budget& budget = {});

}  // namespace toricode

#endif
