#ifndef TORICODE_ZEROS_HPP
#define TORICODE_ZEROS_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "toricode/budget.hpp"
#include "toricode/field.hpp"
#include "toricode/graph.hpp"
#include "toricode/toric_set.hpp"

namespace toricode {

// Sparse multivariate polynomial over GF(q): sorted exponent-vector ->
// coefficient terms, zero coefficients dropped.
struct SparsePoly {
  struct Term {
    std::vector<int> exp;
    std::uint16_t coeff = 0;
  };

  int vars = 0;
  std::vector<Term> terms;

  // Collects like terms in the field and drops zero coefficients.
  static SparsePoly from_terms(int vars, std::vector<Term> raw, const FiniteField& F);
  // The linear form sum_k coeffs[k] * t_{k+1} in coeffs.size() variables.
  static SparsePoly linear_form(std::span<const std::uint16_t> coeffs);

  bool is_zero() const noexcept { return terms.empty(); }
  // True when all terms share one total degree (set into *degree, -1 if zero).
  bool is_homogeneous(int* degree = nullptr) const;

  std::uint16_t evaluate(std::span<const std::uint16_t> point, const FiniteField& F) const;
};

// Substitutes each code variable t_k by the product of the vertex variables of
// edge k, producing a polynomial in the graph's n vertex variables. Requires a
// homogeneous input in s = edge_count variables.
SparsePoly pullback(const SparsePoly& form, const Graph& g, const FiniteField& F);

// Number of common zeros of the given polynomials with every coordinate a
// unit, over (F*)^vars. Evaluates incrementally along an odometer walk of the
// tuple space (each step touches only the terms containing the changed
// coordinate); z_count_reference is the plain per-tuple evaluation it is
// gated against in the tests.
std::uint64_t z_count(std::span<const SparsePoly> polys, int vars, const FiniteField& F,
                      const Budget& budget = {});
std::uint64_t z_count_reference(std::span<const SparsePoly> polys, int vars,
                                const FiniteField& F, const Budget& budget = {});

// |Z(F) ∩ X|: points of X where the form vanishes.
std::uint64_t zeros_on_X(const SparsePoly& form, const ToricSet& X);
// Fast path for linear forms given by their s coefficients.
std::uint64_t zeros_on_X(std::span<const std::uint16_t> linear_coeffs, const ToricSet& X);

enum class FormClass { incomplete, complete, all };

struct MaxZerosResult {
  std::uint64_t max = 0;
  std::vector<std::vector<std::uint16_t>> maximizers;  // sorted coefficient vectors
  std::uint64_t forms_scanned = 0;
};

// Exact maximum of |Z(F) ∩ X| over nonzero linear forms of the given support
// class (incomplete: some coefficient zero; complete: none), enumerated
// projectively with the first nonzero coefficient fixed to 1.
MaxZerosResult max_zeros_search(const ToricSet& X, FormClass cls, const Budget& budget = {});

}  // namespace toricode

#endif
