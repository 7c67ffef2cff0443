#ifndef TORICODE_FORMULAS_HPP
#define TORICODE_FORMULAS_HPP

#include <cstdint>
#include <span>
#include <string>

#include "toricode/budget.hpp"
#include "toricode/field.hpp"

namespace toricode {

// Closed-form predictions for the order-1 code over the even cycle C_2k and
// for torus codes. Everything is exact integer arithmetic; the divisions that
// appear are asserted exact and throw std::logic_error otherwise.

Int pow_int(Int base, int exponent);

// (q-1)^(2k-2) - q^k (q-2); its sign decides which support class dominates.
Int delta(int k, std::uint32_t q);

enum class CycleBranch { incomplete_dominates, complete_dominates };
const char* branch_name(CycleBranch b);

// Branch by the theorem's literal case list: incomplete dominates iff
// (k = 4 and q > 3) or k >= 5.
CycleBranch theorem_branch(int k, std::uint32_t q);
// Branch by sign(delta): the cross-check route.
CycleBranch branch_predicate(int k, std::uint32_t q);

// Minimum distance of C_X(1) over C_2k:
//   (q-1)^(2k-3) (q-2)                        incomplete-dominates cases
//   ((q-1)^(2k) - q^k (q-2) - 1) / (q (q-1))  complete-dominates cases
Int cycle_min_distance(int k, std::uint32_t q);

// Unit-torus zero count of a path-supported quadratic with r-1 nonzero
// coefficients in 2k variables: (1/q) [(q-1)^r + (-1)^(r-1) (q-1)^2] (q-1)^(2k-r).
Int path_zero_count(int r, std::uint32_t q, int k);

// Per-class maxima of |Z(F) ∩ X| over linear forms.
Int incomplete_max(int k, std::uint32_t q);  // (q-1)^(2k-3)
Int complete_max(int k, std::uint32_t q);    // ((q-1)^(2k-1) + q^k (q-2) + 1)/(q (q-1))

// alpha1 alpha3 ... alpha_{2k-1} == (-1)^k alpha2 alpha4 ... alpha_{2k},
// evaluated in the field; the exact equality case of the complete-form bound.
bool equality_condition(std::span<const std::uint16_t> alphas, const FiniteField& F);

// Minimum distance of the order-d code on the torus T^(s-1):
// (q-1)^(s-(k+2)) (q-1-l) with d = k(q-2)+l, k >= 0, 1 <= l <= q-2.
// Valid for 1 <= d <= (q-2)(s-1); at the upper bound the code fills its
// ambient space and the formula evaluates to 1.
Int torus_min_distance(int s, std::uint32_t q, int d);

// Regularity index (k-1)(q-2) of the even cycle C_2k.
Int even_cycle_regularity(int k, std::uint32_t q);

struct CyclePrediction {
  int k = 0;
  std::uint32_t q = 0;
  Int length;        // (q-1)^(2k-2)
  Int dimension;     // 2k
  Int min_distance;
  Int delta_value;
  CycleBranch branch = CycleBranch::complete_dominates;
};

CyclePrediction predict_cycle(int k, std::uint32_t q);

}  // namespace toricode

#endif
