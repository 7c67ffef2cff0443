#ifndef TORICODE_JSON_IO_HPP
#define TORICODE_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "toricode/eval_code.hpp"
#include "toricode/formulas.hpp"
#include "toricode/toric_set.hpp"

namespace toricode {

// Points as arrays of canonical integer encodings, in set order.
nlohmann::json points_json(const ToricSet& X);

// Row-major matrix of canonical encodings.
nlohmann::json matrix_json(const FqMatrix& m);

// Formula values are emitted as decimal strings; they outgrow JSON numbers.
nlohmann::json prediction_json(const CyclePrediction& p);

// Comma-separated integers, embedded through the prime subfield ("1,-1,0,0").
std::vector<std::uint16_t> parse_form_coeffs(const std::string& text, const FiniteField& F);

}  // namespace toricode

#endif
