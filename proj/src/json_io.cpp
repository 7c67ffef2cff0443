#include "toricode/json_io.hpp"

#include <charconv>
#include <stdexcept>

namespace toricode {

nlohmann::json points_json(const ToricSet& X) {
  nlohmann::json pts = nlohmann::json::array();
  for (std::size_t i = 0; i < X.size(); ++i) {
    nlohmann::json pt = nlohmann::json::array();
    for (std::uint16_t c : X.point(i)) pt.push_back(c);
    pts.push_back(std::move(pt));
  }
  return pts;
}

nlohmann::json matrix_json(const FqMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows; ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint16_t v : m.row(r)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return {{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

nlohmann::json prediction_json(const CyclePrediction& p) {
  return {{"k", p.k},
          {"q", p.q},
          {"length", p.length.str()},
          {"dimension", p.dimension.str()},
          {"min_distance", p.min_distance.str()},
          {"delta", p.delta_value.str()},
          {"branch", branch_name(p.branch)}};
}

std::vector<std::uint16_t> parse_form_coeffs(const std::string& text, const FiniteField& F) {
  std::vector<std::uint16_t> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    const std::string_view piece(text.data() + pos, next - pos);
    long long v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (ec != std::errc() || ptr != piece.data() + piece.size())
      throw std::invalid_argument("cannot parse form coefficient '" + std::string(piece) + "'");
    out.push_back(F.from_int(v).value);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

}  // namespace toricode
