#include "toricode/specs.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace toricode {
namespace {

int parse_int(std::string_view text, const std::string& what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw std::invalid_argument("cannot parse " + what + " from '" + std::string(text) + "'");
  return value;
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty graph spec");
  if (spec[0] == '@') return read_edge_list_file(spec.substr(1));

  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("graph spec '" + spec +
                                "' is not cycle:N, path:N, kbip:A,B or @file");
  const std::string kind = spec.substr(0, colon);
  const std::string args = spec.substr(colon + 1);
  if (kind == "cycle") return cycle_graph(parse_int(args, "cycle length"));
  if (kind == "path") return path_graph(parse_int(args, "path edge count"));
  if (kind == "kbip") {
    const auto comma = args.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("kbip spec needs two sizes, e.g. kbip:2,3");
    return complete_bipartite(parse_int(args.substr(0, comma), "bipartition size"),
                              parse_int(args.substr(comma + 1), "bipartition size"));
  }
  throw std::invalid_argument("unknown graph kind '" + kind + "'");
}

Graph read_edge_list(std::istream& in) {
  int n = 0, s = 0;
  if (!(in >> n >> s)) throw std::invalid_argument("edge list must start with 'n s'");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(s));
  for (int k = 0; k < s; ++k) {
    int i = 0, j = 0;
    if (!(in >> i >> j))
      throw std::invalid_argument("edge list ended after " + std::to_string(k) + " of " +
                                  std::to_string(s) + " edges");
    edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open edge list file '" + path + "'");
  return read_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [i, j] : g.edges()) os << i << ' ' << j << '\n';
  return os.str();
}

FieldPtr parse_field_spec(const std::string& spec) {
  const auto caret = spec.find('^');
  if (caret != std::string::npos) {
    const int p = parse_int(std::string_view(spec).substr(0, caret), "characteristic");
    const int e = parse_int(std::string_view(spec).substr(caret + 1), "extension degree");
    if (p < 2 || e < 1) throw std::invalid_argument("field spec '" + spec + "' is invalid");
    return std::make_shared<FiniteField>(static_cast<std::uint32_t>(p),
                                         static_cast<std::uint32_t>(e));
  }
  const int q = parse_int(spec, "field order");
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  return std::make_shared<FiniteField>(FiniteField::of_order(static_cast<std::uint32_t>(q)));
}

}  // namespace toricode
