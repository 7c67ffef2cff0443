#ifndef TORICODE_GRAPH_HPP
#define TORICODE_GRAPH_HPP

#include <array>
#include <utility>
#include <vector>

namespace toricode {

// Simple undirected graph with 1-based vertices and a fixed edge order. The
// edge order defines the coordinate order of the ambient projective space, so
// it is preserved exactly as given; each pair is stored sorted.
class Graph {
 public:
  Graph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

  // Vertices incident to at least one edge, ascending.
  std::vector<int> non_isolated_vertices() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
};

struct ComponentInfo {
  std::vector<int> vertices;  // ascending
  bool bipartite = true;
  std::array<std::vector<int>, 2> classes;  // bipartition when bipartite
};

struct ComponentProfile {
  int components = 0;      // b0
  int non_bipartite = 0;   // gamma
  std::vector<ComponentInfo> parts;  // ordered by smallest vertex
};

ComponentProfile component_profile(const Graph& g);

Graph cycle_graph(int length);                   // length >= 3, edges {1,2},...,{n,1}
Graph path_graph(int edge_count);                // edge_count >= 1, edges {1,2},...,{k,k+1}
Graph complete_bipartite(int a, int b);          // sides {1..a}, {a+1..a+b}
Graph disjoint_union(const Graph& g1, const Graph& g2);

// Per edge {i,j}: the 0/1 exponent vector of length n with ones at i and j.
std::vector<std::vector<int>> edge_monomial_exponents(const Graph& g);

}  // namespace toricode

#endif
