#include "toricode/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>

namespace toricode {

Graph::Graph(int vertex_count, std::vector<std::pair<int, int>> edges) : n_(vertex_count) {
  if (n_ < 0) throw std::invalid_argument("vertex count must be nonnegative");
  std::set<std::pair<int, int>> seen;
  edges_.reserve(edges.size());
  for (auto [i, j] : edges) {
    if (i < 1 || i > n_ || j < 1 || j > n_)
      throw std::invalid_argument("edge {" + std::to_string(i) + "," + std::to_string(j) +
                                  "} has a vertex outside 1.." + std::to_string(n_));
    if (i == j)
      throw std::invalid_argument("loop at vertex " + std::to_string(i) + " is not allowed");
    auto e = std::minmax(i, j);
    if (!seen.insert({e.first, e.second}).second)
      throw std::invalid_argument("duplicate edge {" + std::to_string(e.first) + "," +
                                  std::to_string(e.second) + "}");
    edges_.emplace_back(e.first, e.second);
  }
}

std::vector<int> Graph::non_isolated_vertices() const {
  std::vector<char> touched(static_cast<std::size_t>(n_) + 1, 0);
  for (auto [i, j] : edges_) touched[i] = touched[j] = 1;
  std::vector<int> out;
  for (int v = 1; v <= n_; ++v)
    if (touched[v]) out.push_back(v);
  return out;
}

ComponentProfile component_profile(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n) + 1);
  for (auto [i, j] : g.edges()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<int> color(static_cast<std::size_t>(n) + 1, -1);

  ComponentProfile profile;
  for (int start = 1; start <= n; ++start) {
    if (color[start] != -1) continue;
    ComponentInfo info;
    color[start] = 0;
    std::queue<int> bfs;
    bfs.push(start);
    while (!bfs.empty()) {
      int v = bfs.front();
      bfs.pop();
      info.vertices.push_back(v);
      for (int w : adj[v]) {
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          bfs.push(w);
        } else if (color[w] == color[v]) {
          info.bipartite = false;
        }
      }
    }
    std::sort(info.vertices.begin(), info.vertices.end());
    if (info.bipartite) {
      for (int v : info.vertices) info.classes[static_cast<std::size_t>(color[v])].push_back(v);
    } else {
      ++profile.non_bipartite;
    }
    ++profile.components;
    profile.parts.push_back(std::move(info));
  }
  return profile;
}

Graph cycle_graph(int length) {
  if (length < 3) throw std::invalid_argument("cycle length must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < length; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(length, 1);
  return Graph(length, std::move(edges));
}

Graph path_graph(int edge_count) {
  if (edge_count < 1) throw std::invalid_argument("path must have at least one edge");
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v <= edge_count; ++v) edges.emplace_back(v, v + 1);
  return Graph(edge_count + 1, std::move(edges));
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartition sides must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= a; ++i)
    for (int j = 1; j <= b; ++j) edges.emplace_back(i, a + j);
  return Graph(a + b, std::move(edges));
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::pair<int, int>> edges = g1.edges();
  const int shift = g1.vertex_count();
  for (auto [i, j] : g2.edges()) edges.emplace_back(i + shift, j + shift);
  return Graph(g1.vertex_count() + g2.vertex_count(), std::move(edges));
}

std::vector<std::vector<int>> edge_monomial_exponents(const Graph& g) {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(g.edge_count()));
  for (auto [i, j] : g.edges()) {
    std::vector<int> exp(static_cast<std::size_t>(g.vertex_count()), 0);
    exp[static_cast<std::size_t>(i) - 1] = 1;
    exp[static_cast<std::size_t>(j) - 1] = 1;
    out.push_back(std::move(exp));
  }
  return out;
}

}  // namespace toricode
