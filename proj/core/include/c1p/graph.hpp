#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace c1p {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n. Edges are stored normalized
/// (smaller endpoint first) and sorted.
class Graph {
 public:
  /// Throws InvalidInstance on out-of-range ids, self-loops or repeated edges.
  Graph(std::uint32_t vertex_count, std::vector<Edge> edges);

  std::uint32_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  /// Sorted neighbours.
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex a, Vertex b) const;
  bool is_connected() const;

 private:
  std::uint32_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;  // index 0 unused
};

/// Human-readable description of the first violated assumption, or nullopt
/// when (graph, w, s) is a valid Hamiltonian-path counting instance:
/// w != s, connected, deg(w) and deg(s) >= 1, every other degree >= 2.
std::optional<std::string> ham_instance_violation(const Graph& g, Vertex w, Vertex s);

/// Graph with designated source `w` and destination `s`.
class HamInstance {
 public:
  /// Throws InvalidInstance naming the violated assumption.
  HamInstance(Graph graph, Vertex source, Vertex destination);

  const Graph& graph() const noexcept { return graph_; }
  Vertex source() const noexcept { return w_; }
  Vertex destination() const noexcept { return s_; }
  bool is_endpoint(Vertex v) const noexcept { return v == w_ || v == s_; }

  /// |E| - |V| + 1: edges left untraversed by any Hamiltonian path.
  std::int64_t surplus() const noexcept {
    return static_cast<std::int64_t>(graph_.edge_count()) -
           static_cast<std::int64_t>(graph_.vertex_count()) + 1;
  }

 private:
  Graph graph_;
  Vertex w_;
  Vertex s_;
};

/// Graph file: first line `n m w s`, then m lines `u v`; `%` starts a
/// comment. Throws ParseError on syntax, InvalidInstance on bad instances.
HamInstance parse_graph_file(std::string_view text);
std::string to_graph_file(const HamInstance& instance);

}  // namespace c1p
