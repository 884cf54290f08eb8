#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace unicyclic {

/// 0-based vertex index. Externally (files, CLI, labels) vertices are 1..n.
using Vertex = std::size_t;
/// 0-based edge index. Externally edges are e_1..e_m in file order.
using EdgeIndex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  bool has(Vertex x) const noexcept { return u == x || v == x; }
  Vertex other(Vertex x) const noexcept { return x == u ? v : u; }
  Vertex smaller() const noexcept { return u < v ? u : v; }
  Vertex larger() const noexcept { return u < v ? v : u; }
};

/**
 * Simple, connected, undirected graph with an ordered edge list.
 *
 * Construction validates everything: no self-loops, no duplicate edges,
 * endpoints in range and connectivity. Violations throw GraphError.
 */
class Graph {
 public:
  Graph(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(EdgeIndex e) const { return edges_.at(e); }
  /// Edge indices incident with v, in increasing order.
  std::span<const EdgeIndex> incident(Vertex v) const;
  std::size_t degree(Vertex v) const { return incident(v).size(); }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;
  std::vector<EdgeIndex> incidence_;
};

enum class GraphClass { Tree, OddUnicyclic, EvenUnicyclic, Other };

std::string_view to_string(GraphClass c);
bool is_unicyclic(GraphClass c);

/// Parses the edge-list format: first non-comment line "n m", then m lines
/// "u v" with 1-based labels; line i defines e_i. Lines starting with '#' and
/// blank lines are ignored. Throws ParseError (malformed input) or GraphError
/// (structural violation).
Graph parse_graph(std::string_view text);
Graph read_graph(std::istream& in);
/// Inverse of parse_graph; emits no comments.
std::string format_graph(const Graph& g);

/// Tree iff m = n-1; Odd/EvenUnicyclic iff m = n by cycle parity; Other otherwise.
GraphClass classify(const Graph& g);

/// Hop distances from `source` to every vertex by breadth-first search,
/// optionally ignoring one edge. Unreachable vertices get `kUnreachable`.
inline constexpr std::uint32_t kUnreachable = UINT32_MAX;
std::vector<std::uint32_t> bfs_distances(const Graph& g, Vertex source,
                                         EdgeIndex skip_edge = SIZE_MAX);

/// Shortest-path length; throws GraphError when a vertex is out of range.
std::size_t dist(const Graph& g, Vertex i, Vertex j);

/// All-pairs hop distances by one BFS per source; n*n table.
class DistanceTable {
 public:
  explicit DistanceTable(const Graph& g);

  std::size_t size() const noexcept { return n_; }
  std::uint32_t operator()(Vertex i, Vertex j) const noexcept { return table_[i * n_ + j]; }
  /// Bounds-checked lookup; throws GraphError.
  std::uint32_t at(Vertex i, Vertex j) const;

 private:
  std::size_t n_;
  std::vector<std::uint32_t> table_;
};

}  // namespace unicyclic
