#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unicyclic/graph.hpp"

namespace unicyclic {

/// The unique cycle of a unicyclic graph in canonical orientation: starts at
/// the smallest cycle vertex and proceeds toward its smaller-labelled cycle
/// neighbour. `edges[k]` joins `vertices[k]` and `vertices[(k+1) % length]`.
struct CycleDescriptor {
  std::vector<Vertex> vertices;
  std::vector<EdgeIndex> edges;

  std::size_t length() const noexcept { return vertices.size(); }
};

/// Throws GraphError unless g is unicyclic.
CycleDescriptor find_cycle(const Graph& g);

/**
 * Everything the closed-form pseudoinverse formulas read from a unicyclic
 * graph, computed once.
 *
 * Removing the cycle edges leaves a forest whose trees ("branches") are each
 * rooted at one cycle vertex t; `anchor(j)` is that root (j*), `depth(j)` is
 * d(j, j*) and `branch_size(t)` is n_t. For an edge e not on the cycle, G - e
 * splits into a component containing the cycle and a detached component
 * G - e(C), which is the subtree below e's child endpoint.
 *
 * Distances between all vertex pairs are cached at construction.
 */
class UnicyclicDecomposition {
 public:
  /// Throws GraphError unless g is unicyclic.
  explicit UnicyclicDecomposition(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  const CycleDescriptor& cycle() const noexcept { return cycle_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t cycle_length() const noexcept { return cycle_.length(); }
  bool even() const noexcept { return cycle_.length() % 2 == 0; }

  bool on_cycle(Vertex v) const { return cycle_position_.at(v) != kNone; }
  bool edge_on_cycle(EdgeIndex e) const { return edge_cycle_position_.at(e) != kNone; }
  /// Index of v in cycle().vertices; throws GraphError when v is off the cycle.
  std::size_t cycle_position(Vertex v) const;

  /// j*: the cycle vertex closest to j.
  Vertex anchor(Vertex j) const { return anchor_.at(j); }
  /// d(j, j*).
  std::size_t depth(Vertex j) const { return depth_.at(j); }
  /// n_t for a cycle vertex t (t included); throws GraphError for off-cycle t.
  std::size_t branch_size(Vertex t) const;

  /// For an off-cycle edge: the endpoint farther from the cycle.
  Vertex child_endpoint(EdgeIndex e) const;
  /// |G - e(C)|; 0 for cycle edges.
  std::size_t detached_size(EdgeIndex e) const;
  /// |G - e[C]|; n for cycle edges.
  std::size_t attached_size(EdgeIndex e) const { return vertex_count() - detached_size(e); }
  /// Whether j lies in G - e(C). Always false for cycle edges.
  bool in_detached(EdgeIndex e, Vertex j) const;
  /// Vertex set of G - e(C), ascending.
  std::vector<Vertex> detached_vertices(EdgeIndex e) const;

  /// d(i, j) from the cached table.
  std::size_t dist(Vertex i, Vertex j) const { return distances_.at(i, j); }
  const DistanceTable& distances() const noexcept { return distances_; }
  /// d(e, j) = min over the endpoints of e.
  std::size_t dist_edge_vertex(EdgeIndex e, Vertex j) const;
  /// d(e_a, e_b) = min over the four endpoint pairs; 0 when they share a vertex.
  std::size_t dist_edge_edge(EdgeIndex a, EdgeIndex b) const;
  /// Distance from endpoint r of cycle edge e to j in the tree G - e.
  /// Throws GraphError when e is off the cycle or r is not an endpoint of e.
  std::size_t dist_in_tree_minus_edge(EdgeIndex e, Vertex r, Vertex j) const;

 private:
  static constexpr std::size_t kNone = SIZE_MAX;

  void check_vertex(Vertex v) const;
  void check_edge(EdgeIndex e) const;

  Graph graph_;
  CycleDescriptor cycle_;
  std::vector<std::size_t> cycle_position_;
  std::vector<std::size_t> edge_cycle_position_;
  std::vector<Vertex> anchor_;
  std::vector<std::size_t> depth_;
  std::vector<std::size_t> subtree_size_;
  std::vector<std::size_t> enter_;  // preorder interval of the branch forest
  std::vector<std::size_t> exit_;
  DistanceTable distances_;
};

}  // namespace unicyclic
