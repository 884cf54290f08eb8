#include "unicyclic/decomposition.hpp"

#include <algorithm>
#include <string>

#include "unicyclic/errors.hpp"

namespace unicyclic {

CycleDescriptor find_cycle(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (g.edge_count() != n) {
    throw GraphError("graph is not unicyclic (n=" + std::to_string(n) +
                     ", m=" + std::to_string(g.edge_count()) + ")");
  }
  // Peel leaves until only the cycle remains.
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] == 1) leaves.push_back(v);
  }
  std::vector<bool> removed(n, false);
  while (!leaves.empty()) {
    const Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (EdgeIndex e : g.incident(v)) {
      const Vertex w = g.edges()[e].other(v);
      if (!removed[w] && --degree[w] == 1) leaves.push_back(w);
    }
  }

  const auto start_it = std::find(removed.begin(), removed.end(), false);
  if (start_it == removed.end()) throw GraphError("graph has no cycle");
  const auto start = static_cast<Vertex>(start_it - removed.begin());

  // Cycle neighbours of a cycle vertex, as (vertex, edge) pairs.
  const auto cycle_steps = [&](Vertex v) {
    std::vector<std::pair<Vertex, EdgeIndex>> steps;
    for (EdgeIndex e : g.incident(v)) {
      const Vertex w = g.edges()[e].other(v);
      if (!removed[w]) steps.emplace_back(w, e);
    }
    return steps;
  };

  CycleDescriptor cycle;
  auto first = cycle_steps(start);
  std::sort(first.begin(), first.end());
  Vertex prev = start;
  Vertex cur = first.front().first;
  cycle.vertices.push_back(start);
  cycle.edges.push_back(first.front().second);
  while (cur != start) {
    cycle.vertices.push_back(cur);
    for (const auto& [w, e] : cycle_steps(cur)) {
      if (w == prev) continue;
      cycle.edges.push_back(e);
      prev = cur;
      cur = w;
      break;
    }
  }
  return cycle;
}

UnicyclicDecomposition::UnicyclicDecomposition(Graph g)
    : graph_(std::move(g)), cycle_(find_cycle(graph_)), distances_(graph_) {
  const std::size_t n = graph_.vertex_count();
  cycle_position_.assign(n, kNone);
  edge_cycle_position_.assign(graph_.edge_count(), kNone);
  for (std::size_t k = 0; k < cycle_.length(); ++k) {
    cycle_position_[cycle_.vertices[k]] = k;
    edge_cycle_position_[cycle_.edges[k]] = k;
  }

  // Breadth-first from all cycle vertices over non-cycle edges.
  anchor_.assign(n, kNone);
  depth_.assign(n, 0);
  std::vector<Vertex> parent(n, kNone);
  std::vector<Vertex> order;
  order.reserve(n);
  for (Vertex t : cycle_.vertices) {
    anchor_[t] = t;
    order.push_back(t);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex x = order[head];
    for (EdgeIndex e : graph_.incident(x)) {
      if (edge_cycle_position_[e] != kNone) continue;
      const Vertex y = graph_.edges()[e].other(x);
      if (anchor_[y] != kNone) continue;
      anchor_[y] = anchor_[x];
      depth_[y] = depth_[x] + 1;
      parent[y] = x;
      order.push_back(y);
    }
  }

  subtree_size_.assign(n, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (parent[*it] != kNone) subtree_size_[parent[*it]] += subtree_size_[*it];
  }

  // Preorder intervals so that subtree membership is an O(1) interval test.
  std::vector<std::vector<Vertex>> children(n);
  for (Vertex v : order) {
    if (parent[v] != kNone) children[parent[v]].push_back(v);
  }
  enter_.assign(n, 0);
  exit_.assign(n, 0);
  std::size_t clock = 0;
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex root : cycle_.vertices) {
    stack.emplace_back(root, 0);
    enter_[root] = clock++;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < children[v].size()) {
        const Vertex c = children[v][next++];
        enter_[c] = clock++;
        stack.emplace_back(c, 0);
      } else {
        exit_[v] = clock;
        stack.pop_back();
      }
    }
  }
}

void UnicyclicDecomposition::check_vertex(Vertex v) const {
  if (v >= vertex_count()) throw GraphError("vertex " + std::to_string(v + 1) + " out of range");
}

void UnicyclicDecomposition::check_edge(EdgeIndex e) const {
  if (e >= graph_.edge_count()) throw GraphError("edge e" + std::to_string(e + 1) + " out of range");
}

std::size_t UnicyclicDecomposition::cycle_position(Vertex v) const {
  check_vertex(v);
  if (cycle_position_[v] == kNone) {
    throw GraphError("vertex " + std::to_string(v + 1) + " is not on the cycle");
  }
  return cycle_position_[v];
}

std::size_t UnicyclicDecomposition::branch_size(Vertex t) const {
  cycle_position(t);
  return subtree_size_[t];
}

Vertex UnicyclicDecomposition::child_endpoint(EdgeIndex e) const {
  check_edge(e);
  if (edge_on_cycle(e)) throw GraphError("edge e" + std::to_string(e + 1) + " is on the cycle");
  const Edge& ed = graph_.edges()[e];
  return depth_[ed.u] > depth_[ed.v] ? ed.u : ed.v;
}

std::size_t UnicyclicDecomposition::detached_size(EdgeIndex e) const {
  check_edge(e);
  if (edge_on_cycle(e)) return 0;
  return subtree_size_[child_endpoint(e)];
}

bool UnicyclicDecomposition::in_detached(EdgeIndex e, Vertex j) const {
  check_edge(e);
  check_vertex(j);
  if (edge_on_cycle(e)) return false;
  const Vertex c = child_endpoint(e);
  return enter_[c] <= enter_[j] && enter_[j] < exit_[c];
}

std::vector<Vertex> UnicyclicDecomposition::detached_vertices(EdgeIndex e) const {
  std::vector<Vertex> out;
  for (Vertex j = 0; j < vertex_count(); ++j) {
    if (in_detached(e, j)) out.push_back(j);
  }
  return out;
}

std::size_t UnicyclicDecomposition::dist_edge_vertex(EdgeIndex e, Vertex j) const {
  check_edge(e);
  check_vertex(j);
  const Edge& ed = graph_.edges()[e];
  return std::min(distances_(ed.u, j), distances_(ed.v, j));
}

std::size_t UnicyclicDecomposition::dist_edge_edge(EdgeIndex a, EdgeIndex b) const {
  check_edge(a);
  check_edge(b);
  const Edge& x = graph_.edges()[a];
  const Edge& y = graph_.edges()[b];
  return std::min({distances_(x.u, y.u), distances_(x.u, y.v), distances_(x.v, y.u),
                   distances_(x.v, y.v)});
}

std::size_t UnicyclicDecomposition::dist_in_tree_minus_edge(EdgeIndex e, Vertex r, Vertex j) const {
  check_edge(e);
  check_vertex(r);
  check_vertex(j);
  const std::size_t p = edge_cycle_position_[e];
  if (p == kNone) throw GraphError("edge e" + std::to_string(e + 1) + " is not on the cycle");
  const std::size_t len = cycle_.length();
  const std::size_t q = cycle_position_[anchor_[j]];
  // Deleting e turns the cycle into a path; r walks away from the other endpoint.
  std::size_t along;
  if (r == cycle_.vertices[p]) {
    along = (p + len - q) % len;
  } else if (r == cycle_.vertices[(p + 1) % len]) {
    along = (q + len - (p + 1)) % len;
  } else {
    throw GraphError("vertex " + std::to_string(r + 1) + " is not an endpoint of edge e" +
                     std::to_string(e + 1));
  }
  return along + depth_[j];
}

}  // namespace unicyclic
