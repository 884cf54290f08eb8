#pragma once

// Shared inputs and brute-force oracles for the test suites. Nothing here
// calls into the distance or decomposition code under test.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "unicyclic/generator.hpp"
#include "unicyclic/graph.hpp"
#include "unicyclic/rational_matrix.hpp"

namespace fixtures {

using unicyclic::Edge;
using unicyclic::Graph;
using unicyclic::RationalMatrix;

// The 9-vertex even unicyclic example; line i defines e_i.
inline constexpr const char* kExampleText =
    "9 9\n4 8\n4 6\n1 2\n2 5\n2 3\n5 7\n4 9\n5 9\n4 7\n";

inline constexpr const char* kTriangleText = "3 3\n1 2\n2 3\n1 3\n";
inline constexpr const char* kFourCycleText = "4 4\n1 2\n2 3\n3 4\n4 1\n";
inline constexpr const char* kPathText = "3 2\n1 2\n2 3\n";

// Incidence matrix for the example (rows = vertices 1..9).
inline constexpr std::array<std::array<int, 9>, 9> kExampleM = {{
    {0, 0, 1, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 0, 0},
    {1, 1, 0, 0, 0, 0, 1, 0, 1},
    {0, 0, 0, 1, 0, 1, 0, 1, 0},
    {0, 1, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 1, 0, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 1, 0},
}};

// 36 * H for the example (rows = edges e1..e9, cols = vertices).
inline constexpr std::array<std::array<int, 9>, 9> kExampleH36 = {{
    {4, -4, 4, 4, 4, -4, -4, 32, -4},
    {4, -4, 4, 4, 4, 32, -4, -4, -4},
    {32, 4, -4, -4, -4, 4, 4, 4, 4},
    {-24, 24, -24, 12, 12, -12, -12, -12, -12},
    {-4, 4, 32, -4, -4, 4, 4, 4, 4},
    {10, -10, 10, -8, 10, 8, 17, 8, -1},
    {-6, 6, -6, 12, -6, -12, -3, -12, 15},
    {10, -10, 10, -8, 10, 8, -1, 8, 17},
    {-6, 6, -6, 12, -6, -12, 15, -12, -3},
}};

template <std::size_t R, std::size_t C>
RationalMatrix to_matrix(const std::array<std::array<int, C>, R>& a, std::int64_t den = 1) {
  RationalMatrix m(R, C);
  for (std::size_t i = 0; i < R; ++i) {
    for (std::size_t j = 0; j < C; ++j) m(i, j) = unicyclic::Rational(a[i][j], den);
  }
  return m;
}

inline constexpr int kInf = 1 << 28;

// All-pairs distances by Floyd-Warshall, optionally with one edge removed.
inline std::vector<std::vector<int>> floyd_warshall(const Graph& g, std::size_t skip = SIZE_MAX) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<int>> d(n, std::vector<int>(n, kInf));
  for (std::size_t v = 0; v < n; ++v) d[v][v] = 0;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e == skip) continue;
    d[g.edges()[e].u][g.edges()[e].v] = 1;
    d[g.edges()[e].v][g.edges()[e].u] = 1;
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

// Component label per vertex after deleting edge `skip` (union-find).
inline std::vector<std::size_t> components_without(const Graph& g, std::size_t skip) {
  std::vector<std::size_t> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  const auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (e != skip) parent[find(g.edges()[e].u)] = find(g.edges()[e].v);
  }
  std::vector<std::size_t> label(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) label[v] = find(v);
  return label;
}

// Cycle edges are exactly the edges whose removal keeps the graph connected.
inline std::vector<bool> brute_cycle_edges(const Graph& g) {
  std::vector<bool> out(g.edge_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto label = components_without(g, e);
    out[e] = std::all_of(label.begin(), label.end(), [&](std::size_t l) { return l == label[0]; });
  }
  return out;
}

inline std::vector<bool> brute_cycle_vertices(const Graph& g) {
  const auto cyc = brute_cycle_edges(g);
  std::vector<bool> out(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (cyc[e]) out[g.edges()[e].u] = out[g.edges()[e].v] = true;
  }
  return out;
}

// Seeded random unicyclic graph with n in [lo, hi] and the requested parity.
inline Graph random_unicyclic(std::uint64_t seed, std::size_t lo, std::size_t hi,
                              unicyclic::CycleParity parity) {
  const std::size_t min_n = parity == unicyclic::CycleParity::Even ? std::max<std::size_t>(lo, 4)
                                                                   : std::max<std::size_t>(lo, 3);
  const std::size_t n = min_n + static_cast<std::size_t>((seed * 2654435761ULL) % (hi - min_n + 1));
  return unicyclic::generate_unicyclic({n, std::nullopt, parity, seed});
}

}  // namespace fixtures
