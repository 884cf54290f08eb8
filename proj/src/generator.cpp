#include "unicyclic/generator.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

bool parity_matches(std::size_t length, CycleParity parity) {
  switch (parity) {
    case CycleParity::Even:
      return length % 2 == 0;
    case CycleParity::Odd:
      return length % 2 == 1;
    case CycleParity::Any:
      return true;
  }
  return false;
}

}  // namespace

CycleParity parse_parity(std::string_view text) {
  if (text == "even") return CycleParity::Even;
  if (text == "odd") return CycleParity::Odd;
  if (text == "any") return CycleParity::Any;
  throw std::invalid_argument("parity must be even, odd or any");
}

Graph generate_unicyclic(const GenSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.n;

  std::size_t len = 0;
  if (spec.cycle_length) {
    len = *spec.cycle_length;
    if (len < 3) throw GraphError("cycle length must be at least 3");
    if (len > n) {
      throw GraphError("cycle length " + std::to_string(len) + " exceeds vertex count " +
                       std::to_string(n));
    }
    if (!parity_matches(len, spec.parity)) {
      throw GraphError("cycle length " + std::to_string(len) + " does not have the requested parity");
    }
  } else {
    std::vector<std::size_t> lengths;
    for (std::size_t c = 3; c <= n; ++c) {
      if (parity_matches(c, spec.parity)) lengths.push_back(c);
    }
    if (lengths.empty()) {
      throw GraphError("no cycle length in [3, " + std::to_string(n) + "] has the requested parity");
    }
    len = lengths[std::uniform_int_distribution<std::size_t>(0, lengths.size() - 1)(rng)];
  }

  std::vector<Edge> edges;
  edges.reserve(n);
  for (Vertex v = 0; v < len; ++v) edges.push_back({v, (v + 1) % len});
  for (Vertex v = len; v < n; ++v) {
    edges.push_back({std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v});
  }

  std::vector<Vertex> label(n);
  std::iota(label.begin(), label.end(), Vertex{0});
  std::shuffle(label.begin(), label.end(), rng);
  for (Edge& e : edges) {
    e = {label[e.u], label[e.v]};
    if (rng() & 1U) std::swap(e.u, e.v);
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph(n, std::move(edges));
}

}  // namespace unicyclic
