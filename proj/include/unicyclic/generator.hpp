#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "unicyclic/graph.hpp"

namespace unicyclic {

enum class CycleParity { Even, Odd, Any };

/// Throws std::invalid_argument for anything but "even", "odd" or "any".
CycleParity parse_parity(std::string_view text);

struct GenSpec {
  std::size_t n = 0;
  /// Unset: drawn uniformly from the lengths in [3, n] matching `parity`.
  std::optional<std::size_t> cycle_length;
  CycleParity parity = CycleParity::Any;
  std::uint64_t seed = 0;
};

/// Seeded random unicyclic graph: a cycle on the first |C| vertices, then each
/// remaining vertex attached to a uniformly chosen earlier vertex, followed by
/// a random relabelling and edge shuffle. Deterministic for a fixed seed.
/// Not uniform over unicyclic graphs.
///
/// Throws GraphError when |C| < 3, |C| > n, or the parity cannot be met.
Graph generate_unicyclic(const GenSpec& spec);

}  // namespace unicyclic
