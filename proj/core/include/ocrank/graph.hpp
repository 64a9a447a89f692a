#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ocrank::graph {

using Node = std::uint32_t;
using Adjacency = std::vector<std::vector<Node>>;

struct SccDecomposition {
  /// Components in topological order: every edge goes from an earlier or the same component.
  std::vector<std::vector<Node>> components;
  std::vector<std::uint32_t> component_of;
};

/// Tarjan's algorithm, iterative.
SccDecomposition strongly_connected_components(const Adjacency& adj);

std::vector<bool> reachable_from(const Adjacency& adj, std::span<const Node> sources);

Adjacency reversed(const Adjacency& adj);

/// Nodes both reachable from `sources` and co-reachable to `targets`.
std::vector<bool> useful_nodes(const Adjacency& adj, std::span<const Node> sources,
                               std::span<const Node> targets);

}  // namespace ocrank::graph
