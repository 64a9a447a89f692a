#include "ocrank/graph.hpp"

#include <algorithm>
#include <limits>

namespace ocrank::graph {

SccDecomposition strongly_connected_components(const Adjacency& adj) {
  constexpr std::uint32_t unvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> index(n, unvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Node> stack;
  std::vector<std::pair<Node, std::size_t>> call;  // node, next edge position
  std::uint32_t counter = 0;
  SccDecomposition out;
  out.component_of.assign(n, unvisited);

  for (Node root = 0; root < n; ++root) {
    if (index[root] != unvisited) continue;
    call.emplace_back(root, 0);
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      if (pos < adj[v].size()) {
        Node w = adj[v][pos++];
        if (index[w] == unvisited) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = true;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      Node done = v;
      call.pop_back();
      if (!call.empty()) {
        Node parent = call.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Node> comp;
        Node w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        out.components.push_back(std::move(comp));
      }
    }
  }
  // Tarjan emits sinks first.
  std::reverse(out.components.begin(), out.components.end());
  for (std::uint32_t c = 0; c < out.components.size(); ++c) {
    for (Node v : out.components[c]) out.component_of[v] = c;
  }
  return out;
}

std::vector<bool> reachable_from(const Adjacency& adj, std::span<const Node> sources) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<Node> todo;
  for (Node s : sources) {
    if (!seen[s]) {
      seen[s] = true;
      todo.push_back(s);
    }
  }
  while (!todo.empty()) {
    Node v = todo.back();
    todo.pop_back();
    for (Node w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        todo.push_back(w);
      }
    }
  }
  return seen;
}

Adjacency reversed(const Adjacency& adj) {
  Adjacency rev(adj.size());
  for (Node v = 0; v < adj.size(); ++v) {
    for (Node w : adj[v]) rev[w].push_back(v);
  }
  return rev;
}

std::vector<bool> useful_nodes(const Adjacency& adj, std::span<const Node> sources,
                               std::span<const Node> targets) {
  auto fwd = reachable_from(adj, sources);
  auto bwd = reachable_from(reversed(adj), targets);
  for (std::size_t i = 0; i < fwd.size(); ++i) fwd[i] = fwd[i] && bwd[i];
  return fwd;
}

}  // namespace ocrank::graph
