#pragma once

#include <string>
#include <vector>

#include "ocrank/regular.hpp"

namespace ocrank::detail {

struct BitEdge {
  std::uint32_t from;
  std::uint8_t bit;
  std::uint32_t to;
  const Automaton* output;
};

/// Union over Dyck inputs of length <= max_input of the outputs of runs from
/// `initial` to a final state. The empty input counts only if `accept_empty`.
Automaton layered_dyck_language(const OrderedAlphabet& alphabet, std::size_t num_states, std::uint32_t initial,
                                const std::vector<bool>& final, const std::vector<BitEdge>& edges,
                                std::size_t max_input, bool accept_empty);

std::string dot_escape(const std::string& s);

}  // namespace ocrank::detail
