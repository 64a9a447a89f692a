#include "ocrank/transducer.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "internal.hpp"
#include "ocrank/graph.hpp"

namespace ocrank {

// Transducer -------------------------------------------------------------------

Transducer::Transducer(OrderedAlphabet output_alphabet) : alphabet_(std::move(output_alphabet)) {}

StateId Transducer::add_state(std::string name) {
  if (find_state(name)) throw ValidationError("duplicate state name '" + name + "'");
  names_.push_back(std::move(name));
  final_.push_back(false);
  return static_cast<StateId>(names_.size() - 1);
}

void Transducer::set_initial(StateId q) {
  if (q >= names_.size()) throw ValidationError("initial state out of range");
  initial_ = q;
}

void Transducer::set_final(StateId q, bool value) { final_.at(q) = value; }

void Transducer::add_transition(StateId from, int bit, StateId to, std::string_view output_regex) {
  auto dfa = std::make_shared<const Automaton>(compile(output_regex, alphabet_));
  add_transition(from, bit, to, std::string(output_regex), std::move(dfa));
}

void Transducer::add_transition(StateId from, int bit, StateId to, std::string output_text,
                                std::shared_ptr<const Automaton> output) {
  if (from >= names_.size() || to >= names_.size()) throw ValidationError("transition endpoint out of range");
  if (bit != 0 && bit != 1) throw ValidationError("transition input must be 0 or 1");
  for (const auto& t : transitions_) {
    if (t.from == from && t.bit == bit && t.to == to) {
      throw ValidationError("duplicate transition " + names_[from] + " --" + std::to_string(bit) + "--> " +
                            names_[to]);
    }
  }
  transitions_.push_back({from, static_cast<std::uint8_t>(bit), to, std::move(output_text), std::move(output)});
}

std::optional<StateId> Transducer::find_state(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<StateId>(it - names_.begin());
}

std::vector<StateId> Transducer::finals() const {
  std::vector<StateId> r;
  for (StateId q = 0; q < names_.size(); ++q)
    if (final_[q]) r.push_back(q);
  return r;
}

CounterGraph Transducer::counter_graph() const {
  CounterGraph g;
  g.num_states = num_states();
  g.initial = initial_;
  g.finals = finals();
  g.names = names_;
  for (const auto& t : transitions_) g.edges.push_back({t.from, t.bit == 1, t.to});
  return g;
}

// Validation ---------------------------------------------------------------------

void check_well_formed(const Transducer& m) {
  if (m.num_states() == 0) throw ValidationError("machine has no states");
  if (m.initial() >= m.num_states()) throw ValidationError("initial state out of range");
  if (m.finals().empty()) throw ValidationError("machine has no final state");
  for (const auto& t : m.transitions()) {
    if (!t.output || is_empty(*t.output)) {
      throw ValidationError("output of " + m.name(t.from) + " --" + std::to_string(t.bit) + "--> " + m.name(t.to) +
                            " has an empty language");
    }
  }
}

namespace {

std::string fresh_name(const Transducer& m, const std::string& base) {
  std::string name = base;
  while (m.find_state(name)) name += "'";
  return name;
}

Transducer trimmed(const Transducer& m) {
  graph::Adjacency adj(m.num_states());
  for (const auto& t : m.transitions()) adj[t.from].push_back(t.to);
  graph::Node init = m.initial();
  auto finals = m.finals();
  auto useful = graph::useful_nodes(adj, std::span<const graph::Node>(&init, 1), finals);
  useful[m.initial()] = true;
  Transducer out(m.output_alphabet());
  out.label = m.label;
  std::vector<StateId> map(m.num_states(), 0);
  for (StateId q = 0; q < m.num_states(); ++q)
    if (useful[q]) map[q] = out.add_state(m.name(q));
  out.set_initial(map[m.initial()]);
  for (StateId q = 0; q < m.num_states(); ++q)
    if (useful[q] && m.is_final(q)) out.set_final(map[q]);
  for (const auto& t : m.transitions())
    if (useful[t.from] && useful[t.to]) out.add_transition(map[t.from], t.bit, map[t.to], t.output_text, t.output);
  return out;
}

}  // namespace

Transducer validate(const Transducer& m) {
  check_well_formed(m);
  const auto& ts = m.transitions();
  auto has_incoming = [&](StateId q) { return std::any_of(ts.begin(), ts.end(), [&](auto& t) { return t.to == q; }); };
  auto has_outgoing = [&](StateId q) { return std::any_of(ts.begin(), ts.end(), [&](auto& t) { return t.from == q; }); };

  Transducer out(m.output_alphabet());
  out.label = m.label;
  for (StateId q = 0; q < m.num_states(); ++q) out.add_state(m.name(q));
  for (const auto& t : ts) out.add_transition(t.from, t.bit, t.to, t.output_text, t.output);

  // Fresh source copying the outgoing transitions of q0.
  StateId source = m.initial();
  if (has_incoming(m.initial())) {
    source = out.add_state(fresh_name(out, m.name(m.initial()) + "_in"));
    for (const auto& t : ts)
      if (t.from == m.initial()) out.add_transition(source, t.bit, t.to, t.output_text, t.output);
  }
  out.set_initial(source);
  if (m.is_final(m.initial())) out.set_final(source);

  // Sink copies of final states that can continue.
  for (StateId f = 0; f < m.num_states(); ++f) {
    if (!m.is_final(f)) continue;
    if (!has_outgoing(f)) {
      out.set_final(f);
      continue;
    }
    StateId sink = out.add_state(fresh_name(out, m.name(f) + "_out"));
    out.set_final(sink);
    // Incoming transitions of f, including those of the fresh source.
    auto snapshot = out.transitions();
    for (const auto& t : snapshot)
      if (t.to == f) out.add_transition(t.from, t.bit, sink, t.output_text, t.output);
  }
  return trimmed(out);
}

NSetReport reach_sets(const Transducer& m, const ReachOptions& options) {
  check_well_formed(m);
  return reach_sets(m.counter_graph(), options);
}

// Runs ---------------------------------------------------------------------------

std::vector<Run> accepting_runs(const Transducer& m, std::string_view input) {
  check_binary(input);
  std::vector<Run> out;
  Run cur{{m.initial()}, Word(input)};
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    StateId q = cur.states.back();
    if (i == input.size()) {
      if (m.is_final(q)) out.push_back(cur);
      return;
    }
    int bit = input[i] - '0';
    for (const auto& t : m.transitions()) {
      if (t.from != q || t.bit != bit) continue;
      cur.states.push_back(t.to);
      go(i + 1);
      cur.states.pop_back();
    }
  };
  go(0);
  return out;
}

// Output languages ---------------------------------------------------------------

Automaton step_language(const Transducer& m, std::string_view input, StateId from, StateId to) {
  check_binary(input);
  const std::size_t n = m.num_states();
  std::vector<LabeledEdge> edges;
  for (std::size_t i = 0; i < input.size(); ++i) {
    int bit = input[i] - '0';
    for (const auto& t : m.transitions()) {
      if (t.bit != bit) continue;
      edges.push_back({static_cast<std::uint32_t>(i * n + t.from), static_cast<std::uint32_t>((i + 1) * n + t.to),
                       t.output.get()});
    }
  }
  std::uint32_t start = from;
  std::uint32_t accept = static_cast<std::uint32_t>(input.size() * n + to);
  return path_language(m.output_alphabet(), (input.size() + 1) * n, edges, std::span(&start, 1),
                       std::span(&accept, 1), false);
}

Automaton step_language(const Transducer& m, std::string_view input) {
  Automaton out(m.output_alphabet());
  for (StateId f : m.finals()) out = unite(out, step_language(m, input, m.initial(), f));
  return out;
}

namespace detail {

Automaton layered_dyck_language(const OrderedAlphabet& alphabet, std::size_t num_states, std::uint32_t initial,
                                const std::vector<bool>& final, const std::vector<BitEdge>& edges,
                                std::size_t max_input, bool accept_empty) {
  std::vector<std::vector<const BitEdge*>> out(num_states);
  for (const auto& e : edges) out[e.from].push_back(&e);
  // Layered node (state, depth, length); the depth must stay closable.
  std::map<std::tuple<std::uint32_t, std::size_t, std::size_t>, std::uint32_t> index;
  std::vector<std::tuple<std::uint32_t, std::size_t, std::size_t>> nodes;
  auto node = [&](std::uint32_t q, std::size_t d, std::size_t l) {
    auto [it, fresh] = index.emplace(std::make_tuple(q, d, l), static_cast<std::uint32_t>(nodes.size()));
    if (fresh) nodes.emplace_back(q, d, l);
    return it->second;
  };
  std::vector<LabeledEdge> layered;
  std::vector<std::uint32_t> accepts;
  node(initial, 0, 0);
  if (accept_empty) accepts.push_back(0);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    auto [q, d, l] = nodes[i];
    if (l >= max_input) continue;
    for (const BitEdge* e : out[q]) {
      if (e->bit == 1 && d == 0) continue;
      std::size_t d2 = e->bit == 0 ? d + 1 : d - 1;
      if (d2 > max_input - (l + 1)) continue;
      bool seen = index.count(std::make_tuple(e->to, d2, l + 1)) > 0;
      std::uint32_t target = node(e->to, d2, l + 1);
      if (!seen && d2 == 0 && final[e->to]) accepts.push_back(target);
      layered.push_back({static_cast<std::uint32_t>(i), target, e->output});
    }
  }
  std::uint32_t start = 0;
  return path_language(alphabet, nodes.size(), layered, std::span(&start, 1), accepts, false);
}

std::string dot_escape(const std::string& s) {
  std::string r;
  for (char c : s) {
    if (c == '"' || c == '\\') r.push_back('\\');
    r.push_back(c);
  }
  return r;
}

}  // namespace detail

Automaton dyck_bounded_language(const Transducer& m, std::size_t max_input) {
  std::vector<detail::BitEdge> edges;
  for (const auto& t : m.transitions()) edges.push_back({t.from, t.bit, t.to, t.output.get()});
  std::vector<bool> final(m.num_states());
  for (StateId q = 0; q < m.num_states(); ++q) final[q] = m.is_final(q);
  return detail::layered_dyck_language(m.output_alphabet(), m.num_states(), m.initial(), final, edges, max_input,
                                       m.is_final(m.initial()));
}

Automaton output_overapproximation(const Transducer& m) {
  std::vector<LabeledEdge> edges;
  for (const auto& t : m.transitions()) edges.push_back({t.from, t.to, t.output.get()});
  std::uint32_t start = m.initial();
  auto finals = m.finals();
  return path_language(m.output_alphabet(), m.num_states(), edges, std::span(&start, 1), finals, false);
}

std::string to_dot(const Transducer& m) {
  std::ostringstream os;
  os << "digraph \"" << detail::dot_escape(m.label.empty() ? "M" : m.label) << "\" {\n  rankdir=LR;\n";
  for (StateId q = 0; q < m.num_states(); ++q) {
    os << "  \"" << detail::dot_escape(m.name(q)) << "\" [shape=" << (m.is_final(q) ? "doublecircle" : "circle")
       << (q == m.initial() ? ", style=bold" : "") << "];\n";
  }
  for (const auto& t : m.transitions()) {
    os << "  \"" << detail::dot_escape(m.name(t.from)) << "\" -> \"" << detail::dot_escape(m.name(t.to))
       << "\" [label=\"" << int(t.bit) << " / " << detail::dot_escape(t.output_text) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace ocrank
