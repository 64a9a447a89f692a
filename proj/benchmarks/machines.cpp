#include "machines.hpp"

namespace ocrank::bench {

Transducer star_output() {
  Transducer m(OrderedAlphabet("abc"));
  m.label = "star_output";
  auto q0 = m.add_state("q0"), qf = m.add_state("qf");
  m.set_initial(q0);
  m.set_final(qf);
  m.add_transition(q0, 0, q0, "c");
  m.add_transition(q0, 1, qf, "b*a");
  m.add_transition(qf, 1, qf, "b*a");
  return m;
}

Transducer ring(std::size_t n) {
  Transducer m(OrderedAlphabet("ab"));
  m.label = "ring" + std::to_string(n);
  for (std::size_t i = 0; i < n; ++i) m.add_state("r" + std::to_string(i));
  m.set_initial(0);
  m.set_final(0);
  for (std::size_t i = 0; i < n; ++i) {
    m.add_transition(static_cast<StateId>(i), 0, static_cast<StateId>((i + 1) % n), "a");
    m.add_transition(static_cast<StateId>(i), 1, static_cast<StateId>((i + n - 1) % n), "b*");
  }
  return m;
}

Transducer nine_state() {
  Transducer m(OrderedAlphabet("a"));
  m.label = "nine_state";
  for (int i = 0; i < 9; ++i) m.add_state("q" + std::to_string(i));
  m.set_initial(0);
  m.set_final(5);
  m.set_final(8);
  const int edges[][3] = {{0, 0, 1}, {1, 0, 2}, {1, 0, 3}, {1, 0, 4}, {2, 0, 0}, {3, 1, 1},
                          {4, 1, 7}, {4, 1, 5}, {5, 1, 6}, {6, 1, 5}, {7, 1, 8}};
  for (const auto& e : edges) m.add_transition(e[0], e[1], e[2], "a");
  return m;
}

}  // namespace ocrank::bench
