#pragma once

#include "ocrank/transducer.hpp"

namespace ocrank::bench {

// q0 --0/c--> q0, q0 --1/b*a--> qf, qf --1/b*a--> qf
Transducer star_output();

// n states on a ring: 0 steps forward, 1 steps back, r0 final. Period n.
Transducer ring(std::size_t n);

// The nine-state machine of the fixtures, outputs all "a".
Transducer nine_state();

}  // namespace ocrank::bench
