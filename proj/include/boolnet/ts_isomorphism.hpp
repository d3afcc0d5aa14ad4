#pragma once

#include "boolnet/transition_system.hpp"

namespace boolnet {

// Isomorphism that renames states but keeps event labels: both systems must
// use the same event names, and determinism pins the only possible state
// matching (follow arcs from the paired initial states).
bool ts_isomorphic(const TransitionSystem& a, const TransitionSystem& b);

}  // namespace boolnet
