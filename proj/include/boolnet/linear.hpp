#pragma once

#include "boolnet/net_type.hpp"
#include "boolnet/solver.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

// Polynomial decision procedures for the table rows whose hardness
// threshold lies above the input's bound.

// A 1-bounded deterministic reachable TS is a simple path or a single
// cycle through the initial state; anything else exceeds bound 1.
struct LinearShape {
  enum class Kind { simple_path, directed_cycle, neither };
  Kind kind = Kind::neither;
  // Arcs in walk order from the initial state; for cycles the last arc
  // returns to it.
  std::vector<Arc> sequence;
  // Events with two consecutive occurrences onto distinct states (wrapping
  // around for cycles).  Any such event makes the input unsolvable for the
  // swap-free types handled here.
  std::vector<int> repeated_in_a_row;
};

LinearShape classify_linear(const TransitionSystem& ts);

// Types handled by decide_one_bounded: {nop,inp,set}, {nop,inp,set,used},
// their polarity mirrors, and {nop,set,res} with at least one of inp, out,
// used, free.
bool linear_decider_applies(NetType type);

// Pre: linear_decider_applies(type) and ts.compute_bound() <= 1, so ts is a
// simple path or a simple cycle.  Returns witness regions when solvable.
DecideResult decide_one_bounded(const TransitionSystem& ts, NetType type);

// The path closed into a cycle by one fresh event from the last state back
// to the initial state.  Pre: ts is a simple path.
TransitionSystem cycle_extension(const TransitionSystem& ts);

// Types and bounds handled by decide_small_g.
bool small_bound_decider_applies(NetType type, int g);

// Pre: small_bound_decider_applies(type, g) and ts.compute_bound() <= g.
// Verdict only: no witness regions are produced.
DecideResult decide_small_g(const TransitionSystem& ts, NetType type, int g);

}  // namespace boolnet
