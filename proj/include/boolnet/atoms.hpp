#pragma once

#include <string>
#include <vector>

#include "boolnet/region.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

// Separation atoms.  A state pair {a, b} asks for a region whose support
// distinguishes them; an event/state pair (e, s) with e not enabled at s
// asks for a region whose signature of e is undefined at sup(s).
struct Atom {
  enum class Kind { state_pair, event_state };
  Kind kind;
  int a;  // first state, or the event
  int b;  // second state, or the state
  bool operator==(const Atom&) const = default;
};

inline Atom ssp_atom(int s1, int s2) { return {Atom::Kind::state_pair, s1, s2}; }
inline Atom essp_atom(int event, int state) {
  return {Atom::Kind::event_state, event, state};
}

// State-pair atoms first (states paired in breadth-first order), then
// event/state atoms (states in breadth-first order, events by name).
std::vector<Atom> enumerate_atoms(const TransitionSystem& ts);

bool region_separates(const Region& r, const Atom& atom);

std::string atom_to_string(const TransitionSystem& ts, const Atom& atom);

}  // namespace boolnet
