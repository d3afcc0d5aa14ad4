#include "boolnet/atoms.hpp"

#include <algorithm>

namespace boolnet {

std::vector<Atom> enumerate_atoms(const TransitionSystem& ts) {
  std::vector<Atom> atoms;
  std::vector<int> order = ts.bfs_order();
  int n = ts.num_states();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      atoms.push_back(ssp_atom(order[i], order[j]));
    }
  }
  std::vector<int> events(ts.num_events());
  for (int e = 0; e < ts.num_events(); ++e) events[e] = e;
  std::sort(events.begin(), events.end(), [&](int x, int y) {
    return ts.event_name(x) < ts.event_name(y);
  });
  for (int s : order) {
    for (int e : events) {
      if (ts.delta(s, e) < 0) atoms.push_back(essp_atom(e, s));
    }
  }
  return atoms;
}

bool region_separates(const Region& r, const Atom& atom) {
  if (atom.kind == Atom::Kind::state_pair) {
    return r.sup[atom.a] != r.sup[atom.b];
  }
  return !interaction_defined(r.sig[atom.a], r.sup[atom.b]);
}

std::string atom_to_string(const TransitionSystem& ts, const Atom& atom) {
  if (atom.kind == Atom::Kind::state_pair) {
    return "states (" + ts.state_name(atom.a) + ", " + ts.state_name(atom.b) +
           ")";
  }
  return "event " + ts.event_name(atom.a) + " at state " +
         ts.state_name(atom.b);
}

}  // namespace boolnet
