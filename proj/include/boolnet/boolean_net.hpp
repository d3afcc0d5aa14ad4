#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "boolnet/net_type.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

using Marking = std::vector<uint8_t>;

// A boolean Petri net of some type: places carry one boolean each, and the
// flow function assigns every place/transition pair a member of the type
// (nop when they do not interact).
class BooleanNet {
 public:
  BooleanNet(std::string name, NetType type);

  const std::string& name() const { return name_; }
  const NetType& type() const { return type_; }

  int add_place(const std::string& name, int initial);
  int add_transition(const std::string& name);
  // Pre: the interaction belongs to the net's type.
  void set_flow(int place, int transition, Interaction i);

  int num_places() const { return static_cast<int>(place_names_.size()); }
  int num_transitions() const { return static_cast<int>(transition_names_.size()); }
  const std::string& place_name(int p) const { return place_names_[p]; }
  const std::string& transition_name(int t) const { return transition_names_[t]; }
  std::optional<int> place_index(std::string_view name) const;
  std::optional<int> transition_index(std::string_view name) const;
  Interaction flow(int place, int transition) const;
  const Marking& initial_marking() const { return initial_; }

  // nullopt when some place's interaction is undefined at its current value.
  std::optional<Marking> fire(const Marking& m, int transition) const;

  struct ReachResult {
    std::optional<TransitionSystem> ts;
    bool capped = false;       // hit the marking cap before exhausting
    size_t markings = 0;       // visited markings
  };

  // Breadth-first exploration from the initial marking; markings are named
  // m0, m1, ... in discovery order and transitions are tried in index
  // order.  Every transition is registered as an event even if it never
  // fires.  Exploration stops (capped) after visiting `cap` markings.
  ReachResult reachability_graph(size_t cap = size_t{1} << 20) const;

 private:
  std::string name_;
  NetType type_;
  std::vector<std::string> place_names_;
  std::vector<std::string> transition_names_;
  Marking initial_;
  std::vector<Interaction> flows_;  // place-major: flows_[p * T + t]
};

}  // namespace boolnet
