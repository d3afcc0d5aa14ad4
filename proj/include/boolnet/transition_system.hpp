#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace boolnet {

struct Arc {
  int src;
  int event;
  int dst;
  bool operator==(const Arc&) const = default;
};

// Deterministic reachable labelled transition system over anonymous boolean
// nets' event alphabet.  Immutable; construct through TsBuilder, which
// validates determinism and reachability.
class TransitionSystem {
 public:
  const std::string& name() const { return name_; }
  int num_states() const { return static_cast<int>(state_names_.size()); }
  int num_events() const { return static_cast<int>(event_names_.size()); }
  int initial() const { return initial_; }

  const std::string& state_name(int s) const { return state_names_[s]; }
  const std::string& event_name(int e) const { return event_names_[e]; }
  std::optional<int> state_index(std::string_view name) const;
  std::optional<int> event_index(std::string_view name) const;

  // -1 when no arc (s, e, *) exists.
  int delta(int s, int e) const { return delta_[s * num_events() + e]; }

  // Arcs in builder insertion order (duplicates removed).
  const std::vector<Arc>& arcs() const { return arcs_; }

  // States in breadth-first order from the initial state, successors
  // explored in event index order.
  std::vector<int> bfs_order() const;

  // max over states of max(#incoming arcs, #outgoing arcs); self-loops
  // count once on each side.
  int compute_bound() const;

  // An empty system; only TsBuilder produces usable ones.
  TransitionSystem() = default;

 private:
  friend class TsBuilder;

  std::string name_;
  int initial_ = -1;
  std::vector<std::string> state_names_;
  std::vector<std::string> event_names_;
  std::vector<Arc> arcs_;
  std::vector<int> delta_;
};

struct TsBuildResult {
  std::optional<TransitionSystem> ts;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
  bool ok() const { return ts.has_value(); }
};

// Accumulates raw declarations, then validates the whole system at build().
// States and events are indexed in order of first mention.
class TsBuilder {
 public:
  TsBuilder& name(std::string n);
  TsBuilder& initial(std::string_view state);
  TsBuilder& arc(std::string_view src, std::string_view event, std::string_view dst);
  // Registers an event that need not occur on any arc (a net may declare
  // transitions that are never enabled).
  TsBuilder& event(std::string_view event);

  TsBuildResult build() const;

 private:
  int state_id(std::string_view name);
  int event_id(std::string_view name);

  std::string name_ = "ts";
  int initial_ = -1;
  std::vector<std::string> state_names_;
  std::vector<std::string> event_names_;
  std::vector<Arc> arcs_;
  std::vector<std::string> errors_;
};

}  // namespace boolnet
