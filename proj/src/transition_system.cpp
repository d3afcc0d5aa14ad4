#include "boolnet/transition_system.hpp"

#include <algorithm>
#include <queue>

namespace boolnet {

std::optional<int> TransitionSystem::state_index(std::string_view name) const {
  for (int i = 0; i < num_states(); ++i) {
    if (state_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::optional<int> TransitionSystem::event_index(std::string_view name) const {
  for (int i = 0; i < num_events(); ++i) {
    if (event_names_[i] == name) return i;
  }
  return std::nullopt;
}

std::vector<int> TransitionSystem::bfs_order() const {
  std::vector<int> order;
  order.reserve(num_states());
  std::vector<char> seen(num_states(), 0);
  std::queue<int> queue;
  queue.push(initial_);
  seen[initial_] = 1;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop();
    order.push_back(s);
    for (int e = 0; e < num_events(); ++e) {
      int t = delta(s, e);
      if (t >= 0 && !seen[t]) {
        seen[t] = 1;
        queue.push(t);
      }
    }
  }
  return order;
}

int TransitionSystem::compute_bound() const {
  std::vector<int> in(num_states(), 0), out(num_states(), 0);
  for (const Arc& a : arcs_) {
    ++out[a.src];
    ++in[a.dst];
  }
  int bound = 0;
  for (int s = 0; s < num_states(); ++s) {
    bound = std::max({bound, in[s], out[s]});
  }
  return bound;
}

TsBuilder& TsBuilder::name(std::string n) {
  name_ = std::move(n);
  return *this;
}

int TsBuilder::state_id(std::string_view name) {
  for (int i = 0; i < static_cast<int>(state_names_.size()); ++i) {
    if (state_names_[i] == name) return i;
  }
  state_names_.emplace_back(name);
  return static_cast<int>(state_names_.size()) - 1;
}

int TsBuilder::event_id(std::string_view name) {
  for (int i = 0; i < static_cast<int>(event_names_.size()); ++i) {
    if (event_names_[i] == name) return i;
  }
  event_names_.emplace_back(name);
  return static_cast<int>(event_names_.size()) - 1;
}

TsBuilder& TsBuilder::initial(std::string_view state) {
  if (state.empty()) {
    errors_.push_back("empty state name");
    return *this;
  }
  int s = state_id(state);
  if (initial_ >= 0 && initial_ != s) {
    errors_.push_back("initial state declared twice");
  }
  initial_ = s;
  return *this;
}

TsBuilder& TsBuilder::arc(std::string_view src, std::string_view event,
                          std::string_view dst) {
  if (src.empty() || event.empty() || dst.empty()) {
    errors_.push_back("empty name in arc declaration");
    return *this;
  }
  arcs_.push_back({state_id(src), event_id(event), state_id(dst)});
  return *this;
}

TsBuilder& TsBuilder::event(std::string_view event) {
  if (event.empty()) {
    errors_.push_back("empty event name");
    return *this;
  }
  event_id(event);
  return *this;
}

TsBuildResult TsBuilder::build() const {
  TsBuildResult result;
  result.errors = errors_;

  if (initial_ < 0) {
    result.errors.push_back("no initial state declared");
  }
  if (!result.errors.empty()) return result;

  int n = static_cast<int>(state_names_.size());
  int k = static_cast<int>(event_names_.size());

  std::vector<int> delta(static_cast<size_t>(n) * std::max(k, 1), -1);
  std::vector<Arc> arcs;
  arcs.reserve(arcs_.size());
  for (const Arc& a : arcs_) {
    int& cell = delta[static_cast<size_t>(a.src) * k + a.event];
    if (cell == a.dst) {
      result.warnings.push_back("duplicate arc " + state_names_[a.src] + " " +
                                event_names_[a.event] + " " +
                                state_names_[a.dst] + " ignored");
      continue;
    }
    if (cell >= 0) {
      result.errors.push_back("nondeterministic arcs on state " +
                              state_names_[a.src] + " and event " +
                              event_names_[a.event]);
      continue;
    }
    cell = a.dst;
    arcs.push_back(a);
  }
  if (!result.errors.empty()) return result;

  // reachability from the initial state
  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  queue.push(initial_);
  seen[initial_] = 1;
  int reached = 0;
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop();
    ++reached;
    for (int e = 0; e < k; ++e) {
      int t = delta[static_cast<size_t>(s) * k + e];
      if (t >= 0 && !seen[t]) {
        seen[t] = 1;
        queue.push(t);
      }
    }
  }
  if (reached != n) {
    for (int s = 0; s < n; ++s) {
      if (!seen[s]) {
        result.errors.push_back("state " + state_names_[s] +
                                " unreachable from the initial state");
      }
    }
    return result;
  }

  TransitionSystem ts;
  ts.name_ = name_;
  ts.initial_ = initial_;
  ts.state_names_ = state_names_;
  ts.event_names_ = event_names_;
  ts.arcs_ = std::move(arcs);
  ts.delta_ = std::move(delta);
  result.ts = std::move(ts);
  return result;
}

}  // namespace boolnet
