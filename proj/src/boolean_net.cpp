#include "boolnet/boolean_net.hpp"

#include <queue>
#include <unordered_map>

namespace boolnet {

namespace {
struct MarkingHash {
  size_t operator()(const Marking& m) const {
    size_t h = 1469598103934665603ull;
    for (uint8_t b : m) {
      h ^= b;
      h *= 1099511628211ull;
    }
    return h;
  }
};
}  // namespace

BooleanNet::BooleanNet(std::string name, NetType type)
    : name_(std::move(name)), type_(type) {}

int BooleanNet::add_place(const std::string& name, int initial) {
  place_names_.push_back(name);
  initial_.push_back(static_cast<uint8_t>(initial));
  flows_.resize(place_names_.size() * transition_names_.size(),
                Interaction::nop);
  // keep place-major layout: new place's row is already nop-filled at the end
  return num_places() - 1;
}

int BooleanNet::add_transition(const std::string& name) {
  // insert a nop column into every existing row
  int t = num_transitions();
  std::vector<Interaction> next(place_names_.size() * (t + 1), Interaction::nop);
  for (int p = 0; p < num_places(); ++p) {
    for (int old = 0; old < t; ++old) {
      next[static_cast<size_t>(p) * (t + 1) + old] =
          flows_[static_cast<size_t>(p) * t + old];
    }
  }
  flows_ = std::move(next);
  transition_names_.push_back(name);
  return t;
}

void BooleanNet::set_flow(int place, int transition, Interaction i) {
  flows_[static_cast<size_t>(place) * num_transitions() + transition] = i;
}

Interaction BooleanNet::flow(int place, int transition) const {
  return flows_[static_cast<size_t>(place) * num_transitions() + transition];
}

std::optional<int> BooleanNet::place_index(std::string_view name) const {
  for (int p = 0; p < num_places(); ++p) {
    if (place_names_[p] == name) return p;
  }
  return std::nullopt;
}

std::optional<int> BooleanNet::transition_index(std::string_view name) const {
  for (int t = 0; t < num_transitions(); ++t) {
    if (transition_names_[t] == name) return t;
  }
  return std::nullopt;
}

std::optional<Marking> BooleanNet::fire(const Marking& m, int transition) const {
  Marking next(m.size());
  for (int p = 0; p < num_places(); ++p) {
    int y = interaction_apply_or(flow(p, transition), m[p]);
    if (y < 0) return std::nullopt;
    next[p] = static_cast<uint8_t>(y);
  }
  return next;
}

BooleanNet::ReachResult BooleanNet::reachability_graph(size_t cap) const {
  ReachResult result;
  std::unordered_map<Marking, int, MarkingHash> index;
  std::vector<Marking> order;
  std::queue<int> queue;

  auto discover = [&](const Marking& m) -> int {
    auto it = index.find(m);
    if (it != index.end()) return it->second;
    int id = static_cast<int>(order.size());
    index.emplace(m, id);
    order.push_back(m);
    queue.push(id);
    return id;
  };

  TsBuilder builder;
  builder.name(name_);
  for (int t = 0; t < num_transitions(); ++t) {
    builder.event(transition_names_[t]);
  }

  discover(initial_);
  builder.initial("m0");
  while (!queue.empty()) {
    if (order.size() > cap) {
      result.capped = true;
      result.markings = order.size();
      return result;
    }
    int id = queue.front();
    queue.pop();
    Marking current = order[id];  // copy: order may reallocate below
    for (int t = 0; t < num_transitions(); ++t) {
      auto next = fire(current, t);
      if (!next) continue;
      int nid = discover(*next);
      builder.arc("m" + std::to_string(id), transition_names_[t],
                  "m" + std::to_string(nid));
    }
  }
  result.markings = order.size();
  TsBuildResult built = builder.build();
  result.ts = std::move(built.ts);
  return result;
}

}  // namespace boolnet
