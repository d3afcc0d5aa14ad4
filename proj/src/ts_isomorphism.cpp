#include "boolnet/ts_isomorphism.hpp"

#include <queue>
#include <vector>

namespace boolnet {

bool ts_isomorphic(const TransitionSystem& a, const TransitionSystem& b) {
  if (a.num_states() != b.num_states()) return false;
  if (a.num_events() != b.num_events()) return false;

  // match events by name
  std::vector<int> event_map(a.num_events());
  for (int e = 0; e < a.num_events(); ++e) {
    auto idx = b.event_index(a.event_name(e));
    if (!idx) return false;
    event_map[e] = *idx;
  }

  // determinism + reachability force the state matching
  std::vector<int> state_map(a.num_states(), -1);
  std::vector<char> used(b.num_states(), 0);
  state_map[a.initial()] = b.initial();
  used[b.initial()] = 1;
  std::queue<int> queue;
  queue.push(a.initial());
  while (!queue.empty()) {
    int s = queue.front();
    queue.pop();
    int t = state_map[s];
    for (int e = 0; e < a.num_events(); ++e) {
      int sn = a.delta(s, e);
      int tn = b.delta(t, event_map[e]);
      if ((sn < 0) != (tn < 0)) return false;
      if (sn < 0) continue;
      if (state_map[sn] < 0) {
        if (used[tn]) return false;  // two states of a would map to tn
        state_map[sn] = tn;
        used[tn] = 1;
        queue.push(sn);
      } else if (state_map[sn] != tn) {
        return false;
      }
    }
  }
  // equal counts and injectivity make the forced matching total
  for (int s = 0; s < a.num_states(); ++s) {
    if (state_map[s] < 0) return false;
  }
  return true;
}

}  // namespace boolnet
