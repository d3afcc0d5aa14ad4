#include "boolnet/region.hpp"

namespace boolnet {

bool region_valid(const TransitionSystem& ts, const NetType& type,
                  const Region& r) {
  if (static_cast<int>(r.sup.size()) != ts.num_states()) return false;
  if (static_cast<int>(r.sig.size()) != ts.num_events()) return false;
  for (uint8_t v : r.sup) {
    if (v > 1) return false;
  }
  for (Interaction i : r.sig) {
    if (!type.contains(i)) return false;
  }
  for (const Arc& a : ts.arcs()) {
    int next = interaction_apply_or(r.sig[a.event], r.sup[a.src]);
    if (next != r.sup[a.dst]) return false;
  }
  return true;
}

std::optional<Region> extend_region(const TransitionSystem& ts, int sup_init,
                                    const std::vector<Interaction>& sig) {
  Region r;
  r.sig = sig;
  r.sup.assign(ts.num_states(), 2);  // 2 = unknown
  r.sup[ts.initial()] = static_cast<uint8_t>(sup_init);
  // BFS propagation; each state is visited once, then every arc is checked.
  for (int s : ts.bfs_order()) {
    int x = r.sup[s];
    for (int e = 0; e < ts.num_events(); ++e) {
      int t = ts.delta(s, e);
      if (t < 0) continue;
      int y = interaction_apply_or(sig[e], x);
      if (y < 0) return std::nullopt;
      if (r.sup[t] == 2) {
        r.sup[t] = static_cast<uint8_t>(y);
      } else if (r.sup[t] != y) {
        return std::nullopt;
      }
    }
  }
  return r;
}

std::vector<Region> enumerate_regions(const TransitionSystem& ts,
                                      const NetType& type) {
  std::vector<Region> out;
  std::vector<Interaction> members = type.members();
  if (members.empty()) return out;
  int k = ts.num_events();
  std::vector<int> choice(k, 0);
  std::vector<Interaction> sig(k, members[0]);
  for (;;) {
    for (int init = 0; init <= 1; ++init) {
      if (auto r = extend_region(ts, init, sig)) {
        out.push_back(std::move(*r));
      }
    }
    int pos = 0;
    while (pos < k) {
      if (++choice[pos] < static_cast<int>(members.size())) {
        sig[pos] = members[choice[pos]];
        break;
      }
      choice[pos] = 0;
      sig[pos] = members[0];
      ++pos;
    }
    if (pos == k) break;
  }
  return out;
}

}  // namespace boolnet
