#pragma once

#include <optional>
#include <vector>

#include "boolnet/interaction.hpp"
#include "boolnet/net_type.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

// A region assigns every state a support value in {0,1} and every event a
// signature interaction, such that for each arc (s, e, s') the signature of
// e is defined at sup(s) and maps it to sup(s').
struct Region {
  std::vector<uint8_t> sup;        // indexed by state
  std::vector<Interaction> sig;    // indexed by event
  bool operator==(const Region&) const = default;
};

bool region_valid(const TransitionSystem& ts, const NetType& type,
                  const Region& r);

// Propagates the support from sup(initial) = sup_init through every arc.
// Since every state is reachable this determines sup completely; returns
// nullopt when a signature is undefined where needed or two propagation
// paths disagree.
std::optional<Region> extend_region(const TransitionSystem& ts, int sup_init,
                                    const std::vector<Interaction>& sig);

// All regions of ts over the given type, by trying every signature vector
// and both initial supports (2 * |type|^|E| propagations).  Intended for
// small systems; the solver searches the same space with pruning.
std::vector<Region> enumerate_regions(const TransitionSystem& ts,
                                      const NetType& type);

}  // namespace boolnet
