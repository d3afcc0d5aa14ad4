#pragma once

#include "boolnet/interaction.hpp"
#include "boolnet/net_type.hpp"
#include "boolnet/region.hpp"

namespace boolnet {

// The value involution x -> 1-x lifts to interactions: nop and swap are
// fixed, inp/out, set/res and used/free trade places.  It preserves
// definedness and application, so regions transport along it.
Interaction polarity_swap(Interaction i);
NetType polarity_swap(NetType type);

// Region of (ts, type) -> region of (ts, polarity_swap(type)) separating the
// same atoms: supports flip, signatures swap.
Region polarity_transport(const Region& r);

// True when b = polarity_swap(a) (as unordered relationship, the involution
// is its own inverse).
bool polarity_isomorphic(NetType a, NetType b);

}  // namespace boolnet
