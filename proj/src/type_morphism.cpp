#include "boolnet/type_morphism.hpp"

namespace boolnet {

Interaction polarity_swap(Interaction i) {
  switch (i) {
    case Interaction::nop: return Interaction::nop;
    case Interaction::swap: return Interaction::swap;
    case Interaction::inp: return Interaction::out;
    case Interaction::out: return Interaction::inp;
    case Interaction::set: return Interaction::res;
    case Interaction::res: return Interaction::set;
    case Interaction::used: return Interaction::free;
    case Interaction::free: return Interaction::used;
  }
  return i;
}

NetType polarity_swap(NetType type) {
  NetType out;
  for (Interaction i : all_interactions()) {
    if (type.contains(i)) out = out.with(polarity_swap(i));
  }
  return out;
}

Region polarity_transport(const Region& r) {
  Region out = r;
  for (uint8_t& v : out.sup) v = static_cast<uint8_t>(1 - v);
  for (Interaction& i : out.sig) i = polarity_swap(i);
  return out;
}

bool polarity_isomorphic(NetType a, NetType b) {
  return polarity_swap(a) == b;
}

}  // namespace boolnet
