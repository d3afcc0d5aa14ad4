#include "boolnet/interaction.hpp"

namespace boolnet {

std::string_view to_string(Interaction i) {
  switch (i) {
    case Interaction::nop: return "nop";
    case Interaction::inp: return "inp";
    case Interaction::out: return "out";
    case Interaction::set: return "set";
    case Interaction::res: return "res";
    case Interaction::swap: return "swap";
    case Interaction::used: return "used";
    case Interaction::free: return "free";
  }
  return "?";
}

std::optional<Interaction> interaction_from_string(std::string_view s) {
  for (Interaction i : all_interactions()) {
    if (to_string(i) == s) return i;
  }
  return std::nullopt;
}

}  // namespace boolnet
