#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace boolnet {

// The eight ways a boolean place can constrain and update a transition.
// Partial interactions (inp, out, used, free) are undefined on one of the
// two place values; firing is blocked there.
enum class Interaction : uint8_t {
  nop = 0,
  inp,
  out,
  set,
  res,
  swap,
  used,
  free,
};

inline constexpr int kInteractionCount = 8;

inline constexpr std::array<Interaction, 8> all_interactions() {
  return {Interaction::nop,  Interaction::inp,  Interaction::out,
          Interaction::set,  Interaction::res,  Interaction::swap,
          Interaction::used, Interaction::free};
}

namespace detail {
// apply_table[i][x]: successor value of a place holding x under interaction i,
// or -1 where the interaction is undefined at x.
inline constexpr int8_t apply_table[8][2] = {
    /* nop  */ {0, 1},
    /* inp  */ {-1, 0},
    /* out  */ {1, -1},
    /* set  */ {1, 1},
    /* res  */ {0, 0},
    /* swap */ {1, 0},
    /* used */ {-1, 1},
    /* free */ {0, -1},
};
}  // namespace detail

constexpr bool interaction_defined(Interaction i, int x) {
  return detail::apply_table[static_cast<int>(i)][x] >= 0;
}

// Pre: interaction_defined(i, x).
constexpr int interaction_apply(Interaction i, int x) {
  return detail::apply_table[static_cast<int>(i)][x];
}

// -1 when undefined.
constexpr int interaction_apply_or(Interaction i, int x) {
  return detail::apply_table[static_cast<int>(i)][x];
}

constexpr bool is_partial(Interaction i) {
  return !interaction_defined(i, 0) || !interaction_defined(i, 1);
}

// enter: defined at 0 and maps it to 1.  exit: defined at 1, maps it to 0.
constexpr bool enters(Interaction i) { return interaction_apply_or(i, 0) == 1; }
constexpr bool exits(Interaction i) { return interaction_apply_or(i, 1) == 0; }
constexpr bool keeps_zero(Interaction i) { return interaction_apply_or(i, 0) == 0; }
constexpr bool keeps_one(Interaction i) { return interaction_apply_or(i, 1) == 1; }

std::string_view to_string(Interaction i);
std::optional<Interaction> interaction_from_string(std::string_view s);

}  // namespace boolnet
