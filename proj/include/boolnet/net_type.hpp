#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/interaction.hpp"

namespace boolnet {

// A boolean net type: a set of interactions.  The solver and the region
// machinery accept any subset; the complexity table and the hardness gadgets
// only concern types that contain nop.
class NetType {
 public:
  constexpr NetType() = default;
  constexpr explicit NetType(uint8_t mask) : mask_(mask) {}

  template <typename... Is>
  static constexpr NetType of(Is... is) {
    uint8_t m = 0;
    ((m |= uint8_t{1} << static_cast<int>(is)), ...);
    return NetType(m);
  }

  constexpr bool contains(Interaction i) const {
    return (mask_ >> static_cast<int>(i)) & 1;
  }
  constexpr uint8_t mask() const { return mask_; }
  constexpr int size() const { return __builtin_popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }

  constexpr NetType with(Interaction i) const {
    return NetType(mask_ | (uint8_t{1} << static_cast<int>(i)));
  }
  constexpr NetType without(Interaction i) const {
    return NetType(mask_ & ~(uint8_t{1} << static_cast<int>(i)));
  }

  constexpr NetType intersect(NetType o) const { return NetType(mask_ & o.mask_); }
  constexpr NetType unite(NetType o) const { return NetType(mask_ | o.mask_); }
  constexpr bool subset_of(NetType o) const { return (mask_ & ~o.mask_) == 0; }

  constexpr bool operator==(const NetType&) const = default;

  std::vector<Interaction> members() const;

  // Comma-separated member list, e.g. "nop,inp,set".
  std::string to_string() const;
  static std::optional<NetType> parse(std::string_view s);

 private:
  uint8_t mask_ = 0;
};

}  // namespace boolnet
