#include "boolnet/complexity.hpp"

namespace boolnet {

namespace {

using I = Interaction;

// t = base ∪ ω with ω ⊆ allowed (ω nonempty when required)
bool extends(NetType t, NetType base, NetType allowed, bool omega_nonempty) {
  if (!base.subset_of(t)) return false;
  NetType extra(static_cast<uint8_t>(t.mask() & ~base.mask()));
  if (!extra.subset_of(allowed)) return false;
  return !omega_nonempty || !extra.empty();
}

bool is_any(NetType t, std::initializer_list<NetType> list) {
  for (NetType c : list) {
    if (t == c) return true;
  }
  return false;
}

const NetType kUsedFree = NetType::of(I::used, I::free);

}  // namespace

std::optional<int> classify_row(NetType t) {
  if (!t.contains(I::nop)) return std::nullopt;

  if (is_any(t, {NetType::of(I::nop, I::inp, I::free),
                 NetType::of(I::nop, I::inp, I::used, I::free),
                 NetType::of(I::nop, I::out, I::used),
                 NetType::of(I::nop, I::out, I::used, I::free)})) {
    return 1;
  }
  if (extends(t, NetType::of(I::nop, I::set, I::res), kUsedFree, true)) {
    return 2;
  }
  if (is_any(t, {NetType::of(I::nop, I::inp, I::set),
                 NetType::of(I::nop, I::inp, I::set, I::used),
                 NetType::of(I::nop, I::out, I::res),
                 NetType::of(I::nop, I::out, I::res, I::free)}) ||
      extends(t, NetType::of(I::nop, I::inp, I::res, I::set),
              NetType::of(I::out, I::used, I::free), false) ||
      extends(t, NetType::of(I::nop, I::out, I::res, I::set),
              NetType::of(I::inp, I::used, I::free), false)) {
    return 3;
  }
  if (extends(t, NetType::of(I::nop, I::inp, I::out, I::set), kUsedFree, false) ||
      extends(t, NetType::of(I::nop, I::inp, I::out, I::res), kUsedFree, false)) {
    return 4;
  }
  if (is_any(t, {NetType::of(I::nop, I::inp, I::set, I::free),
                 NetType::of(I::nop, I::inp, I::set, I::used, I::free),
                 NetType::of(I::nop, I::out, I::res, I::used),
                 NetType::of(I::nop, I::out, I::res, I::used, I::free)})) {
    return 5;
  }
  if (extends(t, NetType::of(I::nop, I::inp, I::res, I::swap), kUsedFree, false) ||
      extends(t, NetType::of(I::nop, I::out, I::set, I::swap), kUsedFree, false)) {
    return 6;
  }
  if (extends(t, NetType::of(I::nop, I::inp, I::set, I::swap),
              NetType::of(I::out, I::res, I::used, I::free), false) ||
      extends(t, NetType::of(I::nop, I::out, I::res, I::swap),
              NetType::of(I::inp, I::set, I::used, I::free), false)) {
    return 7;
  }
  if (extends(t, NetType::of(I::nop, I::inp, I::out), kUsedFree, false)) {
    return 8;
  }
  if (extends(t, NetType::of(I::nop, I::set, I::swap), kUsedFree, true) ||
      extends(t, NetType::of(I::nop, I::res, I::swap), kUsedFree, true) ||
      extends(t, NetType::of(I::nop, I::res, I::set, I::swap), kUsedFree, true)) {
    return 9;
  }
  if (is_any(t, {NetType::of(I::nop, I::inp), NetType::of(I::nop, I::inp, I::used),
                 NetType::of(I::nop, I::out), NetType::of(I::nop, I::out, I::free),
                 NetType::of(I::nop, I::set, I::swap),
                 NetType::of(I::nop, I::res, I::swap),
                 NetType::of(I::nop, I::set, I::res),
                 NetType::of(I::nop, I::set, I::res, I::swap)})) {
    return 10;
  }
  if (extends(t, NetType::of(I::nop, I::res),
              NetType::of(I::inp, I::used, I::free), false) ||
      extends(t, NetType::of(I::nop, I::set),
              NetType::of(I::out, I::used, I::free), false) ||
      extends(t, NetType::of(I::nop, I::swap),
              NetType::of(I::inp, I::out, I::used, I::free), false) ||
      extends(t, NetType::of(I::nop), kUsedFree, false)) {
    return 11;
  }
  // rows 1..11 cover every nop-containing type
  return std::nullopt;
}

std::optional<int> np_threshold(NetType t) {
  auto row = classify_row(t);
  if (!row) return std::nullopt;
  switch (*row) {
    case 1:
    case 3:
    case 9:
      return 2;
    case 2:
      return 3;
    case 4:
    case 5:
    case 6:
    case 7:
    case 8:
      return 1;
    default:
      return std::nullopt;  // rows 10, 11
  }
}

Hardness classify(NetType t, int g) {
  if (!classify_row(t)) return Hardness::out_of_table;
  auto threshold = np_threshold(t);
  if (threshold && g >= *threshold) return Hardness::np_complete;
  return Hardness::polynomial;
}

}  // namespace boolnet
