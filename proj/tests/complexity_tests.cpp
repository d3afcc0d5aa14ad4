#include <doctest.h>

#include <map>

#include "boolnet/complexity.hpp"

using namespace boolnet;
using I = Interaction;

TEST_CASE("the eleven rows partition the 128 nop-containing types") {
  std::map<int, int> row_counts;
  int covered = 0;
  for (int mask = 0; mask < 256; ++mask) {
    NetType t(static_cast<uint8_t>(mask));
    auto row = classify_row(t);
    if (!t.contains(I::nop)) {
      CHECK_FALSE(row.has_value());
      CHECK(classify(t, 3) == Hardness::out_of_table);
      continue;
    }
    REQUIRE_MESSAGE(row.has_value(), "uncovered type ", t.to_string());
    ++row_counts[*row];
    ++covered;
  }
  CHECK(covered == 128);
  CHECK(row_counts[1] == 4);
  CHECK(row_counts[2] == 3);
  CHECK(row_counts[3] == 16);
  CHECK(row_counts[4] == 8);
  CHECK(row_counts[5] == 4);
  CHECK(row_counts[6] == 8);
  CHECK(row_counts[7] == 28);
  CHECK(row_counts[8] == 4);
  CHECK(row_counts[9] == 9);
  CHECK(row_counts[10] == 8);
  CHECK(row_counts[11] == 36);
}

TEST_CASE("representative rows and thresholds") {
  struct Case {
    NetType type;
    int row;
    std::optional<int> threshold;
  };
  const Case cases[] = {
      {NetType::of(I::nop, I::inp, I::free), 1, 2},
      {NetType::of(I::nop, I::out, I::used, I::free), 1, 2},
      {NetType::of(I::nop, I::set, I::res, I::used), 2, 3},
      {NetType::of(I::nop, I::set, I::res, I::used, I::free), 2, 3},
      {NetType::of(I::nop, I::inp, I::set), 3, 2},
      {NetType::of(I::nop, I::inp, I::res, I::set, I::out, I::used), 3, 2},
      {NetType::of(I::nop, I::out, I::res, I::free), 3, 2},
      {NetType::of(I::nop, I::inp, I::out, I::set, I::free), 4, 1},
      {NetType::of(I::nop, I::inp, I::out, I::res), 4, 1},
      {NetType::of(I::nop, I::inp, I::set, I::free), 5, 1},
      {NetType::of(I::nop, I::out, I::res, I::used), 5, 1},
      {NetType::of(I::nop, I::inp, I::res, I::swap), 6, 1},
      {NetType::of(I::nop, I::out, I::set, I::swap, I::used, I::free), 6, 1},
      {NetType::of(I::nop, I::inp, I::set, I::swap), 7, 1},
      {NetType::of(I::nop, I::inp, I::out, I::set, I::res, I::swap, I::used, I::free), 7, 1},
      {NetType::of(I::nop, I::out, I::res, I::swap, I::set), 7, 1},
      {NetType::of(I::nop, I::inp, I::out), 8, 1},
      {NetType::of(I::nop, I::inp, I::out, I::used, I::free), 8, 1},
      {NetType::of(I::nop, I::set, I::swap, I::used), 9, 2},
      {NetType::of(I::nop, I::res, I::set, I::swap, I::used, I::free), 9, 2},
      {NetType::of(I::nop, I::inp), 10, std::nullopt},
      {NetType::of(I::nop, I::set, I::res, I::swap), 10, std::nullopt},
      {NetType::of(I::nop, I::res, I::inp, I::used, I::free), 11, std::nullopt},
      {NetType::of(I::nop, I::swap, I::inp, I::out), 11, std::nullopt},
      {NetType::of(I::nop, I::used, I::free), 11, std::nullopt},
  };
  for (const Case& c : cases) {
    CAPTURE(c.type.to_string());
    CHECK(classify_row(c.type) == c.row);
    CHECK(np_threshold(c.type) == c.threshold);
    if (c.threshold) {
      CHECK(classify(c.type, *c.threshold) == Hardness::np_complete);
      CHECK(classify(c.type, *c.threshold - 1) == Hardness::polynomial);
      CHECK(classify(c.type, 7) == Hardness::np_complete);
    } else {
      CHECK(classify(c.type, 0) == Hardness::polynomial);
      CHECK(classify(c.type, 7) == Hardness::polynomial);
    }
  }
}

TEST_CASE("types without nop fall outside the table") {
  CHECK(classify(NetType::of(I::inp, I::out), 2) == Hardness::out_of_table);
  CHECK_FALSE(classify_row(NetType::of(I::set, I::res)).has_value());
  CHECK_FALSE(np_threshold(NetType::of(I::swap)).has_value());
}
