#include <doctest.h>

#include <string>

#include "boolnet/one_in_three.hpp"

using namespace boolnet;

namespace {

// six clauses over six variables, every variable three times
const std::vector<std::array<int, 3>> kSixClauses = {
    {0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {2, 4, 5}, {1, 4, 5}, {3, 4, 5}};

// the one cubic instance on four clauses: all triples of {0,1,2,3}
const std::vector<std::array<int, 3>> kFourClauses = {
    {0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};

}  // namespace

TEST_CASE("make_instance accepts the six-clause fixture") {
  std::string err;
  auto inst = make_instance(kSixClauses, &err);
  REQUIRE_MESSAGE(inst.has_value(), err);
  CHECK(inst->num_variables == 6);
}

TEST_CASE("make_instance rejects structural defects") {
  std::string err;
  CHECK_FALSE(make_instance({}, &err).has_value());

  // not strictly increasing
  CHECK_FALSE(make_instance({{1, 0, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, &err)
                  .has_value());
  CHECK(err.find("strictly increasing") != std::string::npos);

  // index out of range
  CHECK_FALSE(make_instance({{0, 1, 4}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}, &err)
                  .has_value());

  // repeated clause
  CHECK_FALSE(make_instance({{0, 1, 2}, {0, 1, 2}, {0, 2, 3}, {1, 2, 3}}, &err)
                  .has_value());
  CHECK(err.find("repeats") != std::string::npos);

  // five distinct in-range clauses where variable 0 occurs four times
  CHECK_FALSE(make_instance({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {0, 2, 3}, {1, 2, 4}},
                            &err)
                  .has_value());
  CHECK(err.find("occurs") != std::string::npos);
}

TEST_CASE("is_model checks the exactly-one condition") {
  auto inst = make_instance(kSixClauses, nullptr);
  REQUIRE(inst.has_value());
  CHECK(is_model(*inst, {0, 4}));
  CHECK_FALSE(is_model(*inst, {0}));
  CHECK_FALSE(is_model(*inst, {0, 1, 4}));
  CHECK_FALSE(is_model(*inst, {0, 4, 4}));
  CHECK_FALSE(is_model(*inst, {0, 9}));
}

TEST_CASE("brute force finds the lexicographically least model") {
  auto inst = make_instance(kSixClauses, nullptr);
  REQUIRE(inst.has_value());
  auto r = brute_force_model(*inst);
  REQUIRE(r.status == ModelSearchResult::Status::found);
  CHECK(r.model == std::vector<int>{0, 4});

  // cross-check lexicographic minimality against a plain subset sweep
  std::vector<int> best;
  for (int mask = 0; mask < (1 << 6); ++mask) {
    std::vector<int> pick;
    for (int v = 0; v < 6; ++v) {
      if ((mask >> v) & 1) pick.push_back(v);
    }
    if (!is_model(*inst, pick)) continue;
    if (best.empty() || pick < best) best = pick;
  }
  CHECK(r.model == best);
}

TEST_CASE("the four-clause instance is unsatisfiable by counting") {
  auto inst = make_instance(kFourClauses, nullptr);
  REQUIRE(inst.has_value());
  // a model would pick exactly one variable per clause, so the picks summed
  // over clauses count 4; but every picked variable occurs three times, so
  // the count is divisible by 3
  CHECK(brute_force_model(*inst).status == ModelSearchResult::Status::none);
  for (int mask = 0; mask < (1 << 4); ++mask) {
    std::vector<int> pick;
    for (int v = 0; v < 4; ++v) {
      if ((mask >> v) & 1) pick.push_back(v);
    }
    CHECK_FALSE(is_model(*inst, pick));
  }
}

TEST_CASE("four clauses admit exactly one cubic instance") {
  // every variable occurs three times among four increasing triples over
  // {0,1,2,3}: enumerate all 4-subsets of the four possible triples
  const std::array<std::array<int, 3>, 4> triples = {
      {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}};
  int valid = 0;
  for (int mask = 1; mask < 16; ++mask) {
    std::vector<std::array<int, 3>> clauses;
    for (int i = 0; i < 4; ++i) {
      if ((mask >> i) & 1) clauses.push_back(triples[i]);
    }
    if (make_instance(clauses, nullptr)) ++valid;
  }
  CHECK(valid == 1);
}

TEST_CASE("oversized instances are reported, not searched") {
  Instance big;
  big.num_variables = 25;
  auto r = brute_force_model(big);
  CHECK(r.status == ModelSearchResult::Status::too_large);
}
