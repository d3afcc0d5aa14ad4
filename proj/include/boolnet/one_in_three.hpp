#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace boolnet {

// Cubic monotone instance: m clauses over variables 0..m-1, all literals
// positive, every variable occurring in exactly three clauses.  A model
// picks exactly one variable of every clause.
struct Instance {
  int num_variables = 0;  // always equals the clause count
  std::vector<std::array<int, 3>> clauses;
};

// Checks strictly increasing indices inside each clause, no repeated
// clause, and the cubic occurrence condition.
std::optional<Instance> make_instance(
    const std::vector<std::array<int, 3>>& clauses, std::string* error);

bool is_model(const Instance& inst, const std::vector<int>& variables);

// Exhaustive search, instances up to 24 clauses; finds the
// lexicographically least model as a sorted variable list.
struct ModelSearchResult {
  enum class Status { found, none, too_large };
  Status status = Status::none;
  std::vector<int> model;
};

ModelSearchResult brute_force_model(const Instance& inst);

}  // namespace boolnet
