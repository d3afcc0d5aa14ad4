#include "boolnet/one_in_three.hpp"

#include <algorithm>

namespace boolnet {

std::optional<Instance> make_instance(
    const std::vector<std::array<int, 3>>& clauses, std::string* error) {
  auto fail = [&](const std::string& msg) -> std::optional<Instance> {
    if (error) *error = msg;
    return std::nullopt;
  };
  int m = static_cast<int>(clauses.size());
  if (m == 0) return fail("no clauses");
  std::vector<int> occurrences(m, 0);
  for (int i = 0; i < m; ++i) {
    const auto& c = clauses[i];
    if (!(0 <= c[0] && c[0] < c[1] && c[1] < c[2] && c[2] < m)) {
      return fail("clause " + std::to_string(i) +
                  ": indices must be strictly increasing and below the "
                  "clause count " +
                  std::to_string(m));
    }
    for (int v : c) ++occurrences[v];
    for (int j = 0; j < i; ++j) {
      if (clauses[j] == c) {
        return fail("clause " + std::to_string(i) + " repeats clause " +
                    std::to_string(j));
      }
    }
  }
  for (int v = 0; v < m; ++v) {
    if (occurrences[v] != 3) {
      return fail("variable " + std::to_string(v) + " occurs " +
                  std::to_string(occurrences[v]) + " times, expected 3");
    }
  }
  Instance inst;
  inst.num_variables = m;
  inst.clauses = clauses;
  return inst;
}

bool is_model(const Instance& inst, const std::vector<int>& variables) {
  std::vector<char> in(inst.num_variables, 0);
  for (int v : variables) {
    if (v < 0 || v >= inst.num_variables || in[v]) return false;
    in[v] = 1;
  }
  for (const auto& c : inst.clauses) {
    if (in[c[0]] + in[c[1]] + in[c[2]] != 1) return false;
  }
  return true;
}

namespace {

struct ModelSearch {
  const Instance& inst;
  std::vector<std::vector<int>> clauses_of;  // indexed by variable
  std::vector<int> chosen, undecided;        // per clause
  std::vector<int> picked;

  explicit ModelSearch(const Instance& inst_) : inst(inst_) {
    clauses_of.resize(inst.num_variables);
    for (int i = 0; i < static_cast<int>(inst.clauses.size()); ++i) {
      for (int v : inst.clauses[i]) clauses_of[v].push_back(i);
    }
    chosen.assign(inst.clauses.size(), 0);
    undecided.assign(inst.clauses.size(), 3);
  }

  bool decide(int v, bool in) {
    bool ok = true;
    for (int c : clauses_of[v]) {
      --undecided[c];
      if (in) ++chosen[c];
      if (chosen[c] > 1 || (chosen[c] == 0 && undecided[c] == 0)) ok = false;
    }
    return ok;
  }

  void undo(int v, bool in) {
    for (int c : clauses_of[v]) {
      ++undecided[c];
      if (in) --chosen[c];
    }
  }

  // include-first order makes the first complete model the
  // lexicographically least sorted variable sequence
  bool dfs(int v) {
    if (v == inst.num_variables) return true;
    for (bool in : {true, false}) {
      bool ok = decide(v, in);
      if (ok) {
        if (in) picked.push_back(v);
        if (dfs(v + 1)) return true;
        if (in) picked.pop_back();
      }
      undo(v, in);
    }
    return false;
  }
};

}  // namespace

ModelSearchResult brute_force_model(const Instance& inst) {
  ModelSearchResult result;
  if (inst.num_variables > 24) {
    result.status = ModelSearchResult::Status::too_large;
    return result;
  }
  ModelSearch search(inst);
  if (search.dfs(0)) {
    result.status = ModelSearchResult::Status::found;
    result.model = search.picked;
  }
  return result;
}

}  // namespace boolnet
