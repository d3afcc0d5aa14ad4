#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "boolnet/boolean_net.hpp"
#include "boolnet/one_in_three.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

template <typename T>
struct ParseResult {
  std::optional<T> value;
  std::vector<std::string> errors;    // prefixed with "line N: "
  std::vector<std::string> warnings;
  bool ok() const { return value.has_value(); }
};

// Transition system text format:
//   ts <name>
//   initial <state>
//   arc <src> <event> <dst>
// '#' starts a comment, blank lines are skipped, the ts line is optional.
ParseResult<TransitionSystem> parse_ts(std::string_view text);
std::string emit_ts(const TransitionSystem& ts);

// Net text format:
//   net <name>
//   type <i1,...,ik>
//   place <name> <0|1>
//   transition <name>
//   flow <place> <transition> <interaction>
// Flows not listed are nop; emission omits nop flows.
ParseResult<BooleanNet> parse_net(std::string_view text);
std::string emit_net(const BooleanNet& net);

// One clause per line: three space-separated variable indices.
ParseResult<Instance> parse_instance(std::string_view text);
std::string emit_instance(const Instance& inst);

std::string emit_dot(const TransitionSystem& ts);

}  // namespace boolnet
