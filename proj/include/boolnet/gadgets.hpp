#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "boolnet/atoms.hpp"
#include "boolnet/net_type.hpp"
#include "boolnet/one_in_three.hpp"
#include "boolnet/solver.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

// Families of hardness reductions: each turns a cubic monotone instance
// into a transition system of bounded degree whose key separation atom is
// solvable exactly when the instance has a one-in-three model.
enum class GadgetFamily { t1, t2, t3, t4, t5, t6, t7 };

std::string_view to_string(GadgetFamily f);
std::optional<GadgetFamily> gadget_family_from_string(std::string_view s);

// The type each family targets by default, and the full set a family
// admits (some accept optional used/free style extensions).
NetType default_gadget_type(GadgetFamily f);
bool gadget_type_allowed(GadgetFamily f, NetType type);

struct Gadget {
  GadgetFamily family = GadgetFamily::t1;
  Instance instance;
  NetType type;
  TransitionSystem ts;
  Atom alpha = ssp_atom(0, 0);  // the pivotal separation atom
  int declared_bound = 0;

  // One entry per joining connector: the connector's signature in a model
  // region follows from the support its target state carries, which the
  // builder knows structurally (constant, or tied to a variable's
  // membership in the model).
  struct Connector {
    std::string event;
    int entry_kind;  // 0: sup 0, 1: sup 1, 2: in-model(var), 3: complement
    int entry_var;
  };
  std::vector<Connector> connectors;
};

// Pre: gadget_type_allowed(f, type) when a type is given.
Gadget build_gadget(GadgetFamily f, const Instance& inst,
                    std::optional<NetType> type = std::nullopt);

// The region induced by a one-in-three model: valid and separating for the
// gadget's atom whenever `model` is a one-in-three model of the instance
// (nullopt otherwise).
std::optional<Region> model_to_region(const Gadget& g,
                                      const std::vector<int>& model);

struct GadgetVerification {
  enum class Outcome {
    confirmed_positive,   // instance satisfiable, atom solved, region checked
    confirmed_negative,   // instance unsatisfiable, atom proven unsolvable
    refuted,              // solver and ground truth disagree
    inconclusive,         // budget exhausted or instance too large to ground
  };
  Outcome outcome = Outcome::inconclusive;
  uint64_t nodes = 0;
  std::optional<std::vector<int>> model;
  std::string detail;
};

// Cross-checks the solver's verdict on the gadget's atom against the
// instance's brute-force ground truth.
GadgetVerification verify_gadget(const Gadget& g, const SolveOptions& opts = {});

}  // namespace boolnet
