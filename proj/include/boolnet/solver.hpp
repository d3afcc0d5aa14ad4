#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "boolnet/atoms.hpp"
#include "boolnet/boolean_net.hpp"
#include "boolnet/net_type.hpp"
#include "boolnet/region.hpp"
#include "boolnet/transition_system.hpp"

namespace boolnet {

struct SolveOptions {
  // Backtracking nodes (value trials) before giving up on one atom.
  uint64_t node_budget = 10'000'000;
};

enum class SolveStatus { solved, unsolvable, inconclusive };

struct AtomResult {
  SolveStatus status = SolveStatus::inconclusive;
  std::optional<Region> region;  // present iff solved
  uint64_t nodes = 0;
};

// Searches for a region separating the given atom: branches over the
// initial support and the signature, event by event, propagating supports
// along arcs after every choice.  Exhausting the search space proves
// unsolvability; running out of budget is inconclusive.
AtomResult solve_atom(const TransitionSystem& ts, const NetType& type,
                      const Atom& atom, const SolveOptions& opts = {});

enum class Decision { solvable, unsolvable, inconclusive };

struct DecideResult {
  Decision decision = Decision::inconclusive;
  std::optional<Atom> failing;     // first atom that is not solved
  std::vector<Region> regions;     // witnesses gathered so far
  uint64_t nodes = 0;
};

// Works through enumerate_atoms in order, reusing earlier witness regions,
// and stops at the first atom that cannot be solved.
DecideResult decide_solvable(const TransitionSystem& ts, const NetType& type,
                             const SolveOptions& opts = {});

// Like decide_solvable but tracks the two atom classes independently, so a
// state-pair failure still lets the event/state side report its own verdict.
struct SeparationReport {
  Decision ssp = Decision::solvable;
  Decision essp = Decision::solvable;
  std::optional<Atom> ssp_failing;
  std::optional<Atom> essp_failing;
  std::vector<Region> regions;
  uint64_t nodes = 0;

  Decision combined() const;
};

SeparationReport decide_separation(const TransitionSystem& ts,
                                   const NetType& type,
                                   const SolveOptions& opts = {});

// Builds the net with one place per region; rejects region sets that do not
// separate every atom.
std::optional<BooleanNet> net_from_regions(const TransitionSystem& ts,
                                           const NetType& type,
                                           const std::vector<Region>& regions,
                                           const std::string& name);

struct SynthesisResult {
  DecideResult decide;
  std::optional<BooleanNet> net;  // present iff decide.decision == solvable
};

SynthesisResult synthesize(const TransitionSystem& ts, const NetType& type,
                           const SolveOptions& opts = {});

}  // namespace boolnet
