#include <doctest.h>

#include <random>
#include <vector>

#include "boolnet/solver.hpp"
#include "boolnet/ts_isomorphism.hpp"

using namespace boolnet;
using I = Interaction;

namespace {

TransitionSystem build(const std::vector<std::array<const char*, 3>>& arcs,
                       const char* initial = "s0") {
  TsBuilder b;
  b.initial(initial);
  for (const auto& a : arcs) b.arc(a[0], a[1], a[2]);
  auto r = b.build();
  REQUIRE(r.ok());
  return *r.ts;
}

// total-assignment oracle, no propagation: is some region separating the atom?
bool oracle_solvable(const TransitionSystem& ts, NetType type, const Atom& atom) {
  auto members = type.members();
  int n = ts.num_states(), k = ts.num_events();
  long sig_count = 1;
  for (int e = 0; e < k; ++e) sig_count *= static_cast<long>(members.size());
  for (long sm = 0; sm < (1L << n); ++sm) {
    Region r;
    r.sup.resize(n);
    for (int s = 0; s < n; ++s) r.sup[s] = (sm >> s) & 1;
    for (long gm = 0; gm < sig_count; ++gm) {
      r.sig.clear();
      long rest = gm;
      for (int e = 0; e < k; ++e) {
        r.sig.push_back(members[rest % members.size()]);
        rest /= members.size();
      }
      bool ok = true;
      for (const Arc& a : ts.arcs()) {
        if (interaction_apply_or(r.sig[a.event], r.sup[a.src]) != r.sup[a.dst]) {
          ok = false;
          break;
        }
      }
      if (ok && region_separates(r, atom)) return true;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("three-state fixtures over nop,set,swap,free") {
  NetType t = NetType::of(I::nop, I::set, I::swap, I::free);

  SUBCASE("cycle tail: everything separable") {
    TransitionSystem a1 =
        build({{"s0", "a", "s1"}, {"s1", "a", "s2"}, {"s2", "a", "s1"}});
    SeparationReport r = decide_separation(a1, t);
    CHECK(r.ssp == Decision::solvable);
    CHECK(r.essp == Decision::solvable);
    CHECK(r.combined() == Decision::solvable);
  }

  SUBCASE("two-arc path: only the event side fails") {
    TransitionSystem a2 = build({{"s0", "a", "s1"}, {"s1", "a", "s2"}});
    SeparationReport r = decide_separation(a2, t);
    CHECK(r.ssp == Decision::solvable);
    CHECK(r.essp == Decision::unsolvable);
    REQUIRE(r.essp_failing.has_value());
    CHECK(*r.essp_failing == essp_atom(*a2.event_index("a"), *a2.state_index("s2")));
  }

  SUBCASE("path into a loop: only the state side fails") {
    TransitionSystem a3 =
        build({{"s0", "a", "s1"}, {"s1", "a", "s2"}, {"s2", "a", "s2"}});
    SeparationReport r = decide_separation(a3, t);
    CHECK(r.ssp == Decision::unsolvable);
    CHECK(r.essp == Decision::solvable);
    REQUIRE(r.ssp_failing.has_value());
    CHECK(*r.ssp_failing == ssp_atom(*a3.state_index("s1"), *a3.state_index("s2")));
  }

  SUBCASE("three-arc path: both sides fail") {
    TransitionSystem a4 =
        build({{"s0", "a", "s1"}, {"s1", "a", "s2"}, {"s2", "a", "s3"}});
    SeparationReport r = decide_separation(a4, t);
    CHECK(r.ssp == Decision::unsolvable);
    CHECK(r.essp == Decision::unsolvable);
    REQUIRE(r.ssp_failing.has_value());
    CHECK(*r.ssp_failing == ssp_atom(*a4.state_index("s1"), *a4.state_index("s3")));
    REQUIRE(r.essp_failing.has_value());
    CHECK(*r.essp_failing == essp_atom(*a4.event_index("a"), *a4.state_index("s3")));
  }
}

TEST_CASE("event separation needs a partial interaction") {
  TransitionSystem ts = build({{"s0", "a", "s1"}, {"s1", "b", "s1"}});
  NetType total = NetType::of(I::nop, I::set, I::res, I::swap);
  AtomResult r = solve_atom(ts, total, essp_atom(*ts.event_index("b"), *ts.state_index("s0")));
  CHECK(r.status == SolveStatus::unsolvable);
  CHECK(r.nodes == 0);
}

TEST_CASE("an exhausted budget is inconclusive, not unsolvable") {
  TransitionSystem ts = build({{"s0", "a", "s1"}, {"s1", "a", "s2"}});
  SolveOptions opts;
  opts.node_budget = 0;
  AtomResult r = solve_atom(ts, NetType::of(I::nop, I::set), ssp_atom(0, 1), opts);
  CHECK(r.status == SolveStatus::inconclusive);
}

TEST_CASE("solved atoms come with checked witness regions") {
  TransitionSystem ts = build({{"s0", "a", "s1"}, {"s1", "b", "s2"}});
  NetType t = NetType::of(I::nop, I::inp, I::out);
  for (const Atom& atom : enumerate_atoms(ts)) {
    AtomResult r = solve_atom(ts, t, atom);
    REQUIRE(r.status == SolveStatus::solved);
    REQUIRE(r.region.has_value());
    CHECK(region_valid(ts, t, *r.region));
    CHECK(region_separates(*r.region, atom));
  }
}

TEST_CASE("events appearing on no arc can still be separated") {
  auto built = TsBuilder().initial("s0").event("ghost").arc("s0", "a", "s0").build();
  REQUIRE(built.ok());
  NetType t = NetType::of(I::nop, I::inp);
  AtomResult r = solve_atom(*built.ts, t, essp_atom(0, 0));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK(r.region->sig[0] == I::inp);
  CHECK(r.region->sup[0] == 0);
}

TEST_CASE("verdicts agree with the total-assignment oracle on random systems") {
  std::mt19937 rng(20240817);
  const NetType panel[] = {
      NetType::of(I::nop, I::inp, I::out),
      NetType::of(I::nop, I::inp, I::set),
      NetType::of(I::nop, I::set, I::swap, I::free),
      NetType::of(I::nop, I::res, I::used),
      NetType::of(I::nop, I::inp, I::out, I::set, I::res, I::swap, I::used, I::free),
  };
  const char* states[] = {"s0", "s1", "s2", "s3"};
  const char* events[] = {"a", "b", "c"};
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 3);
    int k = 1 + static_cast<int>(rng() % 3);
    TsBuilder b;
    b.initial("s0");
    // spanning chain keeps every state reachable
    for (int s = 1; s < n; ++s) {
      b.arc(states[s - 1], events[rng() % k], states[s]);
    }
    for (int extra = 0; extra < n; ++extra) {
      int s = rng() % n, e = rng() % k, d = rng() % n;
      b.arc(states[s], events[e], states[d]);
    }
    auto built = b.build();
    if (!built.ok()) continue;  // nondeterministic draw, skip
    const TransitionSystem& ts = *built.ts;
    const NetType& type = panel[round % 5];
    for (const Atom& atom : enumerate_atoms(ts)) {
      AtomResult r = solve_atom(ts, type, atom);
      REQUIRE(r.status != SolveStatus::inconclusive);
      bool expected = oracle_solvable(ts, type, atom);
      CAPTURE(round);
      CAPTURE(type.to_string());
      CAPTURE(atom_to_string(ts, atom));
      CHECK((r.status == SolveStatus::solved) == expected);
      if (r.status == SolveStatus::solved) {
        CHECK(region_valid(ts, type, *r.region));
        CHECK(region_separates(*r.region, atom));
      }
    }
  }
}

TEST_CASE("synthesis round trip reproduces the input behaviour") {
  TransitionSystem ts = build({{"s0", "a", "s1"}, {"s1", "b", "s2"}});
  NetType t = NetType::of(I::nop, I::inp, I::out);
  SynthesisResult synth = synthesize(ts, t);
  REQUIRE(synth.decide.decision == Decision::solvable);
  REQUIRE(synth.net.has_value());
  CHECK(synth.net->type() == t);
  auto reach = synth.net->reachability_graph();
  REQUIRE(reach.ts.has_value());
  CHECK(ts_isomorphic(ts, *reach.ts));
}

TEST_CASE("region sets that separate nothing are rejected") {
  TransitionSystem ts = build({{"s0", "a", "s1"}, {"s1", "b", "s2"}});
  NetType t = NetType::of(I::nop, I::inp, I::out);
  CHECK_FALSE(net_from_regions(ts, t, {}, "x").has_value());

  // a valid but insufficient single region
  auto r = solve_atom(ts, t, ssp_atom(0, 1));
  REQUIRE(r.status == SolveStatus::solved);
  CHECK_FALSE(net_from_regions(ts, t, {*r.region}, "x").has_value());
}

TEST_CASE("decide_solvable stops at the first failing atom") {
  TransitionSystem a2 = build({{"s0", "a", "s1"}, {"s1", "a", "s2"}});
  NetType t = NetType::of(I::nop, I::set, I::swap, I::free);
  DecideResult r = decide_solvable(a2, t);
  CHECK(r.decision == Decision::unsolvable);
  REQUIRE(r.failing.has_value());
  CHECK(*r.failing == essp_atom(*a2.event_index("a"), *a2.state_index("s2")));
}
