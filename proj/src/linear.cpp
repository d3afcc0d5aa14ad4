#include "boolnet/linear.hpp"

#include <algorithm>
#include <cassert>
#include <optional>
#include <string>
#include <vector>

#include "boolnet/atoms.hpp"
#include "boolnet/complexity.hpp"
#include "boolnet/region.hpp"
#include "boolnet/type_morphism.hpp"

namespace boolnet {

namespace {

using I = Interaction;

}  // namespace

LinearShape classify_linear(const TransitionSystem& ts) {
  LinearShape shape;
  const int n = ts.num_states();
  std::vector<int> outdeg(n, 0), indeg(n, 0);
  std::vector<Arc> out(n, Arc{-1, -1, -1});
  for (const Arc& a : ts.arcs()) {
    if (++outdeg[a.src] > 1 || ++indeg[a.dst] > 1) return shape;
    out[a.src] = a;
  }

  // Unique out-arcs: walk from the initial state.  Reachability means the
  // walk covers every arc; it ends at a dead end (path) or back at the
  // initial state (cycle).  Returning anywhere else would need in-degree 2.
  int s = ts.initial();
  std::vector<char> visited(n, 0);
  visited[s] = 1;
  while (out[s].src >= 0) {
    shape.sequence.push_back(out[s]);
    s = out[s].dst;
    if (s == ts.initial()) break;
    if (visited[s]) return shape;
    visited[s] = 1;
  }
  if (static_cast<int>(shape.sequence.size()) != static_cast<int>(ts.arcs().size()))
    return shape;
  shape.kind = (s == ts.initial() && !shape.sequence.empty())
                   ? LinearShape::Kind::directed_cycle
                   : LinearShape::Kind::simple_path;

  const auto& seq = shape.sequence;
  const int m = static_cast<int>(seq.size());
  const int pairs =
      shape.kind == LinearShape::Kind::directed_cycle ? m : m - 1;
  for (int p = 0; p < pairs; ++p) {
    const Arc& a = seq[p];
    const Arc& b = seq[(p + 1) % m];
    if (a.event == b.event && a.dst != b.dst) {
      auto& rep = shape.repeated_in_a_row;
      if (std::find(rep.begin(), rep.end(), a.event) == rep.end())
        rep.push_back(a.event);
    }
  }
  return shape;
}

TransitionSystem cycle_extension(const TransitionSystem& ts) {
  LinearShape shape = classify_linear(ts);
  assert(shape.kind == LinearShape::Kind::simple_path);

  std::string closing = "closing";
  for (int suffix = 1; ts.event_index(closing).has_value(); ++suffix)
    closing = "closing_" + std::to_string(suffix);

  const std::string& last = shape.sequence.empty()
                                ? ts.state_name(ts.initial())
                                : ts.state_name(shape.sequence.back().dst);

  TsBuilder b;
  b.name(ts.name()).initial(ts.state_name(ts.initial()));
  for (int e = 0; e < ts.num_events(); ++e) b.event(ts.event_name(e));
  for (const Arc& a : shape.sequence)
    b.arc(ts.state_name(a.src), ts.event_name(a.event), ts.state_name(a.dst));
  b.arc(last, closing, ts.state_name(ts.initial()));

  TsBuildResult r = b.build();
  assert(r.ok());
  return *std::move(r.ts);
}

bool linear_decider_applies(NetType type) {
  const NetType f1 = NetType::of(I::nop, I::inp, I::set);
  const NetType f2 = f1.with(I::used);
  if (type == f1 || type == f2 || type == polarity_swap(f1) ||
      type == polarity_swap(f2))
    return true;
  const NetType base = NetType::of(I::nop, I::set, I::res);
  if (!base.subset_of(type)) return false;
  const NetType extra =
      type.without(I::nop).without(I::set).without(I::res);
  return extra.size() > 0 &&
         extra.subset_of(NetType::of(I::inp, I::out, I::used, I::free));
}

namespace {

// The cycle the decision procedures walk: either the input itself or its
// cycle extension.  seq[p].dst == seq[(p+1) % size].src.
struct CycleInfo {
  const TransitionSystem* w = nullptr;
  std::vector<Arc> seq;
  std::vector<int> dst_pos;                    // state -> arc entering it
  std::vector<std::vector<int>> event_pos;     // event -> arc positions

  int size() const { return static_cast<int>(seq.size()); }
  int next(int p) const { return (p + 1) % size(); }
  int prev(int p) const { return (p + size() - 1) % size(); }
};

CycleInfo make_cycle_info(const TransitionSystem& w) {
  CycleInfo c;
  c.w = &w;
  LinearShape shape = classify_linear(w);
  assert(shape.kind == LinearShape::Kind::directed_cycle);
  c.seq = std::move(shape.sequence);
  c.dst_pos.assign(w.num_states(), -1);
  c.event_pos.assign(w.num_events(), {});
  for (int p = 0; p < c.size(); ++p) {
    c.dst_pos[c.seq[p].dst] = p;
    c.event_pos[c.seq[p].event].push_back(p);
  }
  return c;
}

// Propagating a candidate signature from either initial support recovers
// the full region; a candidate counts only when the propagation closes and
// the atom is actually separated.
std::optional<Region> try_candidate(const TransitionSystem& w,
                                    const std::vector<Interaction>& sig,
                                    const Atom& atom, uint64_t& nodes) {
  for (int v : {0, 1}) {
    ++nodes;
    std::optional<Region> r = extend_region(w, v, sig);
    if (r && region_separates(*r, atom)) return r;
  }
  return std::nullopt;
}

// One way of attacking an event/state atom (k, s).  k gets k_sig, the
// scanned run event gets drop_sig, later run events nop, the rest set.
struct EsspRoute {
  Interaction k_sig;
  Interaction drop_sig;
  bool k_target_region;   // sig(k) = inp, rest set solves (k, k-target)
  bool distinct_events;   // one fresh set event per other run suffices
  // The member of the original type this route's witnesses rely on; when
  // absent, the witness is transported through the polarity involution.
  Interaction need;
};

std::optional<Region> solve_essp(const CycleInfo& c, int k, int s,
                                 const EsspRoute& route, uint64_t& nodes) {
  const TransitionSystem& w = *c.w;
  const Atom atom = essp_atom(k, s);
  const auto& kpos = c.event_pos[k];

  if (kpos.empty()) {
    // Never-occurring event: constant support, only k constrained.
    std::vector<Interaction> sig(w.num_events(), I::nop);
    sig[k] = route.k_sig;
    return try_candidate(w, sig, atom, nodes);
  }

  const int q = c.dst_pos[s];
  if (c.seq[q].event == k) {
    // s is a k-target.  With sig(k) = inp every k-target sits at 0 and
    // every k-source is lifted back by the following set events; with
    // sig(k) = used targets stay at 1, the wrong side of the atom.
    if (!route.k_target_region) return std::nullopt;
    std::vector<Interaction> sig(w.num_events(), I::set);
    sig[k] = I::inp;
    return try_candidate(w, sig, atom, nodes);
  }

  // The k-free run ending at s, oldest first.
  std::vector<int> run;
  for (int p = q; c.seq[p].event != k; p = c.prev(p)) run.push_back(p);
  std::reverse(run.begin(), run.end());
  const int j = static_cast<int>(run.size());

  if (route.distinct_events) {
    std::vector<char> in_run(w.num_events(), 0);
    for (int p : run) in_run[c.seq[p].event] = 1;
    std::vector<Interaction> sig(w.num_events(), I::nop);
    sig[k] = I::inp;
    bool ok = true;
    // Rest of the run containing s, past s up to the next k arc.
    bool found = false;
    for (int p = c.next(q); c.seq[p].event != k; p = c.next(p)) {
      if (!in_run[c.seq[p].event]) {
        sig[c.seq[p].event] = I::set;
        found = true;
        break;
      }
    }
    ok = found;
    // Every other k-free run needs its own lifting event.
    for (int kp : kpos) {
      if (!ok) break;
      bool contains_q = false;
      for (int p = c.next(kp); c.seq[p].event != k; p = c.next(p))
        if (p == q) contains_q = true;
      if (contains_q) continue;
      found = false;
      for (int p = c.next(kp); c.seq[p].event != k; p = c.next(p)) {
        if (!in_run[c.seq[p].event]) {
          sig[c.seq[p].event] = I::set;
          found = true;
          break;
        }
      }
      ok = found;
    }
    if (ok) {
      if (auto r = try_candidate(w, sig, atom, nodes)) return r;
    }
  }

  // Scan the run for the last support drop before s.
  for (int ell = j; ell >= 1; --ell) {
    std::vector<Interaction> sig(w.num_events(), I::set);
    for (int t = ell; t < j; ++t) sig[c.seq[run[t]].event] = I::nop;
    sig[c.seq[run[ell - 1]].event] = route.drop_sig;
    sig[k] = route.k_sig;
    if (auto r = try_candidate(w, sig, atom, nodes)) return r;
  }
  return std::nullopt;
}

std::optional<Region> solve_ssp(const CycleInfo& c, int s1, int s2,
                                Interaction drop_sig, uint64_t& nodes) {
  const TransitionSystem& w = *c.w;
  const Atom atom = ssp_atom(s1, s2);
  for (auto [hi, lo] : {std::pair{s1, s2}, std::pair{s2, s1}}) {
    // Arcs from hi forward to lo; the scanned arc drops the support, the
    // tail keeps it down, everything before stays up.
    std::vector<int> seg;
    const int end = c.dst_pos[lo];
    for (int p = c.next(c.dst_pos[hi]);; p = c.next(p)) {
      seg.push_back(p);
      if (p == end) break;
    }
    const int len = static_cast<int>(seg.size());
    for (int ell = len; ell >= 1; --ell) {
      std::vector<Interaction> sig(w.num_events(), I::set);
      for (int t = ell; t < len; ++t) sig[c.seq[seg[t]].event] = I::nop;
      sig[c.seq[seg[ell - 1]].event] = drop_sig;
      if (auto r = try_candidate(w, sig, atom, nodes)) return r;
    }
  }
  return std::nullopt;
}

}  // namespace

DecideResult decide_one_bounded(const TransitionSystem& ts, NetType type) {
  assert(linear_decider_applies(type));
  assert(ts.compute_bound() <= 1);
  DecideResult out;
  out.decision = Decision::solvable;

  LinearShape shape = classify_linear(ts);
  assert(shape.kind != LinearShape::Kind::neither);

  // Two consecutive occurrences of one event onto distinct states: without
  // swap no signature maps x -> y -> x with x != y, so the two targets are
  // inseparable.
  if (!shape.repeated_in_a_row.empty()) {
    const int m = static_cast<int>(shape.sequence.size());
    const int pairs =
        shape.kind == LinearShape::Kind::directed_cycle ? m : m - 1;
    for (int p = 0; p < pairs; ++p) {
      const Arc& a = shape.sequence[p];
      const Arc& b = shape.sequence[(p + 1) % m];
      if (a.event == b.event && a.dst != b.dst) {
        out.decision = Decision::unsolvable;
        out.failing = ssp_atom(a.dst, b.dst);
        return out;
      }
    }
  }

  const bool is_path = shape.kind == LinearShape::Kind::simple_path;
  const TransitionSystem w = is_path ? cycle_extension(ts) : ts;

  // State/event translation between ts and w (the extension rebuilds the
  // system, so indices are matched by name).
  std::vector<int> w_state(ts.num_states()), w_event(ts.num_events());
  for (int s = 0; s < ts.num_states(); ++s)
    w_state[s] = *w.state_index(ts.state_name(s));
  for (int e = 0; e < ts.num_events(); ++e)
    w_event[e] = *w.event_index(ts.event_name(e));

  const NetType f1 = NetType::of(I::nop, I::inp, I::set);
  const NetType f2 = f1.with(I::used);
  bool mirror = false;       // decide over the polarity image, transport back
  bool res_family = false;   // {nop,set,res} plus partial extras
  NetType canon = type;
  if (type == f1 || type == f2) {
  } else if (type == polarity_swap(f1) || type == polarity_swap(f2)) {
    canon = polarity_swap(type);
    mirror = true;
  } else {
    res_family = true;
  }

  std::vector<EsspRoute> routes;
  Interaction ssp_drop;
  if (!res_family) {
    ssp_drop = I::inp;
    routes.push_back({I::inp, I::inp, true, true, I::nop});
    if (canon.contains(I::used))
      routes.push_back({I::used, I::inp, false, false, I::nop});
  } else {
    ssp_drop = I::res;
    if (type.contains(I::inp) || type.contains(I::out)) {
      routes.push_back({I::inp, I::res, true, true, I::inp});
      routes.push_back({I::inp, I::inp, false, false, I::inp});
    }
    if (type.contains(I::used) || type.contains(I::free))
      routes.push_back({I::used, I::res, false, false, I::used});
  }

  const CycleInfo c = make_cycle_info(w);

  for (const Atom& atom : enumerate_atoms(ts)) {
    std::optional<Region> found;
    bool transport = mirror;
    if (atom.kind == Atom::Kind::state_pair) {
      found = solve_ssp(c, w_state[atom.a], w_state[atom.b], ssp_drop,
                        out.nodes);
    } else {
      for (const EsspRoute& route : routes) {
        found = solve_essp(c, w_event[atom.a], w_state[atom.b], route,
                           out.nodes);
        if (found) {
          if (res_family) transport = !type.contains(route.need);
          break;
        }
      }
    }
    if (!found) {
      out.decision = Decision::unsolvable;
      out.failing = atom;
      out.regions.clear();
      return out;
    }
    Region r;
    r.sup.resize(ts.num_states());
    r.sig.resize(ts.num_events());
    for (int s = 0; s < ts.num_states(); ++s) r.sup[s] = found->sup[w_state[s]];
    for (int e = 0; e < ts.num_events(); ++e) r.sig[e] = found->sig[w_event[e]];
    if (transport) r = polarity_transport(r);
    assert(region_valid(ts, type, r));
    assert(region_separates(r, atom));
    out.regions.push_back(std::move(r));
  }
  return out;
}

bool small_bound_decider_applies(NetType type, int g) {
  std::optional<int> row = classify_row(type);
  if (!row) return false;
  switch (*row) {
    case 1:
      return g < 2;
    case 2:
      return g < 3;
    case 9:
      return g < 2;
    case 10:
    case 11:
      return true;
    default:
      return false;
  }
}

namespace {

// Exhaustive region search; exact but exponential in the event count, so
// only reached where the applicable condition keeps that count small.
void brute_force_atoms(const TransitionSystem& ts, NetType type,
                       const std::vector<Atom>& atoms, DecideResult& out) {
  const std::vector<Region> regions = enumerate_regions(ts, type);
  out.nodes += 2 * static_cast<uint64_t>(regions.size());
  for (const Atom& atom : atoms) {
    bool hit = false;
    for (const Region& r : regions) {
      if (region_separates(r, atom)) {
        hit = true;
        break;
      }
    }
    if (!hit) {
      out.decision = Decision::unsolvable;
      out.failing = atom;
      return;
    }
  }
  out.decision = Decision::solvable;
}

// nop with inp or out and the matching keep-test: no signature ever lifts
// the support, so solvable inputs are single loops or paths of pairwise
// distinct events.
void decide_no_lift(const TransitionSystem& ts, DecideResult& out) {
  LinearShape shape = classify_linear(ts);
  if (shape.kind == LinearShape::Kind::directed_cycle) {
    // Length >= 2: separating any two cycle states needs a lift somewhere.
    out.decision = Decision::unsolvable;
    out.failing = ssp_atom(shape.sequence[0].src, shape.sequence[0].dst);
    return;
  }
  const auto& seq = shape.sequence;
  for (size_t p = 0; p < seq.size(); ++p) {
    for (size_t r = p + 1; r < seq.size(); ++r) {
      if (seq[p].event != seq[r].event) continue;
      out.decision = Decision::unsolvable;
      out.failing = (r == p + 1)
                        ? ssp_atom(seq[p].dst, seq[r].dst)
                        : essp_atom(seq[p].event, seq[p].dst);
      return;
    }
  }
  out.decision = Decision::solvable;
}

// {nop,set,res} with used/free extras, bound 2: solvable inputs are ladders
// where each step's event immediately loops at its target, and the decision
// delegates to the run scans on the loop-erased path.  Anything else is
// rejected.
void decide_ladder(const TransitionSystem& ts, DecideResult& out) {
  std::vector<Arc> steps;
  std::vector<char> loop_at(ts.num_states(), 0);
  std::vector<int> loop_event(ts.num_states(), -1);
  for (const Arc& a : ts.arcs()) {
    if (a.src == a.dst) {
      if (loop_at[a.src]) {  // one loop per rung
        out.decision = Decision::unsolvable;
        return;
      }
      loop_at[a.src] = 1;
      loop_event[a.src] = a.event;
    } else {
      steps.push_back(a);
    }
  }

  std::vector<int> step_out(ts.num_states(), -1);
  for (size_t i = 0; i < steps.size(); ++i) {
    if (step_out[steps[i].src] >= 0) {
      out.decision = Decision::unsolvable;
      return;
    }
    step_out[steps[i].src] = static_cast<int>(i);
  }

  // Walk the steps from the initial state: a simple path covering every
  // state, each target looping on its incoming event, no loop at the start.
  std::vector<Arc> path;
  std::vector<char> visited(ts.num_states(), 0);
  int s = ts.initial();
  visited[s] = 1;
  while (step_out[s] >= 0) {
    const Arc& a = steps[step_out[s]];
    if (visited[a.dst]) {
      out.decision = Decision::unsolvable;
      return;
    }
    visited[a.dst] = 1;
    path.push_back(a);
    s = a.dst;
  }
  if (path.size() != steps.size() ||
      static_cast<int>(path.size()) != ts.num_states() - 1 ||
      loop_at[ts.initial()]) {
    out.decision = Decision::unsolvable;
    return;
  }
  for (const Arc& a : path) {
    if (!loop_at[a.dst] || loop_event[a.dst] != a.event) {
      out.decision = Decision::unsolvable;
      return;
    }
  }

  TsBuilder b;
  b.name(ts.name() + "_erased").initial(ts.state_name(ts.initial()));
  for (int e = 0; e < ts.num_events(); ++e) b.event(ts.event_name(e));
  for (const Arc& a : path)
    b.arc(ts.state_name(a.src), ts.event_name(a.event), ts.state_name(a.dst));
  TsBuildResult br = b.build();
  assert(br.ok());
  const TransitionSystem erased = *std::move(br.ts);
  const TransitionSystem w = cycle_extension(erased);
  const CycleInfo c = make_cycle_info(w);

  // Indices by name: the rebuilt systems may order states differently.
  std::vector<int> ts_state(erased.num_states()), w_state(erased.num_states());
  for (int i = 0; i < erased.num_states(); ++i) {
    ts_state[i] = *ts.state_index(erased.state_name(i));
    w_state[i] = *w.state_index(erased.state_name(i));
  }
  std::vector<int> w_event(ts.num_events());
  for (int e = 0; e < ts.num_events(); ++e)
    w_event[e] = *w.event_index(ts.event_name(e));

  std::vector<char> enters(ts.num_states() * ts.num_events(), 0);
  for (const Arc& a : path) enters[a.dst * ts.num_events() + a.event] = 1;

  const EsspRoute route{I::used, I::res, false, false, I::used};
  for (const Atom& atom : enumerate_atoms(erased)) {
    // Event/state atoms where the event enters the state do not exist in
    // the original system: the rung loop makes the event occur there.
    std::optional<Region> found;
    Atom original = atom;
    if (atom.kind == Atom::Kind::state_pair) {
      original = ssp_atom(ts_state[atom.a], ts_state[atom.b]);
      found = solve_ssp(c, w_state[atom.a], w_state[atom.b], I::res,
                        out.nodes);
    } else {
      original = essp_atom(atom.a, ts_state[atom.b]);
      if (enters[ts_state[atom.b] * ts.num_events() + atom.a]) continue;
      found = solve_essp(c, w_event[atom.a], w_state[atom.b], route,
                         out.nodes);
    }
    if (!found) {
      out.decision = Decision::unsolvable;
      out.failing = original;
      return;
    }
  }
  out.decision = Decision::solvable;
}

}  // namespace

DecideResult decide_small_g(const TransitionSystem& ts, NetType type,
                            [[maybe_unused]] int g) {
  assert(small_bound_decider_applies(type, g));
  assert(ts.compute_bound() <= g);
  DecideResult out;
  out.decision = Decision::solvable;

  const std::vector<Atom> atoms = enumerate_atoms(ts);
  if (atoms.empty()) return out;  // single state, every event looping there

  switch (*classify_row(type)) {
    case 1:
      decide_no_lift(ts, out);
      return out;
    case 2:
      decide_ladder(ts, out);
      return out;
    case 9: {
      // Any separable shape here collapses to at most three states: each
      // non-loop arc forces its event onto the target's unique out-arc, and
      // four distinct chained states defeat every signature.
      if (ts.num_states() > 3) {
        out.decision = Decision::unsolvable;
        return out;
      }
      brute_force_atoms(ts, type, atoms, out);
      return out;
    }
    case 10: {
      // Every occurring event must occur at the initial state.  These types
      // either move supports one way only (nop with inp/used or with
      // out/free), stranding any region for (e, initial) on the unreachable
      // side, or have no partial member at all, leaving the atom without a
      // signature.  Events that never occur are exempt: a constant region
      // handles them.
      for (int e = 0; e < ts.num_events(); ++e) {
        bool occurs = false;
        for (const Arc& a : ts.arcs()) occurs |= a.event == e;
        if (occurs && ts.delta(ts.initial(), e) < 0) {
          out.decision = Decision::unsolvable;
          out.failing = essp_atom(e, ts.initial());
          return out;
        }
      }
      brute_force_atoms(ts, type, atoms, out);
      return out;
    }
    default: {
      // No shortcut is sound here (a swap or an opposing pair can lift the
      // support back), so enumerate over the full alphabet.
      brute_force_atoms(ts, type, atoms, out);
      return out;
    }
  }
}

}  // namespace boolnet
