#include "boolnet/solver.hpp"

#include <algorithm>
#include <cassert>

namespace boolnet {

namespace {

constexpr int8_t kUnknown = 2;

// Backtracking search for one atom.  Variables are the initial state's
// support and one signature value per event; supports of the remaining
// states are derived by propagation along arcs, so exhausting the variable
// space is a proof that no region separates the atom.
struct Search {
  const TransitionSystem& ts;
  NetType type;
  uint64_t budget;
  uint64_t nodes = 0;
  bool budget_hit = false;

  int n, k;
  std::vector<int8_t> sup;  // 0, 1 or kUnknown
  std::vector<int8_t> sig;  // Interaction value or -1
  std::vector<std::vector<int>> arcs_of_event;
  std::vector<std::vector<int>> arcs_touching;  // by state, src or dst
  std::vector<int> branch_order;                // events
  std::vector<Interaction> values;              // type members, fixed order
  bool feasible[2][2];  // some member maps x to y

  struct TrailEntry {
    int8_t kind;  // 0 sup, 1 sig
    int index;
  };
  std::vector<TrailEntry> trail;

  int ssp_a = -1, ssp_b = -1;

  std::optional<Region> found;

  Search(const TransitionSystem& ts_, NetType type_, uint64_t budget_)
      : ts(ts_), type(type_), budget(budget_) {
    n = ts.num_states();
    k = ts.num_events();
    sup.assign(n, kUnknown);
    sig.assign(k, -1);
    arcs_of_event.resize(k);
    arcs_touching.resize(n);
    const auto& arcs = ts.arcs();
    for (int ai = 0; ai < static_cast<int>(arcs.size()); ++ai) {
      const Arc& a = arcs[ai];
      arcs_of_event[a.event].push_back(ai);
      arcs_touching[a.src].push_back(ai);
      if (a.dst != a.src) arcs_touching[a.dst].push_back(ai);
    }
    values = type.members();
    for (int x = 0; x <= 1; ++x) {
      for (int y = 0; y <= 1; ++y) {
        feasible[x][y] = false;
        for (Interaction i : values) {
          if (interaction_apply_or(i, x) == y) feasible[x][y] = true;
        }
      }
    }
    // events in order of first occurrence along a breadth-first sweep,
    // ties and unused events by name
    std::vector<int> by_name(k);
    for (int e = 0; e < k; ++e) by_name[e] = e;
    std::sort(by_name.begin(), by_name.end(), [&](int x, int y) {
      return ts.event_name(x) < ts.event_name(y);
    });
    std::vector<char> queued(k, 0);
    for (int s : ts.bfs_order()) {
      for (int e : by_name) {
        if (!queued[e] && ts.delta(s, e) >= 0) {
          queued[e] = 1;
          branch_order.push_back(e);
        }
      }
    }
    for (int e : by_name) {
      if (!queued[e]) branch_order.push_back(e);
    }
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      TrailEntry t = trail.back();
      trail.pop_back();
      if (t.kind == 0) {
        sup[t.index] = kUnknown;
      } else {
        sig[t.index] = -1;
      }
    }
  }

  bool assign_sup(int s, int v) {
    if (sup[s] != kUnknown) return sup[s] == v;
    sup[s] = static_cast<int8_t>(v);
    trail.push_back({0, s});
    if (s == ssp_a && sup[ssp_b] == v) return false;
    if (s == ssp_b && sup[ssp_a] == v) return false;
    for (int ai : arcs_touching[s]) {
      if (!check_arc(ai)) return false;
    }
    return true;
  }

  bool assign_sig(int e, Interaction i) {
    assert(sig[e] < 0);
    sig[e] = static_cast<int8_t>(i);
    trail.push_back({1, e});
    for (int ai : arcs_of_event[e]) {
      if (!check_arc(ai)) return false;
    }
    return true;
  }

  bool check_arc(int ai) {
    const Arc& a = ts.arcs()[ai];
    int si = sig[a.event];
    int x = sup[a.src], y = sup[a.dst];
    if (si < 0) {
      if (x != kUnknown && y != kUnknown) return feasible[x][y];
      return true;
    }
    Interaction i = static_cast<Interaction>(si);
    if (x == kUnknown) {
      if (!interaction_defined(i, 0)) return assign_sup(a.src, 1);
      if (!interaction_defined(i, 1)) return assign_sup(a.src, 0);
      if (y != kUnknown) {
        bool p0 = interaction_apply(i, 0) == y;
        bool p1 = interaction_apply(i, 1) == y;
        if (!p0 && !p1) return false;
        if (p0 != p1) return assign_sup(a.src, p0 ? 0 : 1);
      }
      return true;
    }
    int y2 = interaction_apply_or(i, x);
    if (y2 < 0) return false;
    if (y == kUnknown) return assign_sup(a.dst, y2);
    return y == y2;
  }

  bool take_node() {
    if (nodes >= budget) {
      budget_hit = true;
      return false;
    }
    ++nodes;
    return true;
  }

  bool dfs(size_t pos) {
    while (pos < branch_order.size() && sig[branch_order[pos]] >= 0) ++pos;
    if (pos == branch_order.size()) return record_solution();
    int e = branch_order[pos];
    for (Interaction i : values) {
      if (!take_node()) return false;
      size_t mark = trail.size();
      if (assign_sig(e, i) && dfs(pos + 1)) return true;
      undo_to(mark);
      if (budget_hit) return false;
    }
    return false;
  }

  bool branch_init() {
    int init = ts.initial();
    if (sup[init] != kUnknown) return dfs(0);
    for (int v = 0; v <= 1; ++v) {
      if (!take_node()) return false;
      size_t mark = trail.size();
      if (assign_sup(init, v) && dfs(0)) return true;
      undo_to(mark);
      if (budget_hit) return false;
    }
    return false;
  }

  bool record_solution() {
    Region r;
    r.sup.resize(n);
    r.sig.resize(k);
    for (int s = 0; s < n; ++s) {
      // with every signature and the initial support fixed, propagation has
      // reached every state
      assert(sup[s] != kUnknown);
      r.sup[s] = static_cast<uint8_t>(sup[s]);
    }
    for (int e = 0; e < k; ++e) {
      r.sig[e] = static_cast<Interaction>(sig[e]);
    }
    if (!region_valid(ts, type, r)) return false;
    found = std::move(r);
    return true;
  }
};

}  // namespace

AtomResult solve_atom(const TransitionSystem& ts, const NetType& type,
                      const Atom& atom, const SolveOptions& opts) {
  Search search(ts, type, opts.node_budget);
  AtomResult result;

  bool solved = false;
  if (atom.kind == Atom::Kind::event_state) {
    // choose the separating event's signature first: it must be a partial
    // interaction, undefined exactly at the state's support
    for (Interaction i : search.values) {
      if (!is_partial(i)) continue;
      if (!search.take_node()) break;
      size_t mark = search.trail.size();
      int u = interaction_defined(i, 0) ? 1 : 0;
      if (search.assign_sig(atom.a, i) && search.assign_sup(atom.b, u) &&
          search.branch_init()) {
        solved = true;
        break;
      }
      search.undo_to(mark);
      if (search.budget_hit) break;
    }
  } else {
    search.ssp_a = atom.a;
    search.ssp_b = atom.b;
    for (int v = 0; v <= 1 && !solved; ++v) {
      if (!search.take_node()) break;
      size_t mark = search.trail.size();
      if (search.assign_sup(atom.a, v) && search.assign_sup(atom.b, 1 - v) &&
          search.branch_init()) {
        solved = true;
        break;
      }
      search.undo_to(mark);
      if (search.budget_hit) break;
    }
  }

  result.nodes = search.nodes;
  if (solved) {
    result.status = SolveStatus::solved;
    result.region = std::move(search.found);
  } else if (search.budget_hit) {
    result.status = SolveStatus::inconclusive;
  } else {
    result.status = SolveStatus::unsolvable;
  }
  return result;
}

Decision SeparationReport::combined() const {
  if (ssp == Decision::unsolvable || essp == Decision::unsolvable) {
    return Decision::unsolvable;
  }
  if (ssp == Decision::inconclusive || essp == Decision::inconclusive) {
    return Decision::inconclusive;
  }
  return Decision::solvable;
}

namespace {

void add_region(std::vector<Region>& pool, const Region& r) {
  if (std::find(pool.begin(), pool.end(), r) == pool.end()) pool.push_back(r);
}

bool pool_separates(const std::vector<Region>& pool, const Atom& atom) {
  for (const Region& r : pool) {
    if (region_separates(r, atom)) return true;
  }
  return false;
}

}  // namespace

DecideResult decide_solvable(const TransitionSystem& ts, const NetType& type,
                             const SolveOptions& opts) {
  DecideResult result;
  for (const Atom& atom : enumerate_atoms(ts)) {
    if (pool_separates(result.regions, atom)) continue;
    AtomResult r = solve_atom(ts, type, atom, opts);
    result.nodes += r.nodes;
    if (r.status == SolveStatus::solved) {
      add_region(result.regions, *r.region);
      continue;
    }
    result.failing = atom;
    result.decision = r.status == SolveStatus::unsolvable
                          ? Decision::unsolvable
                          : Decision::inconclusive;
    return result;
  }
  result.decision = Decision::solvable;
  return result;
}

SeparationReport decide_separation(const TransitionSystem& ts,
                                   const NetType& type,
                                   const SolveOptions& opts) {
  SeparationReport report;
  bool ssp_open = true, essp_open = true;
  for (const Atom& atom : enumerate_atoms(ts)) {
    bool is_ssp = atom.kind == Atom::Kind::state_pair;
    if (is_ssp ? !ssp_open : !essp_open) continue;
    if (pool_separates(report.regions, atom)) continue;
    AtomResult r = solve_atom(ts, type, atom, opts);
    report.nodes += r.nodes;
    if (r.status == SolveStatus::solved) {
      add_region(report.regions, *r.region);
      continue;
    }
    Decision d = r.status == SolveStatus::unsolvable ? Decision::unsolvable
                                                     : Decision::inconclusive;
    if (is_ssp) {
      report.ssp = d;
      report.ssp_failing = atom;
      ssp_open = false;
    } else {
      report.essp = d;
      report.essp_failing = atom;
      essp_open = false;
    }
  }
  return report;
}

std::optional<BooleanNet> net_from_regions(const TransitionSystem& ts,
                                           const NetType& type,
                                           const std::vector<Region>& regions,
                                           const std::string& name) {
  for (const Region& r : regions) {
    if (!region_valid(ts, type, r)) return std::nullopt;
  }
  for (const Atom& atom : enumerate_atoms(ts)) {
    if (!pool_separates(regions, atom)) return std::nullopt;
  }
  BooleanNet net(name, type);
  for (int e = 0; e < ts.num_events(); ++e) {
    net.add_transition(ts.event_name(e));
  }
  for (size_t i = 0; i < regions.size(); ++i) {
    int p = net.add_place("p" + std::to_string(i),
                          regions[i].sup[ts.initial()]);
    for (int e = 0; e < ts.num_events(); ++e) {
      net.set_flow(p, e, regions[i].sig[e]);
    }
  }
  return net;
}

SynthesisResult synthesize(const TransitionSystem& ts, const NetType& type,
                           const SolveOptions& opts) {
  SynthesisResult result;
  result.decide = decide_solvable(ts, type, opts);
  if (result.decide.decision == Decision::solvable) {
    result.net = net_from_regions(ts, type, result.decide.regions, ts.name());
    // an admissible pool is exactly what decide_solvable produced
    assert(result.net.has_value());
  }
  return result;
}

}  // namespace boolnet
