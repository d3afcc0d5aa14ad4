#include "boolnet/gadgets.hpp"

#include <cassert>
#include <map>

#include "boolnet/complexity.hpp"
#include "boolnet/type_morphism.hpp"

namespace boolnet {

namespace {

using I = Interaction;

std::string num(int v) { return std::to_string(v); }

// Every family's region recipe is phrased for one canonical orientation;
// the mirrored types reuse the same transition system and transport the
// region through the polarity involution.
bool canonical_orientation(GadgetFamily f, NetType t) {
  switch (f) {
    case GadgetFamily::t1: return t.contains(I::inp);
    case GadgetFamily::t2: return t.contains(I::used);
    case GadgetFamily::t3: return t.contains(I::inp) && t.contains(I::set);
    case GadgetFamily::t4: return t.contains(I::set);
    case GadgetFamily::t5: return t.contains(I::inp);
    case GadgetFamily::t6: return t.contains(I::inp);
    case GadgetFamily::t7: return t.contains(I::inp) && t.contains(I::set);
  }
  return true;
}

int family_row(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t1: return 1;
    case GadgetFamily::t2: return 2;
    case GadgetFamily::t3: return 3;
    case GadgetFamily::t4: return 4;
    case GadgetFamily::t5: return 5;
    case GadgetFamily::t6: return 6;
    case GadgetFamily::t7: return 7;
  }
  return 0;
}

// How a connector event's signature follows from its target's support.
struct OplusRule {
  I at_sup0;
  I at_sup1;
};

OplusRule oplus_rule(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t1: return {I::nop, I::nop};   // every target holds 1
    case GadgetFamily::t2: return {I::nop, I::set};
    case GadgetFamily::t3: return {I::set, I::set};   // every target holds 1
    case GadgetFamily::t4: return {I::inp, I::nop};
    case GadgetFamily::t5: return {I::nop, I::set};
    case GadgetFamily::t6: return {I::inp, I::nop};
    case GadgetFamily::t7: return {I::inp, I::nop};
  }
  return {I::nop, I::nop};
}

I ominus_sig(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t6: return I::swap;  // gadget ends hold 0, the rail holds 1
    case GadgetFamily::t7: return I::set;   // gadget ends differ, the rail holds 1
    default: return I::nop;
  }
}

int initial_sup(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t1: return 1;
    case GadgetFamily::t2: return 0;
    case GadgetFamily::t3: return 0;
    case GadgetFamily::t4: return 0;
    case GadgetFamily::t5: return 0;
    case GadgetFamily::t6: return 1;
    case GadgetFamily::t7: return 1;
  }
  return 0;
}

// Support of a gadget's entry state under the model region.
struct EntrySup {
  enum Kind { zero, one, var_in_model, var_not_in_model };
  Kind kind = one;
  int var = -1;

  int resolve(const std::vector<char>& in_model) const {
    switch (kind) {
      case zero: return 0;
      case one: return 1;
      case var_in_model: return in_model[var] ? 1 : 0;
      case var_not_in_model: return in_model[var] ? 0 : 1;
    }
    return 0;
  }
};

struct Assembly {
  TsBuilder builder;
  struct Block {
    std::string first, last;
    EntrySup entry;
  };
  std::vector<Block> blocks;

  // chain prefix_0 -e0-> prefix_1 -e1-> ... ; registers the block
  void path(const std::string& prefix, const std::vector<std::string>& events,
            EntrySup entry = {EntrySup::one, -1}) {
    for (size_t p = 0; p < events.size(); ++p) {
      builder.arc(prefix + "_" + num(p), events[p], prefix + "_" + num(p + 1));
    }
    blocks.push_back({prefix + "_0", prefix + "_" + num(events.size()), entry});
  }

  void loop(const std::string& state, const std::string& event) {
    builder.arc(state, event, state);
  }
};

std::string bot(int q) { return "bot_" + num(q); }
std::string oplus(int q) { return "oplus_" + num(q); }
std::string ominus(int q) { return "ominus_" + num(q); }

// rail with one anchor state per block: bot_q -oplus_q-> first(block q);
// used by the bound-2 and bound-3 families, which start on the rail
void join_with_rail(Assembly& a, std::vector<Gadget::Connector>& connectors,
                    bool rail_loops) {
  int n = static_cast<int>(a.blocks.size());
  for (int q = 0; q + 1 < n; ++q) {
    a.builder.arc(bot(q), ominus(q + 1), bot(q + 1));
    if (rail_loops) a.loop(bot(q + 1), ominus(q + 1));
  }
  for (int q = 0; q < n; ++q) {
    a.builder.arc(bot(q), oplus(q), a.blocks[q].first);
    if (rail_loops) a.loop(a.blocks[q].first, oplus(q));
    connectors.push_back({oplus(q), a.blocks[q].entry.kind, a.blocks[q].entry.var});
  }
  a.builder.initial(bot(0));
}

// degree-1 interleaving: last(q-1) -ominus_q-> bot_q -oplus_q-> first(q)
void join_in_line(Assembly& a, std::vector<Gadget::Connector>& connectors) {
  int n = static_cast<int>(a.blocks.size());
  for (int q = 1; q < n; ++q) {
    a.builder.arc(a.blocks[q - 1].last, ominus(q), bot(q));
    a.builder.arc(bot(q), oplus(q), a.blocks[q].first);
    connectors.push_back({oplus(q), a.blocks[q].entry.kind, a.blocks[q].entry.var});
  }
  a.builder.initial(a.blocks[0].first);
}

std::string var_event(const Instance& inst, int clause, int pos) {
  return "X_" + num(inst.clauses[clause][pos]);
}

// ---- family constructions ----------------------------------------------

void build_t1(Assembly& a, const Instance& inst) {
  int m = inst.num_variables;
  for (int i = 0; i < m; ++i) {
    std::string t = "t_" + num(i);
    a.path(t, {var_event(inst, i, 0), var_event(inst, i, 1),
               var_event(inst, i, 2), "k_1"});
    a.builder.arc(t + "_0", "k_0", t + "_5");
  }
  a.path("m", {"k_0", "k_1"});
}

void build_t2(Assembly& a, const Instance& inst) {
  int m = inst.num_variables;
  // three header blocks pin the four auxiliary signatures
  a.path("h_0", {"k_0", "k_1"});
  a.loop("h_0_1", "k_0");
  a.loop("h_0_2", "k_1");
  a.path("h_1", {"k_2"});
  a.loop("h_1_0", "k_0");
  a.loop("h_1_1", "k_2");
  a.loop("h_1_1", "k_1");
  a.path("h_2", {"k_3"}, {EntrySup::zero, -1});
  a.loop("h_2_0", "k_1");
  a.loop("h_2_1", "k_3");
  a.loop("h_2_1", "k_0");
  // neutralizers for the z events
  for (int j = 0; j < 16 * m; ++j) {
    std::string f = "f_" + num(j), z = "z_" + num(j);
    a.path(f, {z, "c_" + num(2 * j), "c_" + num(2 * j + 1), z},
           {EntrySup::zero, -1});
    a.loop(f + "_1", z);
    a.loop(f + "_1", "k_2");
    a.loop(f + "_2", "c_" + num(2 * j));
    a.loop(f + "_3", "c_" + num(2 * j + 1));
    a.loop(f + "_4", z);
    a.loop(f + "_4", "k_3");
  }
  // three rotations per clause; the row whose variable fires last carries
  // that variable's y event, looped after the first and second variable
  for (int i = 0; i < m; ++i) {
    for (int n = 0; n < 3; ++n) {
      std::string t = "t_" + num(i) + "_" + num(n);
      int z0 = 16 * i + 4 * n;
      std::string za = "z_" + num(z0), zb = "z_" + num(z0 + 1),
                  zc = "z_" + num(z0 + 2), zd = "z_" + num(z0 + 3);
      std::string va = var_event(inst, i, n % 3),
                  vb = var_event(inst, i, (n + 1) % 3),
                  vc = var_event(inst, i, (n + 2) % 3);
      std::string y = "y_" + num(3 * i + (n + 2) % 3);
      a.path(t, {za, va, zb, vb, zc, vc, zd});
      a.loop(t + "_0", "k_0");
      a.loop(t + "_1", za);
      a.loop(t + "_2", va);
      a.loop(t + "_2", y);
      a.loop(t + "_3", zb);
      a.loop(t + "_4", vb);
      a.loop(t + "_4", y);
      a.loop(t + "_5", zc);
      a.loop(t + "_6", vc);
      a.loop(t + "_7", zd);
      a.loop(t + "_7", "k_1");
    }
  }
  // the y ladder demanding one satisfied position per clause
  for (int i = 0; i < m; ++i) {
    std::string t = "t_" + num(i) + "_3";
    int z0 = 16 * i + 12;
    std::vector<std::string> events;
    for (int p = 0; p < 3; ++p) {
      events.push_back("z_" + num(z0 + p));
      events.push_back("y_" + num(3 * i + p));
    }
    events.push_back("z_" + num(z0 + 3));
    a.path(t, events, {EntrySup::zero, -1});
    a.loop(t + "_0", "k_1");
    for (size_t p = 0; p < events.size(); ++p) {
      a.loop(t + "_" + num(p + 1), events[p]);
    }
    a.loop(t + "_7", "k_0");
  }
}

void build_t3(Assembly& a, const Instance& inst) {
  int m = inst.num_variables;
  // one long header block: 6m seven-state rows linked by r and c arcs
  for (int j = 0; j < 6 * m; ++j) {
    std::string h = "h_" + num(j);
    std::vector<std::string> events;
    if (j < 3 * m) {
      std::string z = "z_" + num(j), v = "v_" + num(j), q = "q_" + num(j);
      events = {"k", z, v, "k", q, z};
    } else {
      std::string w = "w_" + num(j - 3 * m), p = "p_" + num(j - 3 * m),
                  y = "y_" + num(j - 3 * m);
      events = {"k", w, p, "k", y, w};
    }
    for (size_t p = 0; p < events.size(); ++p) {
      a.builder.arc(h + "_" + num(p), events[p], h + "_" + num(p + 1));
    }
  }
  for (int j = 0; j + 1 < 6 * m; ++j) {
    a.builder.arc("h_" + num(j) + "_6", "r_" + num(j), "h_" + num(j + 1) + "_0");
    a.builder.arc("h_" + num(j) + "_6", "c_" + num(j), "h_" + num(j + 1) + "_6");
  }
  a.blocks.push_back({"h_0_0", "h_" + num(6 * m - 1) + "_6", {EntrySup::one, -1}});
  a.path("f_0", {"k", "n", "z_0", "k"});
  a.path("f_1", {"q_0", "k"});
  // diamonds keep the c events neutral
  for (int j = 0; j + 1 < 6 * m; ++j) {
    std::string g = "g_" + num(j), c = "c_" + num(j);
    a.builder.arc(g + "_0", c, g + "_1");
    a.builder.arc(g + "_0", "k", g + "_2");
    a.builder.arc(g + "_2", c, g + "_3");
    a.builder.arc(g + "_1", "k", g + "_3");
    a.blocks.push_back({g + "_0", g + "_3", {EntrySup::one, -1}});
  }
  // clause rotations with backward x arcs
  for (int i = 0; i < m; ++i) {
    for (int n = 0; n < 3; ++n) {
      std::string t = "t_" + num(i) + "_" + num(n);
      std::string va = var_event(inst, i, n % 3),
                  vb = var_event(inst, i, (n + 1) % 3),
                  vc = var_event(inst, i, (n + 2) % 3);
      auto back = [&](const std::string& x) {
        return "x_" + x.substr(2);  // X_<v> -> x_<v>
      };
      a.builder.arc(t + "_0", "k", t + "_1");
      a.builder.arc(t + "_1", "v_" + num(3 * i + n), t + "_2");
      a.builder.arc(t + "_1", "w_" + num(3 * i + n), t + "_5");
      a.builder.arc(t + "_2", va, t + "_3");
      a.builder.arc(t + "_3", vb, t + "_4");
      a.builder.arc(t + "_4", vc, t + "_5");
      a.builder.arc(t + "_3", back(va), t + "_2");
      a.builder.arc(t + "_4", back(vb), t + "_3");
      a.builder.arc(t + "_5", back(vc), t + "_4");
      a.blocks.push_back({t + "_0", t + "_5", {EntrySup::one, -1}});
    }
  }
}

void build_t4(Assembly& a, const Instance& inst, bool with_used) {
  int m = inst.num_variables;
  a.path("h_0", {"k_0", "z_0", "o", "k_1", "z_1", "z_0", "o", "k_0"},
         {EntrySup::zero, -1});
  a.path("h_1", {"z_0", "k_0"}, {EntrySup::zero, -1});
  a.path("h_2", {"z_1", "k_0"}, {EntrySup::zero, -1});
  a.path("h_3", {"k_0", "k_1"}, {EntrySup::zero, -1});
  if (with_used) a.path("h_4", {"k_1", "z_0", "k_1"});
  for (int i = 0; i < m; ++i) {
    a.path("t_" + num(i), {"k_1", var_event(inst, i, 0), var_event(inst, i, 1),
                           var_event(inst, i, 2), "k_0"});
  }
  for (int i = 0; i < m; ++i) {
    a.path("b_" + num(i), {"X_" + num(i), "k_0"}, {EntrySup::var_in_model, i});
  }
}

void build_t5(Assembly& a, const Instance& inst) {
  int m = inst.num_variables;
  a.path("h_0", {"k_0", "k_1", "z_0", "k_1", "z_1", "k_0"}, {EntrySup::zero, -1});
  a.path("h_1", {"k_0", "z_0", "k_0"}, {EntrySup::zero, -1});
  for (int i = 0; i < m; ++i) {
    a.path("t_" + num(i), {"k_1", var_event(inst, i, 0), var_event(inst, i, 1),
                           var_event(inst, i, 2), "k_0"},
           {EntrySup::zero, -1});
  }
  for (int i = 0; i < m; ++i) {
    a.path("b_" + num(i), {"X_" + num(i), "k_0"}, {EntrySup::var_in_model, i});
  }
}

void build_t6(Assembly& a, const Instance& inst) {
  int m = inst.num_variables;
  a.path("h_0", {"k", "y_0", "v", "k"});
  a.path("h_1", {"k", "y_1", "y_0", "k"});
  a.path("h_2", {"k", "y_0", "y_1", "y_0", "k"});
  a.path("h_3", {"y_1", "y_0", "v", "k"});
  a.path("f_0", {"k", "z_0", "v", "k"});
  a.path("f_1", {"k", "z_1", "v", "k"});
  for (int j = 0; j <= 10; ++j) {
    a.path("g_" + num(j), {"k", "z_0", "u_" + num(j), "z_1", "k"});
  }
  for (int i = 0; i < m; ++i) {
    std::string base = "t_" + num(i) + "_";
    a.path(base + "0", {"k", "u_0", var_event(inst, i, 0), "u_1",
                        var_event(inst, i, 1), "u_2", var_event(inst, i, 2),
                        "u_3", "k"});
    a.path(base + "1", {"k", "u_4", "u_5", var_event(inst, i, 0),
                        "w_" + num(3 * i), var_event(inst, i, 1), "u_6", "k"});
    a.path(base + "2", {"k", "u_4", "u_5", var_event(inst, i, 2),
                        "w_" + num(3 * i + 1), var_event(inst, i, 0), "u_6", "k"});
    a.path(base + "3", {"k", "u_4", "u_5", var_event(inst, i, 1),
                        "w_" + num(3 * i + 2), var_event(inst, i, 2), "u_6", "k"});
    for (int n = 0; n < 3; ++n) {
      a.path(base + num(4 + n), {"k", "u_7", "w_" + num(3 * i + n), "u_8", "k"});
    }
  }
  for (int i = 0; i < m; ++i) {
    a.path("b_" + num(i), {"X_" + num(i), "u_9", "u_10", "k"},
           {EntrySup::var_not_in_model, i});
  }
}

void build_t7(Assembly& a, const Instance& inst, bool with_test_events) {
  int m = inst.num_variables;
  a.path("h_0", {"k", "v_0"});
  a.path("h_1", {"v_0", "k"}, {EntrySup::zero, -1});
  a.path("h_2", {"k", "v_0", "v_1", "k"});
  a.path("h_3", {"k", "v_1", "v_0"});
  if (with_test_events) {
    a.path("h_4", {"k", "x", "v_0", "k"});
    a.path("h_5", {"k", "v_0", "x", "k"});
    for (int j = 0; j < 3; ++j) {
      std::string y = "y_" + num(j);
      a.path("h_" + num(6 + 2 * j), {"k", "x", y, "k"});
      a.path("h_" + num(7 + 2 * j), {"k", y, "x", "k"});
    }
    a.path("h_12", {"k", "y_0", "y_1", "y_2", "k"});
  }
  a.path("f_0", {"k", "z_0", "v_0", "k"});
  a.path("f_1", {"k", "z_1", "v_0", "k"});
  a.path("f_2", {"k", "z_0", "z_1", "z_2", "k"});
  for (int j = 0; j <= 13; ++j) {
    a.path("g_" + num(j), {"k", "z_0", "u_" + num(j), "z_1", "k"});
  }
  for (int j = 0; j <= 13; ++j) {
    a.path("n_" + num(j), {"k", "z_2", "u_" + num(j), "v_0", "k"});
  }
  for (int i = 0; i < m; ++i) {
    std::string base = "t_" + num(i) + "_";
    a.path(base + "0", {"k", "u_0", var_event(inst, i, 0), "u_1",
                        var_event(inst, i, 1), "u_2", var_event(inst, i, 2),
                        "u_3", "k"});
    a.path(base + "1", {"k", "u_4", var_event(inst, i, 0), "w_" + num(3 * i),
                        var_event(inst, i, 1), "u_5", "u_6", "k"});
    a.path(base + "2", {"k", "u_4", var_event(inst, i, 2), "w_" + num(3 * i + 1),
                        var_event(inst, i, 0), "u_5", "u_6", "k"});
    a.path(base + "3", {"k", "u_4", var_event(inst, i, 1), "w_" + num(3 * i + 2),
                        var_event(inst, i, 2), "u_5", "u_6", "k"});
    for (int n = 0; n < 3; ++n) {
      a.path(base + num(4 + n),
             {"k", "u_7", "u_8", "w_" + num(3 * i + n), "u_9", "u_10", "k"});
    }
  }
  for (int i = 0; i < m; ++i) {
    a.path("b_" + num(i), {"X_" + num(i), "u_11", "k"},
           {EntrySup::var_in_model, i});
  }
}

struct AlphaSpec {
  const char* event;
  const char* state;
};

AlphaSpec alpha_spec(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t1: return {"k_1", "m_0"};
    case GadgetFamily::t2: return {"k_0", "h_0_2"};
    case GadgetFamily::t3: return {"k", "h_0_6"};
    case GadgetFamily::t4: return {"k_0", "h_0_6"};
    case GadgetFamily::t5: return {"k_0", "h_0_3"};
    case GadgetFamily::t6: return {"k", "h_0_2"};
    case GadgetFamily::t7: return {"k", "h_3_3"};
  }
  return {"", ""};
}

// ---- model region signature rules --------------------------------------

struct NameRef {
  std::string_view head;  // up to the first underscore
  int index = -1;         // numeric suffix when present
};

NameRef split_name(std::string_view name) {
  NameRef ref;
  size_t us = name.find('_');
  if (us == std::string_view::npos) {
    ref.head = name;
    return ref;
  }
  ref.head = name.substr(0, us);
  int value = 0;
  bool any = false;
  for (char c : name.substr(us + 1)) {
    if (c < '0' || c > '9') return {name, -1};  // multi-part suffix: treat whole
    value = value * 10 + (c - '0');
    any = true;
  }
  if (any) ref.index = value;
  return ref;
}

// w_{3i+n} mediates between two variables of clause i; swap when the
// witness variable of its rotation row is in the model
bool w_event_swaps(const Instance& inst, const std::vector<char>& in_model,
                   int j) {
  int i = j / 3, n = j % 3;
  int pos = n == 0 ? 1 : (n == 1 ? 0 : 2);
  return in_model[inst.clauses[i][pos]];
}

I family_sig(GadgetFamily f, const Instance& inst,
             const std::vector<char>& in_model, std::string_view name) {
  NameRef ref = split_name(name);
  auto var_in_model = [&](int v) { return v >= 0 && in_model[v]; };
  switch (f) {
    case GadgetFamily::t1:
      if (name == "k_0") return I::inp;
      if (name == "k_1") return I::free;
      if (ref.head == "X") return var_in_model(ref.index) ? I::inp : I::nop;
      return I::nop;
    case GadgetFamily::t2:
      if (name == "k_0") return I::used;
      if (name == "k_1" || name == "k_2") return I::res;
      if (name == "k_3") return I::set;
      if (ref.head == "c") return ref.index % 2 == 1 ? I::set : I::nop;
      if (ref.head == "X") return var_in_model(ref.index) ? I::res : I::nop;
      if (ref.head == "y") {
        int i = ref.index / 3, p = ref.index % 3;
        return in_model[inst.clauses[i][p]] ? I::set : I::nop;
      }
      return I::nop;
    case GadgetFamily::t3:
      if (name == "k") return I::inp;
      if (name == "n") return I::set;
      if (ref.head == "v" || ref.head == "p" || ref.head == "r") return I::set;
      if (ref.head == "X") return var_in_model(ref.index) ? I::inp : I::nop;
      if (ref.head == "x") return var_in_model(ref.index) ? I::set : I::nop;
      return I::nop;
    case GadgetFamily::t4:
      if (name == "k_0") return I::out;
      if (name == "k_1") return I::set;
      if (name == "o") return I::inp;
      if (ref.head == "X") return var_in_model(ref.index) ? I::inp : I::nop;
      return I::nop;
    case GadgetFamily::t5:
      if (name == "k_0") return I::free;
      if (name == "k_1") return I::set;
      if (name == "z_1") return I::inp;
      if (ref.head == "X") return var_in_model(ref.index) ? I::inp : I::nop;
      return I::nop;
    case GadgetFamily::t6:
      if (name == "k") return I::inp;
      if (name == "v" || name == "y_1") return I::swap;
      if (ref.head == "u") return I::swap;
      if (ref.head == "X") return var_in_model(ref.index) ? I::swap : I::nop;
      if (ref.head == "w") {
        return w_event_swaps(inst, in_model, ref.index) ? I::swap : I::res;
      }
      return I::nop;
    case GadgetFamily::t7:
      if (name == "k") return I::inp;
      if (name == "v_0") return I::swap;
      if (name == "v_1" || name == "z_2") return I::set;
      if (ref.head == "y") return I::set;
      if (ref.head == "u") return I::swap;
      if (ref.head == "X") return var_in_model(ref.index) ? I::swap : I::nop;
      if (ref.head == "w") {
        return w_event_swaps(inst, in_model, ref.index) ? I::swap : I::set;
      }
      return I::nop;
  }
  return I::nop;
}

}  // namespace

std::string_view to_string(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t1: return "t1";
    case GadgetFamily::t2: return "t2";
    case GadgetFamily::t3: return "t3";
    case GadgetFamily::t4: return "t4";
    case GadgetFamily::t5: return "t5";
    case GadgetFamily::t6: return "t6";
    case GadgetFamily::t7: return "t7";
  }
  return "?";
}

std::optional<GadgetFamily> gadget_family_from_string(std::string_view s) {
  for (GadgetFamily f :
       {GadgetFamily::t1, GadgetFamily::t2, GadgetFamily::t3, GadgetFamily::t4,
        GadgetFamily::t5, GadgetFamily::t6, GadgetFamily::t7}) {
    if (to_string(f) == s) return f;
  }
  return std::nullopt;
}

NetType default_gadget_type(GadgetFamily f) {
  switch (f) {
    case GadgetFamily::t1: return NetType::of(I::nop, I::inp, I::free);
    case GadgetFamily::t2: return NetType::of(I::nop, I::set, I::res, I::used);
    case GadgetFamily::t3: return NetType::of(I::nop, I::inp, I::set);
    case GadgetFamily::t4: return NetType::of(I::nop, I::inp, I::out, I::set);
    case GadgetFamily::t5: return NetType::of(I::nop, I::inp, I::set, I::free);
    case GadgetFamily::t6: return NetType::of(I::nop, I::inp, I::res, I::swap);
    case GadgetFamily::t7: return NetType::of(I::nop, I::inp, I::set, I::swap);
  }
  return {};
}

bool gadget_type_allowed(GadgetFamily f, NetType type) {
  return classify_row(type) == family_row(f);
}

Gadget build_gadget(GadgetFamily f, const Instance& inst,
                    std::optional<NetType> type) {
  Gadget g;
  g.family = f;
  g.instance = inst;
  g.type = type.value_or(default_gadget_type(f));
  assert(gadget_type_allowed(f, g.type));

  NetType canonical =
      canonical_orientation(f, g.type) ? g.type : polarity_swap(g.type);

  Assembly a;
  a.builder.name(std::string(to_string(f)) + "_m" + num(inst.num_variables));
  switch (f) {
    case GadgetFamily::t1:
      build_t1(a, inst);
      g.declared_bound = 2;
      break;
    case GadgetFamily::t2:
      build_t2(a, inst);
      g.declared_bound = 3;
      break;
    case GadgetFamily::t3:
      build_t3(a, inst);
      g.declared_bound = 2;
      break;
    case GadgetFamily::t4:
      build_t4(a, inst, canonical.contains(I::used));
      g.declared_bound = 1;
      break;
    case GadgetFamily::t5:
      build_t5(a, inst);
      g.declared_bound = 1;
      break;
    case GadgetFamily::t6:
      build_t6(a, inst);
      g.declared_bound = 1;
      break;
    case GadgetFamily::t7:
      build_t7(a, inst, canonical.intersect(NetType::of(I::used, I::free)).mask() != 0);
      g.declared_bound = 1;
      break;
  }

  switch (f) {
    case GadgetFamily::t2:
      join_with_rail(a, g.connectors, true);
      break;
    case GadgetFamily::t1:
    case GadgetFamily::t3:
      join_with_rail(a, g.connectors, false);
      break;
    default:
      join_in_line(a, g.connectors);
      break;
  }

  TsBuildResult built = a.builder.build();
  assert(built.ok());
  g.ts = std::move(*built.ts);

  AlphaSpec spec = alpha_spec(f);
  auto e = g.ts.event_index(spec.event);
  auto s = g.ts.state_index(spec.state);
  assert(e && s);
  g.alpha = essp_atom(*e, *s);
  return g;
}

std::optional<Region> model_to_region(const Gadget& g,
                                      const std::vector<int>& model) {
  if (!is_model(g.instance, model)) return std::nullopt;
  std::vector<char> in_model(g.instance.num_variables, 0);
  for (int v : model) in_model[v] = 1;

  std::vector<I> sig(g.ts.num_events(), I::nop);
  for (int e = 0; e < g.ts.num_events(); ++e) {
    sig[e] = family_sig(g.family, g.instance, in_model, g.ts.event_name(e));
  }
  OplusRule rule = oplus_rule(g.family);
  for (const Gadget::Connector& c : g.connectors) {
    EntrySup entry{static_cast<EntrySup::Kind>(c.entry_kind), c.entry_var};
    int sup = entry.resolve(in_model);
    auto e = g.ts.event_index(c.event);
    if (!e) return std::nullopt;
    sig[*e] = sup ? rule.at_sup1 : rule.at_sup0;
  }
  I rail = ominus_sig(g.family);
  for (int e = 0; e < g.ts.num_events(); ++e) {
    if (split_name(g.ts.event_name(e)).head == "ominus") sig[e] = rail;
  }

  auto region = extend_region(g.ts, initial_sup(g.family), sig);
  if (!region) return std::nullopt;
  if (!canonical_orientation(g.family, g.type)) {
    *region = polarity_transport(*region);
  }
  return region;
}

GadgetVerification verify_gadget(const Gadget& g, const SolveOptions& opts) {
  GadgetVerification result;
  ModelSearchResult truth = brute_force_model(g.instance);
  AtomResult solved = solve_atom(g.ts, g.type, g.alpha, opts);
  result.nodes = solved.nodes;

  if (truth.status == ModelSearchResult::Status::too_large) {
    result.outcome = GadgetVerification::Outcome::inconclusive;
    result.detail = "instance too large for ground truth";
    return result;
  }
  if (solved.status == SolveStatus::inconclusive) {
    result.outcome = GadgetVerification::Outcome::inconclusive;
    result.detail = "solver budget exhausted";
    return result;
  }

  bool satisfiable = truth.status == ModelSearchResult::Status::found;
  bool solvable = solved.status == SolveStatus::solved;
  if (satisfiable) result.model = truth.model;

  if (satisfiable && solvable) {
    auto witness = model_to_region(g, truth.model);
    if (witness && region_valid(g.ts, g.type, *witness) &&
        region_separates(*witness, g.alpha)) {
      result.outcome = GadgetVerification::Outcome::confirmed_positive;
      result.detail = "solver and model region agree";
    } else {
      result.outcome = GadgetVerification::Outcome::refuted;
      result.detail = "model region construction failed";
    }
  } else if (!satisfiable && !solvable) {
    result.outcome = GadgetVerification::Outcome::confirmed_negative;
    result.detail = "atom proven unsolvable, no model exists";
  } else if (satisfiable) {
    result.outcome = GadgetVerification::Outcome::refuted;
    result.detail = "instance satisfiable but atom proven unsolvable";
  } else {
    result.outcome = GadgetVerification::Outcome::refuted;
    result.detail = "instance unsatisfiable but atom solved";
  }
  return result;
}

}  // namespace boolnet
