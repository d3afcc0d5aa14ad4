#include <doctest.h>

#include "boolnet/text_io.hpp"
#include "boolnet/ts_isomorphism.hpp"

using namespace boolnet;
using I = Interaction;

TEST_CASE("ts text round trip") {
  const char* text =
      "# a small cycle\n"
      "ts demo\n"
      "initial s0\n"
      "arc s0 a s1\n"
      "arc s1 b s0   # back edge\n";
  auto parsed = parse_ts(text);
  REQUIRE_MESSAGE(parsed.ok(), (parsed.errors.empty() ? std::string() : parsed.errors[0]));
  CHECK(parsed.value->name() == "demo");
  CHECK(parsed.value->num_states() == 2);

  auto again = parse_ts(emit_ts(*parsed.value));
  REQUIRE(again.ok());
  CHECK(ts_isomorphic(*parsed.value, *again.value));
  CHECK(emit_ts(*parsed.value) == emit_ts(*again.value));
}

TEST_CASE("ts parse errors carry line numbers") {
  auto missing = parse_ts("arc a x b\n");
  REQUIRE_FALSE(missing.ok());
  CHECK(missing.errors[0] == "missing initial line");

  auto badtok = parse_ts("ts t\ninitial s\narc s a\n");
  REQUIRE_FALSE(badtok.ok());
  CHECK(badtok.errors[0] == "line 3: expected: arc <src> <event> <dst>");

  auto unknown = parse_ts("ts t\ninitial s\nedge s a s\n");
  REQUIRE_FALSE(unknown.ok());
  CHECK(unknown.errors[0] == "line 3: unknown directive 'edge'");

  auto nondet = parse_ts("initial s\narc s a p\narc s a q\n");
  REQUIRE_FALSE(nondet.ok());
  CHECK(nondet.errors[0].find("nondeterministic") != std::string::npos);
}

TEST_CASE("duplicate arcs survive parsing as a warning") {
  auto r = parse_ts("initial s\narc s a t\narc s a t\n");
  REQUIRE(r.ok());
  REQUIRE(r.warnings.size() == 1);
  CHECK(r.warnings[0].find("duplicate") != std::string::npos);
}

TEST_CASE("net text round trip omits nop flows") {
  BooleanNet net("demo", NetType::of(I::nop, I::inp, I::out));
  net.add_place("p", 1);
  net.add_place("q", 0);
  net.add_transition("t");
  net.set_flow(0, 0, I::inp);  // q/t stays nop

  std::string text = emit_net(net);
  CHECK(text.find("flow p t inp") != std::string::npos);
  CHECK(text.find("flow q") == std::string::npos);

  auto parsed = parse_net(text);
  REQUIRE_MESSAGE(parsed.ok(), (parsed.errors.empty() ? std::string() : parsed.errors[0]));
  CHECK(parsed.value->name() == "demo");
  CHECK(parsed.value->type() == net.type());
  CHECK(parsed.value->flow(0, 0) == I::inp);
  CHECK(parsed.value->flow(1, 0) == I::nop);
  CHECK(parsed.value->initial_marking() == Marking{1, 0});
  CHECK(emit_net(*parsed.value) == text);
}

TEST_CASE("net parse validates names, type membership and repeats") {
  auto no_type = parse_net("net n\nplace p 0\n");
  REQUIRE_FALSE(no_type.ok());
  CHECK(no_type.errors[0] == "missing type line");

  auto bad_flow = parse_net(
      "net n\ntype nop,inp\nplace p 0\ntransition t\nflow p t set\n");
  REQUIRE_FALSE(bad_flow.ok());
  CHECK(bad_flow.errors[0] == "line 5: interaction set not in the net type");

  auto unknown_place = parse_net(
      "net n\ntype nop,inp\ntransition t\nflow p t inp\n");
  REQUIRE_FALSE(unknown_place.ok());
  CHECK(unknown_place.errors[0] == "line 4: unknown place 'p'");

  auto repeated = parse_net(
      "net n\ntype nop,inp\nplace p 1\ntransition t\n"
      "flow p t inp\nflow p t inp\n");
  REQUIRE_FALSE(repeated.ok());
  CHECK(repeated.errors[0] == "line 6: repeated flow for p/t");

  auto bad_marking = parse_net("net n\ntype nop\nplace p 2\n");
  REQUIRE_FALSE(bad_marking.ok());
  CHECK(bad_marking.errors[0] == "line 3: expected: place <name> <0|1>");
}

TEST_CASE("instance text round trip and validation") {
  const char* text =
      "# six clauses\n"
      "0 1 2\n0 2 3\n0 1 3\n2 4 5\n1 4 5\n3 4 5\n";
  auto parsed = parse_instance(text);
  REQUIRE_MESSAGE(parsed.ok(), (parsed.errors.empty() ? std::string() : parsed.errors[0]));
  CHECK(parsed.value->num_variables == 6);
  CHECK(emit_instance(*parsed.value) ==
        "0 1 2\n0 2 3\n0 1 3\n2 4 5\n1 4 5\n3 4 5\n");

  auto short_line = parse_instance("0 1\n");
  REQUIRE_FALSE(short_line.ok());
  CHECK(short_line.errors[0] == "line 1: expected three variable indices");

  auto bad_index = parse_instance("0 1 x\n");
  REQUIRE_FALSE(bad_index.ok());
  CHECK(bad_index.errors[0] == "line 1: bad index 'x'");

  auto not_cubic = parse_instance("0 1 2\n0 1 2\n0 1 2\n");
  REQUIRE_FALSE(not_cubic.ok());
}

TEST_CASE("dot emission lists every state and arc") {
  auto r = TsBuilder().initial("s0").arc("s0", "a", "s1").arc("s1", "b", "s0").build();
  REQUIRE(r.ok());
  std::string dot = emit_dot(*r.ts);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("\"s0\" -> \"s1\" [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("\"s1\" -> \"s0\" [label=\"b\"]") != std::string::npos);
  CHECK(dot.find("__start -> \"s0\"") != std::string::npos);
}
