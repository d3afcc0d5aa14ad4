#include "boolnet/text_io.hpp"

#include <charconv>
#include <sstream>

namespace boolnet {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    size_t hash = raw.find('#');
    if (hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
      size_t start = i;
      while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t' && raw[i] != '\r') ++i;
      if (i > start) line.tokens.emplace_back(raw.substr(start, i - start));
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return lines;
}

std::string at_line(int number, const std::string& msg) {
  return "line " + std::to_string(number) + ": " + msg;
}

std::optional<int> parse_int(const std::string& tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) return std::nullopt;
  return value;
}

}  // namespace

ParseResult<TransitionSystem> parse_ts(std::string_view text) {
  ParseResult<TransitionSystem> result;
  TsBuilder builder;
  bool named = false, initialized = false;
  for (const Line& line : tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "ts") {
      if (tok.size() != 2) {
        result.errors.push_back(at_line(line.number, "expected: ts <name>"));
      } else if (named) {
        result.errors.push_back(at_line(line.number, "repeated ts line"));
      } else {
        builder.name(tok[1]);
        named = true;
      }
    } else if (tok[0] == "initial") {
      if (tok.size() != 2) {
        result.errors.push_back(at_line(line.number, "expected: initial <state>"));
      } else if (initialized) {
        result.errors.push_back(at_line(line.number, "repeated initial line"));
      } else {
        builder.initial(tok[1]);
        initialized = true;
      }
    } else if (tok[0] == "arc") {
      if (tok.size() != 4) {
        result.errors.push_back(
            at_line(line.number, "expected: arc <src> <event> <dst>"));
      } else {
        builder.arc(tok[1], tok[2], tok[3]);
      }
    } else {
      result.errors.push_back(at_line(line.number, "unknown directive '" + tok[0] + "'"));
    }
  }
  if (!initialized) {
    result.errors.push_back("missing initial line");
  }
  if (!result.errors.empty()) return result;
  TsBuildResult built = builder.build();
  result.errors = std::move(built.errors);
  result.warnings = std::move(built.warnings);
  result.value = std::move(built.ts);
  return result;
}

std::string emit_ts(const TransitionSystem& ts) {
  std::ostringstream out;
  out << "ts " << ts.name() << "\n";
  out << "initial " << ts.state_name(ts.initial()) << "\n";
  for (const Arc& a : ts.arcs()) {
    out << "arc " << ts.state_name(a.src) << " " << ts.event_name(a.event)
        << " " << ts.state_name(a.dst) << "\n";
  }
  return out.str();
}

ParseResult<BooleanNet> parse_net(std::string_view text) {
  ParseResult<BooleanNet> result;
  std::string name = "net";
  std::optional<NetType> type;
  std::vector<std::pair<std::string, int>> places;
  std::vector<std::string> transitions;
  struct FlowDecl {
    int line;
    std::string place, transition;
    Interaction interaction;
  };
  std::vector<FlowDecl> flows;

  bool named = false;
  for (const Line& line : tokenize(text)) {
    const auto& tok = line.tokens;
    if (tok[0] == "net") {
      if (tok.size() != 2) {
        result.errors.push_back(at_line(line.number, "expected: net <name>"));
      } else if (named) {
        result.errors.push_back(at_line(line.number, "repeated net line"));
      } else {
        name = tok[1];
        named = true;
      }
    } else if (tok[0] == "type") {
      if (tok.size() != 2) {
        result.errors.push_back(at_line(line.number, "expected: type <i1,...,ik>"));
      } else if (type) {
        result.errors.push_back(at_line(line.number, "repeated type line"));
      } else {
        type = NetType::parse(tok[1]);
        if (!type) {
          result.errors.push_back(at_line(line.number, "bad type '" + tok[1] + "'"));
        }
      }
    } else if (tok[0] == "place") {
      if (tok.size() != 3 || (tok[2] != "0" && tok[2] != "1")) {
        result.errors.push_back(at_line(line.number, "expected: place <name> <0|1>"));
      } else {
        places.emplace_back(tok[1], tok[2] == "1" ? 1 : 0);
      }
    } else if (tok[0] == "transition") {
      if (tok.size() != 2) {
        result.errors.push_back(at_line(line.number, "expected: transition <name>"));
      } else {
        transitions.push_back(tok[1]);
      }
    } else if (tok[0] == "flow") {
      if (tok.size() != 4) {
        result.errors.push_back(
            at_line(line.number, "expected: flow <place> <transition> <interaction>"));
        continue;
      }
      auto i = interaction_from_string(tok[3]);
      if (!i) {
        result.errors.push_back(at_line(line.number, "unknown interaction '" + tok[3] + "'"));
        continue;
      }
      flows.push_back({line.number, tok[1], tok[2], *i});
    } else {
      result.errors.push_back(at_line(line.number, "unknown directive '" + tok[0] + "'"));
    }
  }
  if (!type) {
    result.errors.push_back("missing type line");
    return result;
  }
  if (!result.errors.empty()) return result;

  BooleanNet net(name, *type);
  for (const auto& [pname, init] : places) {
    if (net.place_index(pname)) {
      result.errors.push_back("place '" + pname + "' declared twice");
      continue;
    }
    net.add_place(pname, init);
  }
  for (const auto& tname : transitions) {
    if (net.transition_index(tname)) {
      result.errors.push_back("transition '" + tname + "' declared twice");
      continue;
    }
    net.add_transition(tname);
  }
  std::vector<char> seen(static_cast<size_t>(net.num_places()) *
                             std::max(net.num_transitions(), 1),
                         0);
  for (const FlowDecl& f : flows) {
    auto p = net.place_index(f.place);
    auto t = net.transition_index(f.transition);
    if (!p) {
      result.errors.push_back(at_line(f.line, "unknown place '" + f.place + "'"));
      continue;
    }
    if (!t) {
      result.errors.push_back(at_line(f.line, "unknown transition '" + f.transition + "'"));
      continue;
    }
    if (!type->contains(f.interaction)) {
      result.errors.push_back(at_line(
          f.line, "interaction " + std::string(to_string(f.interaction)) +
                      " not in the net type"));
      continue;
    }
    char& cell = seen[static_cast<size_t>(*p) * net.num_transitions() + *t];
    if (cell) {
      result.errors.push_back(at_line(f.line, "repeated flow for " + f.place + "/" + f.transition));
      continue;
    }
    cell = 1;
    net.set_flow(*p, *t, f.interaction);
  }
  if (!result.errors.empty()) return result;
  result.value = std::move(net);
  return result;
}

std::string emit_net(const BooleanNet& net) {
  std::ostringstream out;
  out << "net " << net.name() << "\n";
  out << "type " << net.type().to_string() << "\n";
  for (int p = 0; p < net.num_places(); ++p) {
    out << "place " << net.place_name(p) << " "
        << static_cast<int>(net.initial_marking()[p]) << "\n";
  }
  for (int t = 0; t < net.num_transitions(); ++t) {
    out << "transition " << net.transition_name(t) << "\n";
  }
  for (int p = 0; p < net.num_places(); ++p) {
    for (int t = 0; t < net.num_transitions(); ++t) {
      Interaction i = net.flow(p, t);
      if (i == Interaction::nop) continue;
      out << "flow " << net.place_name(p) << " " << net.transition_name(t)
          << " " << to_string(i) << "\n";
    }
  }
  return out.str();
}

ParseResult<Instance> parse_instance(std::string_view text) {
  ParseResult<Instance> result;
  std::vector<std::array<int, 3>> clauses;
  for (const Line& line : tokenize(text)) {
    if (line.tokens.size() != 3) {
      result.errors.push_back(
          at_line(line.number, "expected three variable indices"));
      continue;
    }
    std::array<int, 3> clause{};
    bool ok = true;
    for (int j = 0; j < 3; ++j) {
      auto v = parse_int(line.tokens[j]);
      if (!v) {
        result.errors.push_back(
            at_line(line.number, "bad index '" + line.tokens[j] + "'"));
        ok = false;
        break;
      }
      clause[j] = *v;
    }
    if (ok) clauses.push_back(clause);
  }
  if (!result.errors.empty()) return result;
  std::string error;
  auto inst = make_instance(clauses, &error);
  if (!inst) {
    result.errors.push_back(error);
    return result;
  }
  result.value = std::move(inst);
  return result;
}

std::string emit_instance(const Instance& inst) {
  std::ostringstream out;
  for (const auto& c : inst.clauses) {
    out << c[0] << " " << c[1] << " " << c[2] << "\n";
  }
  return out.str();
}

std::string emit_dot(const TransitionSystem& ts) {
  std::ostringstream out;
  out << "digraph \"" << ts.name() << "\" {\n";
  out << "  rankdir=LR;\n";
  out << "  __start [shape=point];\n";
  for (int s = 0; s < ts.num_states(); ++s) {
    out << "  \"" << ts.state_name(s) << "\" [shape=circle];\n";
  }
  out << "  __start -> \"" << ts.state_name(ts.initial()) << "\";\n";
  for (const Arc& a : ts.arcs()) {
    out << "  \"" << ts.state_name(a.src) << "\" -> \"" << ts.state_name(a.dst)
        << "\" [label=\"" << ts.event_name(a.event) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace boolnet
