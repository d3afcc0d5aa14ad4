#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boolnet/atoms.hpp"
#include "boolnet/boolean_net.hpp"
#include "boolnet/complexity.hpp"
#include "boolnet/gadgets.hpp"
#include "boolnet/net_type.hpp"
#include "boolnet/solver.hpp"
#include "boolnet/text_io.hpp"

namespace {

using namespace boolnet;

// 0: solvable or verification confirmed; 1: unsolvable or refuted;
// 2: usage, parse or I/O problem; 3: budget or cap exhausted.
constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kUsage;
}

// Artifact to stdout unless a path was given; diagnostics go to stderr.
bool emit_artifact(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  out << content;
  return static_cast<bool>(out);
}

template <typename T>
std::optional<T> load(const std::string& path,
                      ParseResult<T> (*parse)(std::string_view)) {
  auto text = read_file(path);
  if (!text) {
    std::cerr << "error: cannot read " << path << "\n";
    return std::nullopt;
  }
  ParseResult<T> parsed = parse(*text);
  for (const std::string& w : parsed.warnings)
    std::cerr << path << ": warning: " << w << "\n";
  if (!parsed.ok()) {
    for (const std::string& e : parsed.errors)
      std::cerr << path << ": " << e << "\n";
    return std::nullopt;
  }
  return std::move(parsed.value);
}

const char* decision_word(Decision d) {
  switch (d) {
    case Decision::solvable:
      return "solvable";
    case Decision::unsolvable:
      return "unsolvable";
    default:
      return "inconclusive";
  }
}

int decision_code(Decision d) {
  switch (d) {
    case Decision::solvable:
      return kPositive;
    case Decision::unsolvable:
      return kNegative;
    default:
      return kInconclusive;
  }
}

struct Options {
  std::string type_spec;
  std::string input;
  std::string output;
  std::string dot;
  std::string family_spec;
  uint64_t budget = SolveOptions{}.node_budget;
  int g = -1;
  uint64_t cap = uint64_t{1} << 20;
};

std::optional<NetType> parse_type(const std::string& spec) {
  auto t = NetType::parse(spec);
  if (!t) std::cerr << "error: unknown net type '" << spec << "'\n";
  return t;
}

bool write_dot(const Options& opt, const TransitionSystem& ts) {
  if (opt.dot.empty()) return true;
  std::ofstream out(opt.dot, std::ios::binary);
  out << emit_dot(ts);
  if (!out) std::cerr << "error: cannot write " << opt.dot << "\n";
  return static_cast<bool>(out);
}

int run_check(const Options& opt) {
  auto type = parse_type(opt.type_spec);
  auto ts = load<TransitionSystem>(opt.input, parse_ts);
  if (!type || !ts) return kUsage;
  if (!write_dot(opt, *ts)) return kUsage;

  SeparationReport report = decide_separation(*ts, *type, {opt.budget});
  auto describe = [&](const char* label, Decision d,
                      const std::optional<Atom>& failing) {
    std::cerr << label << ": " << decision_word(d);
    if (failing) std::cerr << " at " << atom_to_string(*ts, *failing);
    std::cerr << "\n";
  };
  describe("ssp", report.ssp, report.ssp_failing);
  describe("essp", report.essp, report.essp_failing);
  std::cerr << "nodes: " << report.nodes << "\n";

  Decision verdict = report.combined();
  if (verdict == Decision::solvable) {
    auto net = net_from_regions(*ts, *type, report.regions, ts->name());
    if (!net) return usage_error("internal: witness regions rejected");
    if (!emit_artifact(opt.output, emit_net(*net)))
      return usage_error("cannot write " + opt.output);
  }
  return decision_code(verdict);
}

int run_synth(const Options& opt) {
  auto type = parse_type(opt.type_spec);
  auto ts = load<TransitionSystem>(opt.input, parse_ts);
  if (!type || !ts) return kUsage;
  if (!write_dot(opt, *ts)) return kUsage;

  SynthesisResult result = synthesize(*ts, *type, {opt.budget});
  std::cerr << decision_word(result.decide.decision);
  if (result.decide.failing)
    std::cerr << " at " << atom_to_string(*ts, *result.decide.failing);
  std::cerr << "\n";
  if (result.net) {
    if (!emit_artifact(opt.output, emit_net(*result.net)))
      return usage_error("cannot write " + opt.output);
  }
  return decision_code(result.decide.decision);
}

int run_classify(const Options& opt) {
  auto type = parse_type(opt.type_spec);
  if (!type) return kUsage;
  if (opt.g >= 0) {
    switch (classify(*type, opt.g)) {
      case Hardness::np_complete:
        std::cout << "np-complete\n";
        break;
      case Hardness::polynomial:
        std::cout << "polynomial\n";
        break;
      case Hardness::out_of_table:
        std::cout << "out of table\n";
        break;
    }
  }
  if (auto row = classify_row(*type)) {
    std::cout << "row " << *row << "\n";
    if (auto threshold = np_threshold(*type))
      std::cout << "np-complete from g = " << *threshold << "\n";
    else
      std::cout << "polynomial for every g\n";
  } else {
    std::cout << "no row: type lacks nop\n";
  }
  return kPositive;
}

int run_gadget(const Options& opt, bool verify) {
  auto family = gadget_family_from_string(opt.family_spec);
  if (!family)
    return usage_error("unknown family '" + opt.family_spec +
                       "' (t1 ... t7)");
  auto inst = load<Instance>(opt.input, parse_instance);
  if (!inst) return kUsage;

  std::optional<NetType> type;
  if (!opt.type_spec.empty()) {
    type = parse_type(opt.type_spec);
    if (!type) return kUsage;
    if (!gadget_type_allowed(*family, *type))
      return usage_error("family " + std::string(to_string(*family)) +
                         " does not target type " + type->to_string() +
                         " (default " +
                         default_gadget_type(*family).to_string() + ")");
  }

  Gadget g = build_gadget(*family, *inst, type);
  std::cerr << "states: " << g.ts.num_states()
            << "\nevents: " << g.ts.num_events()
            << "\nbound: " << g.ts.compute_bound()
            << "\natom: " << atom_to_string(g.ts, g.alpha) << "\n";
  if (!write_dot(opt, g.ts)) return kUsage;

  if (!verify) {
    if (!emit_artifact(opt.output, emit_ts(g.ts)))
      return usage_error("cannot write " + opt.output);
    return kPositive;
  }

  GadgetVerification v = verify_gadget(g, {opt.budget});
  const char* word = "inconclusive";
  int code = kInconclusive;
  switch (v.outcome) {
    case GadgetVerification::Outcome::confirmed_positive:
      word = "confirmed-positive";
      code = kPositive;
      break;
    case GadgetVerification::Outcome::confirmed_negative:
      word = "confirmed-negative";
      code = kPositive;
      break;
    case GadgetVerification::Outcome::refuted:
      word = "refuted";
      code = kNegative;
      break;
    case GadgetVerification::Outcome::inconclusive:
      break;
  }
  std::cout << word << "\n";
  if (!v.detail.empty()) std::cout << v.detail << "\n";
  if (v.model) {
    std::cout << "model:";
    for (int x : *v.model) std::cout << ' ' << x;
    std::cout << "\n";
  }
  std::cerr << "nodes: " << v.nodes << "\n";
  return code;
}

int run_bounds(const Options& opt) {
  auto ts = load<TransitionSystem>(opt.input, parse_ts);
  if (!ts) return kUsage;
  std::cout << "states: " << ts->num_states() << "\n"
            << "events: " << ts->num_events() << "\n"
            << "arcs: " << ts->arcs().size() << "\n"
            << "bound: " << ts->compute_bound() << "\n";
  return kPositive;
}

int run_reach(const Options& opt) {
  auto net = load<BooleanNet>(opt.input, parse_net);
  if (!net) return kUsage;
  BooleanNet::ReachResult r = net->reachability_graph(opt.cap);
  if (!r.ts) return usage_error("reachability exploration produced no graph");
  std::cerr << "markings: " << r.markings << (r.capped ? " (capped)" : "")
            << "\n";
  if (!write_dot(opt, *r.ts)) return kUsage;
  if (!emit_artifact(opt.output, emit_ts(*r.ts)))
    return usage_error("cannot write " + opt.output);
  return r.capped ? kInconclusive : kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"boolean Petri net synthesis toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto add_type = [&](CLI::App* cmd, bool required) {
    auto* o = cmd->add_option("--type", opt.type_spec,
                              "net type as comma list, e.g. nop,inp,set");
    if (required) o->required();
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", opt.input, "input file")->required();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--output", opt.output, "output file (default stdout)");
  };
  auto add_dot = [&](CLI::App* cmd) {
    cmd->add_option("--dot", opt.dot, "write a DOT rendering here");
  };
  auto add_budget = [&](CLI::App* cmd) {
    cmd->add_option("--budget", opt.budget, "search node budget");
  };

  CLI::App* check =
      app.add_subcommand("check", "decide both separation problems for a TS");
  add_type(check, true);
  add_input(check);
  add_output(check);
  add_dot(check);
  add_budget(check);

  CLI::App* synth =
      app.add_subcommand("synth", "synthesize a net with the TS's behaviour");
  add_type(synth, true);
  add_input(synth);
  add_output(synth);
  add_dot(synth);
  add_budget(synth);

  CLI::App* classify =
      app.add_subcommand("classify", "hardness of synthesis for a type");
  add_type(classify, true);
  classify->add_option("--g", opt.g, "input bound");

  CLI::App* gadget =
      app.add_subcommand("gadget", "build a hardness reduction TS");
  gadget->add_option("--family", opt.family_spec, "t1 ... t7")->required();
  add_input(gadget);
  add_type(gadget, false);
  add_output(gadget);
  add_dot(gadget);

  CLI::App* verify = app.add_subcommand(
      "verify-gadget", "cross-check a gadget against brute force");
  verify->add_option("--family", opt.family_spec, "t1 ... t7")->required();
  add_input(verify);
  add_type(verify, false);
  add_dot(verify);
  add_budget(verify);

  CLI::App* bounds =
      app.add_subcommand("bounds", "report size and degree bound of a TS");
  add_input(bounds);

  CLI::App* reach = app.add_subcommand(
      "reach", "reachability graph of a net, as a TS");
  add_input(reach);
  add_output(reach);
  add_dot(reach);
  reach->add_option("--cap", opt.cap, "marking cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*check) return run_check(opt);
  if (*synth) return run_synth(opt);
  if (*classify) return run_classify(opt);
  if (*gadget) return run_gadget(opt, false);
  if (*verify) return run_gadget(opt, true);
  if (*bounds) return run_bounds(opt);
  return run_reach(opt);
}
