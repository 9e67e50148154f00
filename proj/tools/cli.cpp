#include "cli.hpp"

#include "acta/describe.hpp"
#include "acta/dsl.hpp"
#include "acta/engine.hpp"
#include "acta/laws.hpp"
#include "acta/model.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

namespace acta {

namespace {

using json = nlohmann::ordered_json;

enum class format { human, machine };

struct options {
  format fmt = format::human;
  std::string file;
  std::string action;
  std::string post;
  std::string lhs;
  std::string rhs;
  bool oracle = false;

  bool list = false;
  std::string law_id;
  std::size_t states = 2;
  std::uint64_t budget = 20000;
  std::uint64_t seed = 0xAC7A;
  bool exhaustive = false;

  std::uint64_t steps = 1000;
  std::string policy = "random";
  std::vector<std::string> script;
  std::string trace_path;
  std::string run_expr;
  std::string dot_path;
  std::uint64_t cap = default_exploration_cap;
};

/// Thrown for bad flag combinations discovered after parsing.
struct usage_error : error {
  using error::error;
};

std::size_t oracle_cap() {
  const char* env = std::getenv("ACTA_ORACLE_CAP");
  if (!env || !*env) {
    return default_oracle_cap;
  }
  try {
    std::size_t pos = 0;
    const auto v = std::stoull(env, &pos);
    if (pos != std::string(env).size()) {
      throw std::invalid_argument(env);
    }
    return static_cast<std::size_t>(v);
  } catch (const std::exception&) {
    throw usage_error("ACTA_ORACLE_CAP must be a non-negative integer, got '" +
                      std::string(env) + "'");
  }
}

json valuation(const state_space& space, state_id s) {
  json v = json::object();
  for (std::size_t i = 0; i < space.variable_count(); ++i) {
    v[space.var(i).name] = space.value_name(s, i);
  }
  return v;
}

action_system load(const options& o) {
  auto sys = action_system::load_file(o.file);
  if (!o.run_expr.empty()) {
    sys.set_composition(parse_action_syntax(o.run_expr, "--run"));
  }
  return sys;
}

void write_file(const std::string& path, const std::string& text, std::ostream& out) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    throw error("cannot write '" + path + "'");
  }
  f << text;
}

// ------------------------------------------------------------ subcommands

int cmd_check(const options& o, std::ostream& out) {
  const auto sys = action_system::load_file(o.file);
  if (o.fmt == format::machine) {
    json j;
    j["ok"] = true;
    j["system"] = sys.name();
    j["variables"] = sys.space()->variable_count();
    j["states"] = sys.space()->size();
    j["actions"] = sys.labels().size();
    j["init"] = valuation(*sys.space(), sys.initial());
    out << j.dump() << '\n';
  } else {
    out << "ok: " << sys.name() << " (" << sys.space()->variable_count() << " variables, "
        << sys.space()->size() << " states, " << sys.labels().size() << " actions)\n";
  }
  return exit_ok;
}

void print_predicate(const options& o, const std::string& what, const predicate& p,
                     std::ostream& out) {
  const auto text = describe(p);
  if (o.fmt == format::machine) {
    json j;
    j["query"] = what;
    j["count"] = p.count();
    j["states"] = p.universe();
    j["predicate"] = text;
    out << j.dump() << '\n';
  } else {
    out << what << ": " << p.count() << " of " << p.universe() << " states\n  " << text << '\n';
  }
}

int cmd_wp(const options& o, std::ostream& out) {
  const auto sys = load(o);
  const auto a = sys.denote(o.action);
  const auto q = sys.parse_predicate(o.post);
  print_predicate(o, "wp(" + o.action + ", " + o.post + ")", wp(a, q), out);
  return exit_ok;
}

int cmd_guard(const options& o, std::ostream& out) {
  const auto sys = load(o);
  print_predicate(o, "g(" + o.action + ")", guard(sys.denote(o.action)), out);
  return exit_ok;
}

int cmd_compare(const options& o, relation rel, std::ostream& out) {
  const auto sys = load(o);
  const auto a = sys.denote(o.lhs);
  const auto b = sys.denote(o.rhs);
  const auto& space = *sys.space();
  const auto bad = rel == relation::equal ? first_difference(a, b) : refinement_violation(a, b);

  std::optional<oracle_verdict> ov;
  if (o.oracle) {
    ov = wp_oracle_compare(a, b, rel, oracle_cap());
    if (ov->holds != !bad) {
      throw error("internal disagreement between pointwise check and oracle");
    }
  }
  const std::string op = rel == relation::equal ? " = " : " ⊑ ";
  if (o.fmt == format::machine) {
    json j;
    j["relation"] = rel == relation::equal ? "equal" : "refines";
    j["lhs"] = o.lhs;
    j["rhs"] = o.rhs;
    j["holds"] = !bad;
    if (bad) {
      j["state"] = valuation(space, *bad);
      j["lhs_outcome"] = describe(a.at(*bad), space);
      j["rhs_outcome"] = describe(b.at(*bad), space);
    }
    if (ov && ov->witness) {
      j["post"] = describe(ov->witness->post);
      j["post_state"] = valuation(space, ov->witness->state);
    }
    out << j.dump() << '\n';
  } else {
    out << o.lhs << op << o.rhs << ": " << (bad ? "fails" : "holds") << '\n';
    if (bad) {
      out << "  at (" << space.format(*bad) << "):\n"
          << "    lhs: " << describe(a.at(*bad), space) << '\n'
          << "    rhs: " << describe(b.at(*bad), space) << '\n';
    }
    if (ov && ov->witness) {
      out << "  postcondition q = " << describe(ov->witness->post) << "\n    wp(lhs, q) and wp(rhs, q) "
          << "disagree at (" << space.format(ov->witness->state) << ")\n";
    }
  }
  return bad ? exit_failed : exit_ok;
}

int cmd_laws(const options& o, std::ostream& out) {
  if (o.list) {
    for (const auto& l : builtin_laws()) {
      if (o.fmt == format::machine) {
        json j;
        j["law"] = l.id;
        j["name"] = l.name;
        j["arity"] = l.arity();
        j["relation"] =
            l.clauses.front().rel == relation::equal ? "equal" : "refines";
        j["side_condition"] = to_string(l.side);
        j["statement"] = l.statement();
        out << j.dump() << '\n';
      } else {
        out << l.id << (l.id.size() == 2 ? "   " : "  ") << l.name << "\n      " << l.statement()
            << '\n';
      }
    }
    return exit_ok;
  }
  if (o.law_id.empty()) {
    throw usage_error("laws: give --list or --check <id>|all");
  }
  if (o.states < 1 || o.states > action_generator::max_states) {
    throw usage_error("--states must be between 1 and " +
                      std::to_string(action_generator::max_states));
  }
  const auto space = state_space::abstract(o.states);
  check_budget budget;
  budget.samples = o.budget;
  budget.seed = o.seed;
  budget.mode = o.exhaustive ? check_mode::exhaustive : check_mode::automatic;

  std::vector<check_report> reports;
  if (o.law_id == "all") {
    reports = check_all(space, budget);
  } else {
    const law* l = nullptr;
    try {
      l = &find_law(o.law_id);
    } catch (const validation_error& e) {
      throw usage_error(e.what());
    }
    reports.push_back(check_law(*l, space, budget));
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    failed += r.failed() ? 1 : 0;
    out << (o.fmt == format::machine ? format_json(r) + "\n" : format_human(r));
  }
  if (o.fmt == format::human && reports.size() > 1) {
    out << "\n" << reports.size() - failed << " of " << reports.size() << " laws passed\n";
  }
  return failed == 0 ? exit_ok : exit_failed;
}

policy_kind parse_policy(const std::string& p) {
  if (p == "random") {
    return policy_kind::random;
  }
  if (p == "exhaustive") {
    return policy_kind::exhaustive;
  }
  return policy_kind::scripted;
}

int cmd_simulate(const options& o, std::ostream& out) {
  const auto sys = load(o);
  exec_config cfg;
  cfg.policy = parse_policy(o.policy);
  cfg.seed = o.seed;
  cfg.max_steps = o.steps;
  cfg.script = o.script;
  if (cfg.policy == policy_kind::scripted && cfg.script.empty()) {
    throw usage_error("--policy scripted needs --script");
  }
  const auto t = run(sys, cfg);
  const auto jsonl = trace_jsonl(sys, t, cfg.policy);
  if (!o.trace_path.empty()) {
    write_file(o.trace_path, jsonl, out);
  }
  const auto& space = *sys.space();
  if (o.fmt == format::machine) {
    if (o.trace_path != "-") {
      out << jsonl;
    }
  } else {
    out << "init  " << space.format(t.initial) << '\n';
    std::uint64_t i = 0;
    for (const auto& st : t.steps) {
      out << ++i << "  " << sys.labels()[st.label];
      if (cfg.policy == policy_kind::exhaustive) {
        out << "  (" << space.format(st.from) << ") ->";
      }
      out << "  " << space.format(st.to) << '\n';
    }
    out << "status: " << to_string(t.status) << " after " << t.step_count << " steps";
    if (t.aborted_label) {
      out << " (" << sys.labels()[*t.aborted_label] << " aborts at " << space.format(t.last)
          << ")";
    }
    out << '\n';
  }
  return t.status == trace_status::aborted ? exit_failed : exit_ok;
}

int cmd_reach(const options& o, std::ostream& out) {
  const auto sys = load(o);
  const auto g = reachable(sys, o.cap);
  if (!o.dot_path.empty()) {
    write_file(o.dot_path, to_dot(sys, g), out);
  }
  std::size_t terminal = 0;
  for (bool t : g.terminal) {
    terminal += t ? 1 : 0;
  }
  if (o.fmt == format::machine) {
    json j;
    j["nodes"] = g.nodes.size();
    j["edges"] = g.edges.size();
    j["terminal"] = terminal;
    j["aborts"] = g.aborts.size();
    out << j.dump() << '\n';
  } else if (o.dot_path != "-") {
    out << g.nodes.size() << " reachable states, " << g.edges.size() << " edges, " << terminal
        << " terminal";
    if (!g.aborts.empty()) {
      out << ", " << g.aborts.size() << " aborting choices";
    }
    out << '\n';
    for (std::size_t n = 0; n < g.nodes.size(); ++n) {
      if (g.terminal[n]) {
        out << "  terminal: " << sys.space()->format(g.nodes[n]) << '\n';
      }
    }
  }
  return g.aborts.empty() ? exit_ok : exit_failed;
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  options o;
  CLI::App app{"acta: weakest preconditions, laws and execution for action systems"};
  app.name("acta");
  app.require_subcommand(1);
  // Let --format appear after the subcommand as well.
  app.fallthrough();
  app.add_option("--format", o.fmt, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, format>{{"human", format::human}, {"machine", format::machine}}))
      ->option_text("human|machine");

  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", o.file, "Action system description (.as)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--run", o.run_expr, "Override the run clause");
  };

  auto* check = app.add_subcommand("check", "Parse and validate a system");
  add_file(check);

  auto* wp_cmd = app.add_subcommand("wp", "Weakest precondition of an action");
  add_file(wp_cmd);
  wp_cmd->add_option("--action", o.action, "Action expression")->required();
  wp_cmd->add_option("--post", o.post, "Postcondition")->required();

  auto* guard_cmd = app.add_subcommand("guard", "Guard of an action");
  add_file(guard_cmd);
  guard_cmd->add_option("--action", o.action, "Action expression")->required();

  auto* equal_cmd = app.add_subcommand("equal", "Decide lhs = rhs");
  auto* refine_cmd = app.add_subcommand("refine", "Decide lhs ⊑ rhs");
  for (auto* sub : {equal_cmd, refine_cmd}) {
    add_file(sub);
    sub->add_option("--lhs", o.lhs, "Action expression")->required();
    sub->add_option("--rhs", o.rhs, "Action expression")->required();
    sub->add_flag("--oracle", o.oracle, "Cross-check over all postconditions");
  }

  auto* laws_cmd = app.add_subcommand("laws", "List or check the algebraic laws");
  laws_cmd->add_flag("--list", o.list, "List the catalog");
  laws_cmd->add_option("--check", o.law_id, "Law id, or 'all'");
  laws_cmd->add_option("--states", o.states, "Size of the abstract state space");
  laws_cmd->add_option("--budget", o.budget, "Samples per sampled law");
  laws_cmd->add_option("--seed", o.seed, "Sampling seed");
  laws_cmd->add_flag("--exhaustive", o.exhaustive, "Enumerate every instance");

  auto* sim = app.add_subcommand("simulate", "Run the system");
  add_file(sim);
  add_run(sim);
  sim->add_option("--steps", o.steps, "Step limit");
  sim->add_option("--seed", o.seed, "Scheduler seed");
  sim->add_option("--policy", o.policy, "Scheduler")
      ->check(CLI::IsMember({"random", "exhaustive", "scripted"}));
  sim->add_option("--script", o.script, "Labels to fire, in order")->delimiter(',');
  sim->add_option("--trace", o.trace_path, "Write the trace as JSON lines ('-' for stdout)");

  auto* reach = app.add_subcommand("reach", "Reachable state graph");
  add_file(reach);
  add_run(reach);
  reach->add_option("--dot", o.dot_path, "Write the graph as DOT ('-' for stdout)");
  reach->add_option("--cap", o.cap, "Exploration cap");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (check->parsed()) {
      return cmd_check(o, out);
    }
    if (wp_cmd->parsed()) {
      return cmd_wp(o, out);
    }
    if (guard_cmd->parsed()) {
      return cmd_guard(o, out);
    }
    if (equal_cmd->parsed()) {
      return cmd_compare(o, relation::equal, out);
    }
    if (refine_cmd->parsed()) {
      return cmd_compare(o, relation::refines, out);
    }
    if (laws_cmd->parsed()) {
      return cmd_laws(o, out);
    }
    if (sim->parsed()) {
      return cmd_simulate(o, out);
    }
    if (reach->parsed()) {
      return cmd_reach(o, out);
    }
  } catch (const parse_error& e) {
    err << e.what() << '\n';
    return exit_usage;
  } catch (const usage_error& e) {
    err << "acta: " << e.what() << '\n';
    return exit_usage;
  } catch (const limit_error& e) {
    err << "acta: " << e.what() << '\n';
    return exit_usage;
  } catch (const validation_error& e) {
    err << e.what() << '\n';
    return exit_failed;
  } catch (const scheduling_error& e) {
    err << "acta: scheduling error: " << e.what() << '\n';
    return exit_failed;
  } catch (const error& e) {
    err << "acta: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_usage;
}

} // namespace acta
