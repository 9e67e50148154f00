#include "acta/engine.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

namespace acta {

std::string to_string(trace_status s) {
  switch (s) {
  case trace_status::running_limit: return "running-limit";
  case trace_status::terminated: return "terminated";
  case trace_status::aborted: return "aborted";
  }
  return "unknown";
}

namespace {

void collect(const action_system& sys, const action_expr& e, state_id s,
             std::vector<bool>& chosen) {
  const auto& node = e.node;
  if (const auto* r = std::get_if<ref_node>(&node)) {
    const auto i = sys.label_index(r->label.text);
    if (!sys.outcome_of(i, s).is_miracle()) {
      chosen[i] = true;
    }
    return;
  }
  const auto& b = std::get<binary_node>(node);
  if (b.op == action_op::choice) {
    collect(sys, *b.lhs, s, chosen);
    collect(sys, *b.rhs, s, chosen);
    return;
  }
  // Priority: the right side is consulted only when the left offers nothing.
  std::vector<bool> left(chosen.size(), false);
  collect(sys, *b.lhs, s, left);
  bool any = false;
  for (std::size_t i = 0; i < left.size(); ++i) {
    if (left[i]) {
      chosen[i] = true;
      any = true;
    }
  }
  if (!any) {
    collect(sys, *b.rhs, s, chosen);
  }
}

std::uint64_t uniform(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

step_result fire(const action_system& sys, state_id s, std::size_t label, std::mt19937_64& rng) {
  const auto o = sys.outcome_of(label, s);
  step_result r;
  r.label = label;
  if (o.is_abort()) {
    r.what = step_result::kind::aborted;
    return r;
  }
  r.what = step_result::kind::moved;
  const auto& succ = o.successors();
  r.successor = succ.size() == 1 ? succ.front() : succ[uniform(rng, succ.size())];
  return r;
}

trace exhaustive_run(const action_system& sys, const exec_config& config) {
  trace t;
  t.initial = sys.initial();
  t.last = t.initial;
  const auto g = reachable(sys);
  // Abort pairs in BFS order, so the run can stop at the first one reached.
  std::size_t next_abort = 0;
  std::size_t edge = 0;
  for (std::size_t node = 0; node < g.nodes.size(); ++node) {
    for (; edge < g.edges.size() && g.edges[edge].from == node; ++edge) {
      if (t.step_count == config.max_steps) {
        t.status = trace_status::running_limit;
        return t;
      }
      const auto& e = g.edges[edge];
      if (config.record_trace) {
        t.steps.push_back({g.nodes[e.from], e.label, g.nodes[e.to]});
      }
      t.last = g.nodes[e.to];
      ++t.step_count;
    }
    if (next_abort < g.aborts.size() && g.aborts[next_abort].first == node) {
      t.status = trace_status::aborted;
      t.aborted_label = g.aborts[next_abort].second;
      t.last = g.nodes[node];
      return t;
    }
  }
  t.status = trace_status::terminated;
  return t;
}

} // namespace

std::vector<std::size_t> selectable(const action_system& sys, state_id s) {
  std::vector<bool> chosen(sys.labels().size(), false);
  collect(sys, sys.composition(), s, chosen);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < chosen.size(); ++i) {
    if (chosen[i]) {
      out.push_back(i);
    }
  }
  return out;
}

step_result step(const action_system& sys, state_id s, std::mt19937_64& rng) {
  const auto sel = selectable(sys, s);
  if (sel.empty()) {
    return {};
  }
  return fire(sys, s, sel[uniform(rng, sel.size())], rng);
}

step_result step_label(const action_system& sys, state_id s, const std::string& label,
                       std::mt19937_64& rng) {
  std::size_t i = 0;
  try {
    i = sys.label_index(label);
  } catch (const validation_error&) {
    throw scheduling_error("unknown action '" + label + "' in schedule");
  }
  const auto sel = selectable(sys, s);
  if (std::find(sel.begin(), sel.end(), i) == sel.end()) {
    std::string offered;
    for (auto j : sel) {
      offered += (offered.empty() ? "" : ", ") + sys.labels()[j];
    }
    throw scheduling_error("action '" + label + "' is not selectable in state (" +
                           sys.space()->format(s) + "); selectable: " +
                           (offered.empty() ? "none" : offered));
  }
  return fire(sys, s, i, rng);
}

trace run(const action_system& sys, const exec_config& config) {
  if (config.policy == policy_kind::exhaustive) {
    return exhaustive_run(sys, config);
  }
  std::mt19937_64 rng(config.seed);
  trace t;
  t.initial = sys.initial();
  state_id s = t.initial;
  const bool scripted = config.policy == policy_kind::scripted;
  const std::uint64_t limit =
      scripted ? std::min<std::uint64_t>(config.max_steps, config.script.size()) : config.max_steps;

  for (std::uint64_t i = 0; i < limit; ++i) {
    const auto r = scripted ? step_label(sys, s, config.script[i], rng) : step(sys, s, rng);
    if (r.what == step_result::kind::terminated) {
      t.status = trace_status::terminated;
      t.last = s;
      return t;
    }
    if (r.what == step_result::kind::aborted) {
      t.status = trace_status::aborted;
      t.aborted_label = r.label;
      t.last = s;
      return t;
    }
    if (config.record_trace) {
      t.steps.push_back({s, r.label, r.successor});
    }
    ++t.step_count;
    s = r.successor;
  }
  t.last = s;
  t.status = selectable(sys, s).empty() ? trace_status::terminated : trace_status::running_limit;
  return t;
}

std::optional<std::size_t> invalid_step(const action_system& sys, const trace& t) {
  state_id s = t.initial;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& st = t.steps[i];
    const auto sel = selectable(sys, st.from);
    if (st.from != s || std::find(sel.begin(), sel.end(), st.label) == sel.end()) {
      return i;
    }
    const auto o = sys.outcome_of(st.label, st.from);
    if (!o.is_enabled() ||
        !std::binary_search(o.successors().begin(), o.successors().end(), st.to)) {
      return i;
    }
    s = st.to;
  }
  return std::nullopt;
}

std::optional<std::size_t> reach_graph::index_of(state_id s) const {
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i] == s) {
      return i;
    }
  }
  return std::nullopt;
}

reach_graph reachable(const action_system& sys, std::uint64_t cap) {
  reach_graph g;
  std::unordered_map<state_id, std::size_t> index;
  auto discover = [&](state_id s) {
    auto [it, fresh] = index.emplace(s, g.nodes.size());
    if (fresh) {
      if (g.nodes.size() >= cap) {
        throw limit_error("exploration cap of " + std::to_string(cap) +
                          " states exceeded; raise the cap or shrink the model");
      }
      g.nodes.push_back(s);
    }
    return it->second;
  };
  discover(sys.initial());
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    const state_id s = g.nodes[n];
    const auto sel = selectable(sys, s);
    g.terminal.push_back(sel.empty());
    for (auto label : sel) {
      const auto o = sys.outcome_of(label, s);
      if (o.is_abort()) {
        g.aborts.emplace_back(n, label);
        continue;
      }
      for (auto t : o.successors()) {
        const auto to = discover(t);
        g.edges.push_back({n, label, to});
      }
    }
  }
  return g;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
    }
    out += c;
  }
  return out;
}

nlohmann::ordered_json valuation(const state_space& space, state_id s) {
  nlohmann::ordered_json v = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < space.variable_count(); ++i) {
    v[space.var(i).name] = space.value_name(s, i);
  }
  return v;
}

} // namespace

std::string to_dot(const action_system& sys, const reach_graph& g) {
  const auto& space = *sys.space();
  std::ostringstream os;
  os << "digraph \"" << dot_escape(sys.name()) << "\" {\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t n = 0; n < g.nodes.size(); ++n) {
    std::string label;
    for (std::size_t v = 0; v < space.variable_count(); ++v) {
      label += (v ? "\\n" : "") + dot_escape(space.var(v).name + "=" +
                                             space.value_name(g.nodes[n], v));
    }
    os << "  n" << n << " [label=\"" << label << '"';
    if (n == 0) {
      os << ", peripheries=2";
    }
    if (g.terminal[n]) {
      os << ", style=filled, fillcolor=lightgray";
    }
    os << "];\n";
  }
  for (const auto& e : g.edges) {
    os << "  n" << e.from << " -> n" << e.to << " [label=\""
       << dot_escape(sys.labels()[e.label]) << "\"];\n";
  }
  for (std::size_t i = 0; i < g.aborts.size(); ++i) {
    const auto& [n, label] = g.aborts[i];
    os << "  abort" << i << " [label=\"abort\", shape=octagon];\n";
    os << "  n" << n << " -> abort" << i << " [label=\"" << dot_escape(sys.labels()[label])
       << "\", style=dashed];\n";
  }
  os << "}\n";
  return os.str();
}

std::string trace_jsonl(const action_system& sys, const trace& t, policy_kind policy) {
  const auto& space = *sys.space();
  std::ostringstream os;
  nlohmann::ordered_json init;
  init["step"] = 0;
  init["label"] = nullptr;
  init["state"] = valuation(space, t.initial);
  os << init.dump() << '\n';
  std::uint64_t i = 0;
  for (const auto& st : t.steps) {
    nlohmann::ordered_json j;
    j["step"] = ++i;
    j["label"] = sys.labels()[st.label];
    if (policy == policy_kind::exhaustive) {
      j["from"] = valuation(space, st.from);
    }
    j["state"] = valuation(space, st.to);
    os << j.dump() << '\n';
  }
  nlohmann::ordered_json end;
  end["status"] = to_string(t.status);
  end["steps"] = t.step_count;
  if (t.aborted_label) {
    end["aborted_by"] = sys.labels()[*t.aborted_label];
    end["state"] = valuation(space, t.last);
  }
  os << end.dump() << '\n';
  return os.str();
}

} // namespace acta
