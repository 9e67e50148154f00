#pragma once

#include "acta/model.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace acta {

enum class policy_kind { random, exhaustive, scripted };

struct exec_config {
  policy_kind policy = policy_kind::random;
  std::uint64_t seed = 0;
  std::uint64_t max_steps = 1000;
  /// Labels to fire in order (scripted policy).
  std::vector<std::string> script;
  bool record_trace = true;
};

enum class trace_status { running_limit, terminated, aborted };
std::string to_string(trace_status s);

struct trace_step {
  state_id from = 0;
  std::size_t label = 0;
  state_id to = 0;
};

struct trace {
  state_id initial = 0;
  std::vector<trace_step> steps;
  trace_status status = trace_status::running_limit;
  /// Steps taken, also when the steps themselves were not recorded.
  std::uint64_t step_count = 0;
  /// Final state of the run.
  state_id last = 0;
  /// Label whose abort outcome ended the run.
  std::optional<std::size_t> aborted_label;
};

struct step_result {
  enum class kind { moved, terminated, aborted } what = kind::terminated;
  std::size_t label = 0;
  state_id successor = 0;
};

/// Labels the composition lets the scheduler pick at `s`, in declaration
/// order: a label is selectable when enabled, and `X // Y` offers Y's labels
/// only when X offers none.
std::vector<std::size_t> selectable(const action_system& sys, state_id s);

/// One step of the execution model: pick a selectable label uniformly, then a
/// successor uniformly.
step_result step(const action_system& sys, state_id s, std::mt19937_64& rng);
/// Fire `label`; throws scheduling_error if it is not selectable at `s`.
step_result step_label(const action_system& sys, state_id s, const std::string& label,
                       std::mt19937_64& rng);

/// Random and scripted runs produce a chained trace. The exhaustive policy
/// lists reachable edges in breadth-first order, at most max_steps of them.
trace run(const action_system& sys, const exec_config& config);

/// Re-check a chained trace against the denotations; returns the index of the
/// first bad step, if any.
std::optional<std::size_t> invalid_step(const action_system& sys, const trace& t);

struct reach_edge {
  std::size_t from = 0;  // node index
  std::size_t label = 0;
  std::size_t to = 0;    // node index
  bool operator==(const reach_edge&) const = default;
};

struct reach_graph {
  /// States in breadth-first discovery order; nodes[0] is the initial state.
  std::vector<state_id> nodes;
  std::vector<reach_edge> edges;
  std::vector<bool> terminal;
  /// (node, label) pairs where a selectable action aborts.
  std::vector<std::pair<std::size_t, std::size_t>> aborts;

  std::optional<std::size_t> index_of(state_id s) const;
};

inline constexpr std::uint64_t default_exploration_cap = 1'000'000;

/// Breadth-first closure from the initial state. Throws limit_error when more
/// than `cap` states are discovered.
reach_graph reachable(const action_system& sys, std::uint64_t cap = default_exploration_cap);

std::string to_dot(const action_system& sys, const reach_graph& g);
/// JSON lines: the initial record, one record per step, then a status record.
std::string trace_jsonl(const action_system& sys, const trace& t, policy_kind policy);

} // namespace acta
