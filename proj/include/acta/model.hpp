#pragma once

#include "acta/ast.hpp"
#include "acta/predicate.hpp"
#include "acta/semantics.hpp"
#include "acta/space.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace acta {

/// A checked system: its state space, initial state and the labelled actions
/// bound to that space. Construction enforces every well-formedness rule.
class action_system {
public:
  /// Throws validation_error naming the offending construct.
  explicit action_system(system_model model);

  static action_system load(std::string_view text, const std::string& file = {});
  static action_system load_file(const std::string& path);

  const system_model& model() const { return model_; }
  const std::string& name() const { return model_.name.text; }
  const space_ptr& space() const { return space_; }
  state_id initial() const { return initial_; }

  /// Labels in declaration order.
  const std::vector<std::string>& labels() const { return labels_; }
  std::size_t label_index(std::string_view label) const;
  const label_table& table() const { return table_; }
  const resolved_action& action(std::size_t i) const { return *resolved_[i]; }
  /// Whole-space denotation, computed on demand.
  denotation meaning(std::size_t i) const { return acta::denote(*resolved_[i], space_); }
  denotation meaning(std::string_view label) const { return meaning(label_index(label)); }
  /// Outcome of one action at one state.
  outcome outcome_of(std::size_t i, state_id s) const { return outcome_at(*resolved_[i], *space_, s); }

  /// The run clause, or the choice of all actions when none was given.
  const action_expr& composition() const { return *composition_; }
  /// Replace the composition; it may use only labels, `[]`, `//` and parentheses.
  void set_composition(action_ptr run);

  /// Parse in the context of this system: variables and action labels resolve.
  action_ptr parse_action(std::string_view text) const;
  predicate parse_predicate(std::string_view text) const;
  denotation denote(std::string_view action_text) const;

private:
  system_model model_;
  space_ptr space_;
  state_id initial_ = 0;
  std::vector<std::string> labels_;
  label_table table_;
  std::vector<resolved_ptr> resolved_;
  action_ptr composition_;
};

/// Check that `run` is built from known labels with `[]`, `//` and parentheses.
void check_composition(const action_expr& run, const label_table& labels);

} // namespace acta
