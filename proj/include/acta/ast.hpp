#pragma once

#include "acta/error.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace acta {

/// An identifier or value literal as written. Equality ignores the span.
struct name_ref {
  std::string text;
  source_span span;

  bool operator==(const name_ref& other) const { return text == other.text; }
};

// ---------------------------------------------------------------- predicates

struct pred_expr;
using pred_ptr = std::shared_ptr<const pred_expr>;

enum class pred_op { conj, disj, implies };

struct pred_const {
  bool value = true;
  bool operator==(const pred_const&) const = default;
};

/// `lhs = rhs` or `lhs != rhs`; each side is a variable or a value literal.
struct pred_compare {
  name_ref lhs;
  name_ref rhs;
  bool negated = false;
  bool operator==(const pred_compare&) const = default;
};

/// `var in {v1, ..., vn}`
struct pred_member {
  name_ref var;
  std::vector<name_ref> values;
  bool operator==(const pred_member&) const = default;
};

struct pred_not {
  pred_ptr operand;
  bool operator==(const pred_not& other) const;
};

struct pred_binary {
  pred_op op = pred_op::conj;
  pred_ptr lhs;
  pred_ptr rhs;
  bool operator==(const pred_binary& other) const;
};

struct pred_expr {
  std::variant<pred_const, pred_compare, pred_member, pred_not, pred_binary> node;
  source_span span;

  bool operator==(const pred_expr& other) const { return node == other.node; }
};

pred_ptr make_pred(pred_const c, source_span span = {});
pred_ptr make_compare(std::string lhs, std::string rhs, bool negated = false, source_span span = {});
pred_ptr make_member(std::string var, std::vector<std::string> values, source_span span = {});
pred_ptr make_not(pred_ptr p, source_span span = {});
pred_ptr make_pred_binary(pred_op op, pred_ptr lhs, pred_ptr rhs, source_span span = {});

// ------------------------------------------------------------------- actions

struct action_expr;
using action_ptr = std::shared_ptr<const action_expr>;

/// Binary action operators. `seq` is composition of weakest preconditions;
/// `guarded_seq` is the guard-and-body form `gA1 & wp(bA1, gA2) -> bA1 ; bA2`.
enum class action_op { choice, priority, seq, guarded_seq, dep };

struct abort_node {
  bool operator==(const abort_node&) const = default;
};
struct skip_node {
  bool operator==(const skip_node&) const = default;
};
/// Simultaneous assignment `x1, ..., xn := e1, ..., en`; each ei is a value
/// literal or a variable whose current value is copied.
struct assign_node {
  std::vector<name_ref> targets;
  std::vector<name_ref> values;
  bool operator==(const assign_node&) const = default;
};
/// `[p]`: skip where p holds, abort elsewhere.
struct assume_node {
  pred_ptr condition;
  bool operator==(const assume_node& other) const;
};
/// `p -> A`
struct guarded_node {
  pred_ptr guard;
  action_ptr body;
  bool operator==(const guarded_node& other) const;
};
struct binary_node {
  action_op op = action_op::choice;
  action_ptr lhs;
  action_ptr rhs;
  bool operator==(const binary_node& other) const;
};
/// Reference to a named action of the enclosing system.
struct ref_node {
  name_ref label;
  bool operator==(const ref_node&) const = default;
};

struct action_expr {
  std::variant<abort_node, skip_node, assign_node, assume_node, guarded_node, binary_node, ref_node>
      node;
  source_span span;

  bool operator==(const action_expr& other) const { return node == other.node; }
};

action_ptr make_abort(source_span span = {});
action_ptr make_skip(source_span span = {});
action_ptr make_assign(assign_node a, source_span span = {});
action_ptr make_assign(std::string target, std::string value);
action_ptr make_assume(pred_ptr p, source_span span = {});
action_ptr make_guarded(pred_ptr p, action_ptr body, source_span span = {});
action_ptr make_binary(action_op op, action_ptr lhs, action_ptr rhs, source_span span = {});
action_ptr make_ref(std::string label, source_span span = {});

// ------------------------------------------------------------------- systems

enum class visibility { local, exported, imported };

/// `var x : {..}` or, with indices, the family `var at[L, A] : {..}` that
/// expands to variables `at[L]`, `at[A]`.
struct var_decl {
  name_ref name;
  std::vector<name_ref> indices;
  std::vector<name_ref> domain;
  visibility vis = visibility::local;
  source_span span;

  bool operator==(const var_decl& o) const {
    return name == o.name && indices == o.indices && domain == o.domain && vis == o.vis;
  }
  /// Expanded variable names in declaration order.
  std::vector<std::string> expanded_names() const;
};

struct init_assignment {
  assign_node assign;
  source_span span;
  bool operator==(const init_assignment& o) const { return assign == o.assign; }
};

struct action_decl {
  name_ref label;
  action_ptr body;
  source_span span;
  bool operator==(const action_decl& o) const { return label == o.label && *body == *o.body; }
};

struct system_model {
  name_ref name;
  std::vector<var_decl> variables;
  std::vector<init_assignment> init;
  std::vector<action_decl> actions;
  /// Top-level composition over labels; null means the choice of all actions
  /// in declaration order.
  action_ptr run;
  std::string file;

  bool operator==(const system_model& o) const;
};

/// Indexed names are spelled `base[index]`.
std::string indexed_name(const std::string& base, const std::string& index);

} // namespace acta
