#include "acta/ast.hpp"

namespace acta {

namespace {

template <class T>
bool same_ptr(const std::shared_ptr<const T>& a, const std::shared_ptr<const T>& b) {
  if (a == b) {
    return true;
  }
  if (!a || !b) {
    return false;
  }
  return *a == *b;
}

std::vector<name_ref> names(std::vector<std::string> in) {
  std::vector<name_ref> out;
  out.reserve(in.size());
  for (auto& s : in) {
    out.push_back({std::move(s), {}});
  }
  return out;
}

} // namespace

bool pred_not::operator==(const pred_not& other) const { return same_ptr(operand, other.operand); }

bool pred_binary::operator==(const pred_binary& other) const {
  return op == other.op && same_ptr(lhs, other.lhs) && same_ptr(rhs, other.rhs);
}

bool assume_node::operator==(const assume_node& other) const {
  return same_ptr(condition, other.condition);
}

bool guarded_node::operator==(const guarded_node& other) const {
  return same_ptr(guard, other.guard) && same_ptr(body, other.body);
}

bool binary_node::operator==(const binary_node& other) const {
  return op == other.op && same_ptr(lhs, other.lhs) && same_ptr(rhs, other.rhs);
}

bool system_model::operator==(const system_model& o) const {
  return name == o.name && variables == o.variables && init == o.init && actions == o.actions &&
         same_ptr(run, o.run);
}

std::vector<std::string> var_decl::expanded_names() const {
  if (indices.empty()) {
    return {name.text};
  }
  std::vector<std::string> out;
  out.reserve(indices.size());
  for (const auto& idx : indices) {
    out.push_back(indexed_name(name.text, idx.text));
  }
  return out;
}

std::string indexed_name(const std::string& base, const std::string& index) {
  return base + '[' + index + ']';
}

pred_ptr make_pred(pred_const c, source_span span) {
  return std::make_shared<const pred_expr>(pred_expr{c, std::move(span)});
}

pred_ptr make_compare(std::string lhs, std::string rhs, bool negated, source_span span) {
  return std::make_shared<const pred_expr>(
      pred_expr{pred_compare{{std::move(lhs), {}}, {std::move(rhs), {}}, negated}, std::move(span)});
}

pred_ptr make_member(std::string var, std::vector<std::string> values, source_span span) {
  return std::make_shared<const pred_expr>(
      pred_expr{pred_member{{std::move(var), {}}, names(std::move(values))}, std::move(span)});
}

pred_ptr make_not(pred_ptr p, source_span span) {
  return std::make_shared<const pred_expr>(pred_expr{pred_not{std::move(p)}, std::move(span)});
}

pred_ptr make_pred_binary(pred_op op, pred_ptr lhs, pred_ptr rhs, source_span span) {
  return std::make_shared<const pred_expr>(
      pred_expr{pred_binary{op, std::move(lhs), std::move(rhs)}, std::move(span)});
}

action_ptr make_abort(source_span span) {
  return std::make_shared<const action_expr>(action_expr{abort_node{}, std::move(span)});
}

action_ptr make_skip(source_span span) {
  return std::make_shared<const action_expr>(action_expr{skip_node{}, std::move(span)});
}

action_ptr make_assign(assign_node a, source_span span) {
  return std::make_shared<const action_expr>(action_expr{std::move(a), std::move(span)});
}

action_ptr make_assign(std::string target, std::string value) {
  return make_assign(assign_node{{{std::move(target), {}}}, {{std::move(value), {}}}});
}

action_ptr make_assume(pred_ptr p, source_span span) {
  return std::make_shared<const action_expr>(action_expr{assume_node{std::move(p)}, std::move(span)});
}

action_ptr make_guarded(pred_ptr p, action_ptr body, source_span span) {
  return std::make_shared<const action_expr>(
      action_expr{guarded_node{std::move(p), std::move(body)}, std::move(span)});
}

action_ptr make_binary(action_op op, action_ptr lhs, action_ptr rhs, source_span span) {
  return std::make_shared<const action_expr>(
      action_expr{binary_node{op, std::move(lhs), std::move(rhs)}, std::move(span)});
}

action_ptr make_ref(std::string label, source_span span) {
  return std::make_shared<const action_expr>(action_expr{ref_node{{std::move(label), span}}, span});
}

} // namespace acta
