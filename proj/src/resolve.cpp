#include "acta/error.hpp"
#include "acta/semantics.hpp"

#include <algorithm>
#include <set>

namespace acta {

namespace {

class resolver {
public:
  resolver(space_ptr space, const label_table* labels) : space_(std::move(space)), labels_(labels) {}

  predicate pred(const pred_expr& p) {
    return std::visit(
        [&](const auto& n) -> predicate {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, pred_const>) {
            return n.value ? predicate::all(space_) : predicate::none(space_);
          } else if constexpr (std::is_same_v<T, pred_compare>) {
            return compare(n);
          } else if constexpr (std::is_same_v<T, pred_member>) {
            return member(n);
          } else if constexpr (std::is_same_v<T, pred_not>) {
            return ~pred(*n.operand);
          } else {
            const auto l = pred(*n.lhs);
            const auto r = pred(*n.rhs);
            switch (n.op) {
            case pred_op::conj:
              return l & r;
            case pred_op::disj:
              return l | r;
            case pred_op::implies:
              return l.implies(r);
            }
            throw error("unknown predicate operator");
          }
        },
        p.node);
  }

  resolved_ptr action(const action_expr& a) {
    return std::visit(
        [&](const auto& n) -> resolved_ptr {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, abort_node>) {
            return make(r_abort{});
          } else if constexpr (std::is_same_v<T, skip_node>) {
            return make(r_skip{});
          } else if constexpr (std::is_same_v<T, assign_node>) {
            return make(assign(n, a.span));
          } else if constexpr (std::is_same_v<T, assume_node>) {
            return make(r_assume{pred(*n.condition)});
          } else if constexpr (std::is_same_v<T, guarded_node>) {
            return make(r_guarded{pred(*n.guard), action(*n.body)});
          } else if constexpr (std::is_same_v<T, binary_node>) {
            return make(r_binary{n.op, action(*n.lhs), action(*n.rhs)});
          } else {
            return reference(n.label);
          }
        },
        a.node);
  }

private:
  template <class Node>
  static resolved_ptr make(Node n) {
    return std::make_shared<const resolved_action>(resolved_action{std::move(n)});
  }

  std::size_t variable(const name_ref& name) const {
    auto v = space_->find_variable(name.text);
    if (!v) {
      throw validation_error(name.span, "undeclared variable '" + name.text + "'");
    }
    return *v;
  }

  std::size_t value(std::size_t var, const name_ref& name) const {
    auto idx = space_->find_value(var, name.text);
    if (!idx) {
      throw validation_error(name.span, "value '" + name.text + "' is not in the domain of '" +
                                            space_->var(var).name + "'");
    }
    return *idx;
  }

  predicate compare(const pred_compare& c) const {
    const auto lv = space_->find_variable(c.lhs.text);
    const auto rv = space_->find_variable(c.rhs.text);
    auto out = predicate::none(space_);
    if (lv && rv) {
      for (state_id s = 0; s < space_->size(); ++s) {
        if ((space_->value_name(s, *lv) == space_->value_name(s, *rv)) != c.negated) {
          out.insert(s);
        }
      }
      return out;
    }
    if (!lv && !rv) {
      throw validation_error(c.lhs.span, "undeclared variable '" + c.lhs.text + "'");
    }
    const auto var = lv ? *lv : *rv;
    const auto val = value(var, lv ? c.rhs : c.lhs);
    for (state_id s = 0; s < space_->size(); ++s) {
      if ((space_->value_of(s, var) == val) != c.negated) {
        out.insert(s);
      }
    }
    return out;
  }

  predicate member(const pred_member& m) const {
    const auto var = variable(m.var);
    std::vector<bool> allowed(space_->var(var).domain.size(), false);
    for (const auto& v : m.values) {
      allowed[value(var, v)] = true;
    }
    auto out = predicate::none(space_);
    for (state_id s = 0; s < space_->size(); ++s) {
      if (allowed[space_->value_of(s, var)]) {
        out.insert(s);
      }
    }
    return out;
  }

  r_assign assign(const assign_node& n, const source_span& span) const {
    if (n.targets.size() != n.values.size()) {
      throw validation_error(span, "assignment has " + std::to_string(n.targets.size()) +
                                       " targets but " + std::to_string(n.values.size()) +
                                       " values");
    }
    r_assign out;
    std::set<std::size_t> seen;
    for (std::size_t i = 0; i < n.targets.size(); ++i) {
      const auto var = variable(n.targets[i]);
      if (!seen.insert(var).second) {
        throw validation_error(n.targets[i].span,
                               "variable '" + n.targets[i].text + "' assigned twice");
      }
      if (auto src = space_->find_variable(n.values[i].text)) {
        const auto& from = space_->var(*src).domain;
        for (const auto& v : from) {
          if (!space_->find_value(var, v)) {
            throw validation_error(n.values[i].span,
                                   "copying '" + n.values[i].text + "' into '" +
                                       n.targets[i].text + "' may produce '" + v +
                                       "', which is outside its domain");
          }
        }
        out.targets.push_back({var, true, *src});
      } else {
        out.targets.push_back({var, false, value(var, n.values[i])});
      }
    }
    return out;
  }

  resolved_ptr reference(const name_ref& label) {
    if (auto it = memo_.find(label.text); it != memo_.end()) {
      return it->second;
    }
    if (!labels_) {
      throw validation_error(label.span, "unknown action '" + label.text + "'");
    }
    auto it = labels_->find(label.text);
    if (it == labels_->end()) {
      if (space_->find_variable(label.text)) {
        throw validation_error(label.span,
                               "'" + label.text + "' is a variable; expected ':=' or '->'");
      }
      throw validation_error(label.span, "unknown action '" + label.text + "'");
    }
    if (!active_.insert(label.text).second) {
      throw validation_error(label.span, "action '" + label.text + "' refers to itself");
    }
    auto r = action(*it->second);
    active_.erase(label.text);
    memo_.emplace(label.text, r);
    return r;
  }

  space_ptr space_;
  const label_table* labels_;
  std::map<std::string, resolved_ptr, std::less<>> memo_;
  std::set<std::string, std::less<>> active_;
};

} // namespace

predicate denote_predicate(const pred_expr& p, const space_ptr& space) {
  return resolver(space, nullptr).pred(p);
}

resolved_ptr resolve(const action_expr& a, const space_ptr& space, const label_table* labels) {
  return resolver(space, labels).action(a);
}

} // namespace acta
