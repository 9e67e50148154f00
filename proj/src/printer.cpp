#include "acta/dsl.hpp"

#include <sstream>

namespace acta {

namespace {

// Binding strength; larger binds tighter. Must mirror the parser.
enum pred_level { p_implies = 1, p_or, p_and, p_not, p_atom };
enum action_level { a_choice = 1, a_priority, a_seq, a_dep, a_guard, a_atom };

std::string join(const std::vector<name_ref>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i ? ", " : "") + names[i].text;
  }
  return out;
}

int level_of(const pred_expr& p) {
  if (const auto* b = std::get_if<pred_binary>(&p.node)) {
    switch (b->op) {
    case pred_op::implies: return p_implies;
    case pred_op::disj: return p_or;
    case pred_op::conj: return p_and;
    }
  }
  return std::holds_alternative<pred_not>(p.node) ? p_not : p_atom;
}

void print_pred(std::ostream& os, const pred_expr& p, int min_level);

void print_pred_at(std::ostream& os, const pred_expr& p, int min_level) {
  if (level_of(p) < min_level) {
    os << '(';
    print_pred(os, p, 0);
    os << ')';
  } else {
    print_pred(os, p, min_level);
  }
}

void print_pred(std::ostream& os, const pred_expr& p, int) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, pred_const>) {
          os << (n.value ? "true" : "false");
        } else if constexpr (std::is_same_v<T, pred_compare>) {
          os << n.lhs.text << (n.negated ? " != " : " = ") << n.rhs.text;
        } else if constexpr (std::is_same_v<T, pred_member>) {
          os << n.var.text << " in {" << join(n.values) << '}';
        } else if constexpr (std::is_same_v<T, pred_not>) {
          os << '!';
          print_pred_at(os, *n.operand, p_not);
        } else {
          const int lvl = level_of(p);
          if (n.op == pred_op::implies) {
            print_pred_at(os, *n.lhs, lvl + 1);
            os << " => ";
            print_pred_at(os, *n.rhs, lvl);
          } else {
            print_pred_at(os, *n.lhs, lvl);
            os << (n.op == pred_op::conj ? " & " : " | ");
            print_pred_at(os, *n.rhs, lvl + 1);
          }
        }
      },
      p.node);
}

int level_of(const action_expr& a) {
  if (const auto* b = std::get_if<binary_node>(&a.node)) {
    switch (b->op) {
    case action_op::choice: return a_choice;
    case action_op::priority: return a_priority;
    case action_op::seq:
    case action_op::guarded_seq: return a_seq;
    case action_op::dep: return a_dep;
    }
  }
  return std::holds_alternative<guarded_node>(a.node) ? a_guard : a_atom;
}

const char* symbol(action_op op) {
  switch (op) {
  case action_op::choice: return " [] ";
  case action_op::priority: return " // ";
  case action_op::seq: return " ; ";
  case action_op::guarded_seq: return " ;; ";
  case action_op::dep: return " \\\\ ";
  }
  return " ? ";
}

void print_action(std::ostream& os, const action_expr& a);

void print_action_at(std::ostream& os, const action_expr& a, int min_level) {
  if (level_of(a) < min_level) {
    os << '(';
    print_action(os, a);
    os << ')';
  } else {
    print_action(os, a);
  }
}

void print_action(std::ostream& os, const action_expr& a) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, abort_node>) {
          os << "abort";
        } else if constexpr (std::is_same_v<T, skip_node>) {
          os << "skip";
        } else if constexpr (std::is_same_v<T, assign_node>) {
          os << join(n.targets) << " := " << join(n.values);
        } else if constexpr (std::is_same_v<T, assume_node>) {
          os << '[';
          print_pred(os, *n.condition, 0);
          os << ']';
        } else if constexpr (std::is_same_v<T, guarded_node>) {
          print_pred(os, *n.guard, 0);
          os << " -> ";
          print_action_at(os, *n.body, a_guard);
        } else if constexpr (std::is_same_v<T, binary_node>) {
          const int lvl = level_of(a);
          print_action_at(os, *n.lhs, lvl);
          os << symbol(n.op);
          print_action_at(os, *n.rhs, lvl + 1);
        } else {
          os << n.label.text;
        }
      },
      a.node);
}

} // namespace

std::string print(const pred_expr& p) {
  std::ostringstream os;
  print_pred(os, p, 0);
  return os.str();
}

std::string print(const action_expr& a) {
  std::ostringstream os;
  print_action(os, a);
  return os.str();
}

std::string print(const system_model& m) {
  std::ostringstream os;
  os << "system " << m.name.text << "\n\n";
  for (const auto& v : m.variables) {
    if (v.vis == visibility::exported) {
      os << "export ";
    } else if (v.vis == visibility::imported) {
      os << "import ";
    }
    os << "var " << v.name.text;
    if (!v.indices.empty()) {
      os << '[' << join(v.indices) << ']';
    }
    os << " : {" << join(v.domain) << "}\n";
  }
  if (!m.init.empty()) {
    os << "\ninit ";
    for (std::size_t i = 0; i < m.init.size(); ++i) {
      os << (i ? "; " : "") << join(m.init[i].assign.targets) << " := "
         << join(m.init[i].assign.values);
    }
    os << '\n';
  }
  os << '\n';
  for (const auto& d : m.actions) {
    os << "action " << d.label.text << " : " << print(*d.body) << '\n';
  }
  if (m.run) {
    os << "\nrun " << print(*m.run) << '\n';
  }
  return os.str();
}

} // namespace acta
