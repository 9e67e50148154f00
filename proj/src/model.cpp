#include "acta/model.hpp"

#include "acta/dsl.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace acta {

namespace {

space_ptr build_space(const system_model& m) {
  std::vector<variable> vars;
  std::map<std::string, source_span, std::less<>> seen;
  for (const auto& d : m.variables) {
    std::map<std::string, bool, std::less<>> idx_seen;
    for (const auto& i : d.indices) {
      if (!idx_seen.emplace(i.text, true).second) {
        throw validation_error(i.span, "index '" + i.text + "' repeated in family '" +
                                           d.name.text + "'");
      }
    }
    std::map<std::string, bool, std::less<>> val_seen;
    for (const auto& v : d.domain) {
      if (!val_seen.emplace(v.text, true).second) {
        throw validation_error(v.span, "value '" + v.text + "' repeated in the domain of '" +
                                           d.name.text + "'");
      }
    }
    for (const auto& n : d.expanded_names()) {
      if (!seen.emplace(n, d.span).second) {
        throw validation_error(d.name.span, "variable '" + n + "' declared twice");
      }
      // Imported variables belong to another system's space.
      if (d.vis == visibility::imported) {
        continue;
      }
      variable v{n, {}};
      for (const auto& val : d.domain) {
        v.domain.push_back(val.text);
      }
      vars.push_back(std::move(v));
    }
  }
  try {
    return std::make_shared<const state_space>(std::move(vars));
  } catch (const validation_error& e) {
    throw validation_error(source_span{m.file, 1, 1, 0}, e.message());
  }
}

state_id initial_state(const system_model& m, const state_space& space,
                       const std::map<std::string, bool, std::less<>>& imported) {
  std::vector<std::size_t> values(space.variable_count());
  std::vector<bool> assigned(space.variable_count(), false);
  for (const auto& ia : m.init) {
    const auto& a = ia.assign;
    if (a.targets.size() != a.values.size()) {
      throw validation_error(ia.span, "init assigns " + std::to_string(a.targets.size()) +
                                          " variables but gives " +
                                          std::to_string(a.values.size()) + " values");
    }
    for (std::size_t i = 0; i < a.targets.size(); ++i) {
      const auto& t = a.targets[i];
      const auto var = space.find_variable(t.text);
      if (!var) {
        const bool imp = imported.count(t.text) != 0;
        throw validation_error(t.span, imp ? "imported variable '" + t.text +
                                                 "' cannot be initialized here"
                                           : "undeclared variable '" + t.text + "' in init");
      }
      if (assigned[*var]) {
        throw validation_error(t.span, "variable '" + t.text + "' initialized twice");
      }
      const auto val = space.find_value(*var, a.values[i].text);
      if (!val) {
        throw validation_error(a.values[i].span, "initial value '" + a.values[i].text +
                                                     "' is not in the domain of '" + t.text +
                                                     "'");
      }
      assigned[*var] = true;
      values[*var] = *val;
    }
  }
  for (std::size_t v = 0; v < space.variable_count(); ++v) {
    if (!assigned[v]) {
      throw validation_error(source_span{m.file, 1, 1, 0},
                             "variable '" + space.var(v).name + "' has no initial value");
    }
  }
  return space.encode(values);
}

action_ptr default_composition(const system_model& m) {
  action_ptr out;
  for (const auto& d : m.actions) {
    auto ref = make_ref(d.label.text, d.label.span);
    out = out ? make_binary(action_op::choice, out, ref) : ref;
  }
  return out;
}

} // namespace

void check_composition(const action_expr& run, const label_table& labels) {
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ref_node>) {
          if (labels.find(n.label.text) == labels.end()) {
            throw validation_error(n.label.span, "unknown action '" + n.label.text + "' in run");
          }
        } else if constexpr (std::is_same_v<T, binary_node>) {
          if (n.op != action_op::choice && n.op != action_op::priority) {
            throw validation_error(run.span, "run may combine actions only with '[]' and '//'");
          }
          check_composition(*n.lhs, labels);
          check_composition(*n.rhs, labels);
        } else {
          throw validation_error(run.span, "run may only name actions");
        }
      },
      run.node);
}

action_system::action_system(system_model model) : model_(std::move(model)) {
  if (model_.actions.empty()) {
    throw validation_error(source_span{model_.file, 1, 1, 0}, "at least one action required");
  }
  space_ = build_space(model_);

  std::map<std::string, bool, std::less<>> imported;
  for (const auto& d : model_.variables) {
    if (d.vis == visibility::imported) {
      for (const auto& n : d.expanded_names()) {
        imported.emplace(n, true);
      }
    }
  }
  initial_ = initial_state(model_, *space_, imported);

  for (const auto& d : model_.actions) {
    if (space_->find_variable(d.label.text) || imported.count(d.label.text)) {
      throw validation_error(d.label.span,
                             "action label '" + d.label.text + "' clashes with a variable");
    }
    if (!table_.emplace(d.label.text, d.body).second) {
      throw validation_error(d.label.span, "action '" + d.label.text + "' defined twice");
    }
    labels_.push_back(d.label.text);
  }
  for (const auto& d : model_.actions) {
    try {
      resolved_.push_back(resolve(*d.body, space_, &table_));
    } catch (const validation_error& e) {
      std::string msg = e.message();
      // Point imported names at the import rather than calling them undeclared.
      for (const auto& [name, _] : imported) {
        if (msg == "undeclared variable '" + name + "'") {
          msg = "variable '" + name + "' is imported and not part of this system's state";
        }
      }
      throw validation_error(e.span(), "in action '" + d.label.text + "': " + msg);
    }
  }
  set_composition(model_.run ? model_.run : default_composition(model_));
}

void action_system::set_composition(action_ptr run) {
  check_composition(*run, table_);
  composition_ = std::move(run);
}

std::size_t action_system::label_index(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) {
      return i;
    }
  }
  throw validation_error("unknown action '" + std::string(label) + "'");
}

action_ptr action_system::parse_action(std::string_view text) const {
  return acta::parse_action(text, space_, &table_);
}

predicate action_system::parse_predicate(std::string_view text) const {
  return denote_predicate(*acta::parse_predicate_syntax(text), space_);
}

denotation action_system::denote(std::string_view action_text) const {
  return acta::denote(*acta::parse_action_syntax(action_text), space_, &table_);
}

action_system action_system::load(std::string_view text, const std::string& file) {
  return action_system(parse_system_syntax(text, file));
}

action_system action_system::load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw error("cannot open '" + path + "'");
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return load(ss.str(), path);
}

system_model parse_system(std::string_view text, const std::string& file) {
  auto m = parse_system_syntax(text, file);
  action_system{m};
  return m;
}

} // namespace acta
