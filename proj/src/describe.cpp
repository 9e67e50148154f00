#include "acta/describe.hpp"

#include <algorithm>

namespace acta {

namespace {

// Calls f(s) for every state in the cube with variable `fixed_var` pinned to
// `fixed_value` (or unpinned when fixed_var == npos). Stops when f is false.
template <class F>
bool for_each_state(const state_space& space, const cube& c, std::size_t fixed_var,
                    std::size_t fixed_value, F&& f) {
  const auto nvars = space.variable_count();
  std::vector<std::vector<std::size_t>> choices(nvars);
  for (std::size_t v = 0; v < nvars; ++v) {
    if (v == fixed_var) {
      choices[v] = {fixed_value};
      continue;
    }
    for (std::size_t i = 0; i < c.allowed[v].size(); ++i) {
      if (c.allowed[v][i]) {
        choices[v].push_back(i);
      }
    }
    if (choices[v].empty()) {
      return true;
    }
  }
  std::vector<std::size_t> pos(nvars, 0);
  std::vector<std::size_t> values(nvars);
  while (true) {
    for (std::size_t v = 0; v < nvars; ++v) {
      values[v] = choices[v][pos[v]];
    }
    if (!f(space.encode(values))) {
      return false;
    }
    std::size_t v = nvars;
    while (v > 0) {
      --v;
      if (++pos[v] < choices[v].size()) {
        break;
      }
      pos[v] = 0;
      if (v == 0) {
        return true;
      }
    }
    if (nvars == 0) {
      return true;
    }
  }
}

constexpr std::size_t no_var = static_cast<std::size_t>(-1);

} // namespace

std::vector<cube> minimize(const predicate& p) {
  const auto& space = *p.space();
  std::vector<cube> cover;
  auto uncovered = p;
  for (auto s : p.members()) {
    if (!uncovered.contains(s)) {
      continue;
    }
    cube c;
    for (std::size_t v = 0; v < space.variable_count(); ++v) {
      c.allowed.emplace_back(space.var(v).domain.size(), false);
      c.allowed[v][space.value_of(s, v)] = true;
    }
    for (std::size_t v = 0; v < space.variable_count(); ++v) {
      for (std::size_t val = 0; val < c.allowed[v].size(); ++val) {
        if (c.allowed[v][val]) {
          continue;
        }
        const bool inside =
            for_each_state(space, c, v, val, [&](state_id t) { return p.contains(t); });
        if (inside) {
          c.allowed[v][val] = true;
        }
      }
    }
    for_each_state(space, c, no_var, 0, [&](state_id t) {
      uncovered.erase(t);
      return true;
    });
    cover.push_back(std::move(c));
  }

  // Drop cubes whose states are all covered by the others, latest first.
  std::vector<std::uint32_t> hits(static_cast<std::size_t>(space.size()), 0);
  for (const auto& c : cover) {
    for_each_state(space, c, no_var, 0, [&](state_id t) {
      ++hits[t];
      return true;
    });
  }
  for (std::size_t i = cover.size(); i-- > 0;) {
    const bool redundant =
        for_each_state(space, cover[i], no_var, 0, [&](state_id t) { return hits[t] > 1; });
    if (redundant) {
      for_each_state(space, cover[i], no_var, 0, [&](state_id t) {
        --hits[t];
        return true;
      });
      cover.erase(cover.begin() + static_cast<std::ptrdiff_t>(i));
    }
  }
  return cover;
}

std::string describe(const cube& c, const state_space& space) {
  std::string out;
  for (std::size_t v = 0; v < space.variable_count(); ++v) {
    const auto& dom = space.var(v).domain;
    const auto& allowed = c.allowed[v];
    const auto n = static_cast<std::size_t>(std::count(allowed.begin(), allowed.end(), true));
    if (n == dom.size()) {
      continue;
    }
    if (!out.empty()) {
      out += " & ";
    }
    const auto& name = space.var(v).name;
    if (n == 1) {
      out += name + '=' + dom[static_cast<std::size_t>(
                              std::find(allowed.begin(), allowed.end(), true) - allowed.begin())];
    } else if (n + 1 == dom.size()) {
      out += name + "!=" +
             dom[static_cast<std::size_t>(std::find(allowed.begin(), allowed.end(), false) -
                                          allowed.begin())];
    } else {
      out += name + " in {";
      bool first = true;
      for (std::size_t i = 0; i < dom.size(); ++i) {
        if (allowed[i]) {
          out += first ? "" : ", ";
          out += dom[i];
          first = false;
        }
      }
      out += '}';
    }
  }
  return out.empty() ? "true" : out;
}

std::string describe(const predicate& p) {
  if (p.empty()) {
    return "false";
  }
  const auto cover = minimize(p);
  std::string out;
  for (const auto& c : cover) {
    if (!out.empty()) {
      out += " | ";
    }
    out += describe(c, *p.space());
  }
  return out;
}

std::string describe(const outcome& o, const state_space& space) {
  switch (o.kind()) {
  case outcome_kind::abort:
    return "abort";
  case outcome_kind::miracle:
    return "miracle";
  case outcome_kind::enabled:
    break;
  }
  std::string out = "{";
  for (std::size_t i = 0; i < o.successors().size(); ++i) {
    out += i == 0 ? "(" : ", (";
    out += space.format(o.successors()[i]) + ')';
  }
  return out + '}';
}

} // namespace acta
