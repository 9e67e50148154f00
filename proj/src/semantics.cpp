#include "acta/semantics.hpp"

#include "acta/error.hpp"
#include "pointwise.hpp"

#include <algorithm>

namespace acta {

using detail::body_at;
using detail::choice_at;
using detail::seq_at;

outcome outcome::enabled(std::vector<state_id> successors) {
  if (successors.empty()) {
    return miracle();
  }
  std::sort(successors.begin(), successors.end());
  successors.erase(std::unique(successors.begin(), successors.end()), successors.end());
  return outcome(outcome_kind::enabled, std::move(successors));
}

denotation::denotation(space_ptr space, std::vector<outcome> outcomes)
    : space_(std::move(space)), outcomes_(std::move(outcomes)) {
  if (!space_ || static_cast<state_id>(outcomes_.size()) != space_->size()) {
    throw error("denotation must assign an outcome to every state");
  }
}

namespace {

void check_same(const space_ptr& a, const space_ptr& b) {
  if (!same_space(a, b)) {
    throw space_mismatch();
  }
}

template <class F>
denotation tabulate(const space_ptr& space, F&& f) {
  std::vector<outcome> out;
  out.reserve(static_cast<std::size_t>(space->size()));
  for (state_id s = 0; s < space->size(); ++s) {
    out.push_back(f(s));
  }
  return denotation(space, std::move(out));
}

} // namespace

denotation abort_action(const space_ptr& space) {
  return tabulate(space, [](state_id) { return outcome::abort(); });
}

denotation skip_action(const space_ptr& space) {
  return tabulate(space, [](state_id s) { return outcome::single(s); });
}

denotation assume(const predicate& p) {
  return tabulate(p.space(),
                  [&](state_id s) { return p.contains(s) ? outcome::single(s) : outcome::abort(); });
}

denotation guarded(const predicate& p, const denotation& a) {
  check_same(p.space(), a.space());
  return tabulate(a.space(), [&](state_id s) { return p.contains(s) ? a.at(s) : outcome::miracle(); });
}

denotation choice(const denotation& a, const denotation& b) {
  check_same(a.space(), b.space());
  return tabulate(a.space(), [&](state_id s) { return choice_at(a.at(s), b.at(s)); });
}

denotation seq(const denotation& a, const denotation& b) {
  check_same(a.space(), b.space());
  return tabulate(a.space(), [&](state_id s) {
    return seq_at(a.at(s), [&](state_id t) -> const outcome& { return b.at(t); });
  });
}

denotation guarded_seq(const denotation& a, const denotation& b) {
  check_same(a.space(), b.space());
  const denotation ba = body(a);
  return guarded(guard(a) & wp(ba, guard(b)), seq(ba, body(b)));
}

denotation priority(const denotation& a, const denotation& b) {
  check_same(a.space(), b.space());
  return tabulate(a.space(), [&](state_id s) { return a.at(s).is_miracle() ? b.at(s) : a.at(s); });
}

denotation dep(const denotation& a, const denotation& b) {
  return guarded(guard(a) & guard(b), seq(a, b));
}

predicate wp(const denotation& a, const predicate& post) {
  check_same(a.space(), post.space());
  auto out = predicate::none(a.space());
  for (state_id s = 0; s < a.size(); ++s) {
    const auto& o = a.at(s);
    bool ok = false;
    switch (o.kind()) {
    case outcome_kind::abort:
      ok = false;
      break;
    case outcome_kind::miracle:
      ok = true;
      break;
    case outcome_kind::enabled:
      ok = std::all_of(o.successors().begin(), o.successors().end(),
                       [&](state_id t) { return post.contains(t); });
      break;
    }
    if (ok) {
      out.insert(s);
    }
  }
  return out;
}

predicate guard(const denotation& a) { return ~wp(a, predicate::none(a.space())); }

denotation body(const denotation& a) {
  return tabulate(a.space(), [&](state_id s) { return body_at(a.at(s), s); });
}

bool terminates(const denotation& a) { return wp(a, predicate::all(a.space())).full(); }

bool deterministic(const denotation& a) {
  return std::all_of(a.outcomes().begin(), a.outcomes().end(), [](const outcome& o) {
    return !o.is_abort() && (o.is_miracle() || o.successors().size() == 1);
  });
}

bool equal(const denotation& a, const denotation& b) { return !first_difference(a, b); }

bool refines(const denotation& a, const denotation& b) { return !refinement_violation(a, b); }

std::optional<state_id> first_difference(const denotation& a, const denotation& b) {
  check_same(a.space(), b.space());
  for (state_id s = 0; s < a.size(); ++s) {
    if (!(a.at(s) == b.at(s))) {
      return s;
    }
  }
  return std::nullopt;
}

std::optional<state_id> refinement_violation(const denotation& a, const denotation& b) {
  check_same(a.space(), b.space());
  for (state_id s = 0; s < a.size(); ++s) {
    const auto& x = a.at(s);
    const auto& y = b.at(s);
    bool ok = true;
    switch (x.kind()) {
    case outcome_kind::abort:
      ok = true;
      break;
    case outcome_kind::miracle:
      ok = y.is_miracle();
      break;
    case outcome_kind::enabled:
      ok = y.is_miracle() ||
           (y.is_enabled() && std::includes(x.successors().begin(), x.successors().end(),
                                            y.successors().begin(), y.successors().end()));
      break;
    }
    if (!ok) {
      return s;
    }
  }
  return std::nullopt;
}

predicate enables_pred(const denotation& a1, const denotation& a2) { return wp(a1, guard(a2)); }

predicate cannot_disable_pred(const denotation& a1, const denotation& a2) {
  const auto g2 = guard(a2);
  return g2.implies(wp(a1, g2));
}

predicate cannot_enable_pred(const denotation& a1, const denotation& a2) {
  const auto ng2 = ~guard(a2);
  return ng2.implies(wp(a1, ng2));
}

bool enables(const denotation& a1, const denotation& a2) { return enables_pred(a1, a2).full(); }

bool cannot_disable(const denotation& a1, const denotation& a2) {
  return cannot_disable_pred(a1, a2).full();
}

bool cannot_enable(const denotation& a1, const denotation& a2) {
  return cannot_enable_pred(a1, a2).full();
}

predicate enables_reduced(const denotation& a1, const denotation& a2) {
  return guard(a1).implies(wp(body(a1), guard(a2)));
}

predicate cannot_disable_reduced(const denotation& a1, const denotation& a2) {
  const auto g2 = guard(a2);
  return (guard(a1) & g2).implies(wp(body(a1), g2));
}

predicate cannot_enable_reduced(const denotation& a1, const denotation& a2) {
  const auto ng2 = ~guard(a2);
  return (guard(a1) & ng2).implies(wp(body(a1), ng2));
}

oracle_verdict wp_oracle_compare(const denotation& a1, const denotation& a2, relation rel,
                                 std::size_t cap) {
  check_same(a1.space(), a2.space());
  const auto n = a1.size();
  if (n > cap || n > 63) {
    throw limit_error("oracle needs at most " + std::to_string(std::min<std::size_t>(cap, 63)) +
                      " states, space has " + std::to_string(n));
  }
  const std::uint64_t posts = std::uint64_t{1} << n;
  for (std::uint64_t mask = 0; mask < posts; ++mask) {
    const auto q = predicate::from_mask(a1.space(), mask);
    const auto w1 = wp(a1, q);
    const auto w2 = wp(a2, q);
    for (state_id s = 0; s < n; ++s) {
      const bool bad = rel == relation::equal ? w1.contains(s) != w2.contains(s)
                                              : w1.contains(s) && !w2.contains(s);
      if (bad) {
        return {false, oracle_witness{q, s}};
      }
    }
  }
  return {true, std::nullopt};
}

denotation denote(const resolved_action& a, const space_ptr& space) {
  return std::visit(
      [&](const auto& n) -> denotation {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, r_abort>) {
          return abort_action(space);
        } else if constexpr (std::is_same_v<T, r_skip>) {
          return skip_action(space);
        } else if constexpr (std::is_same_v<T, r_assign>) {
          return tabulate(space, [&](state_id s) { return outcome_at(a, *space, s); });
        } else if constexpr (std::is_same_v<T, r_assume>) {
          return assume(n.condition);
        } else if constexpr (std::is_same_v<T, r_guarded>) {
          return guarded(n.guard, denote(*n.body, space));
        } else {
          const auto l = denote(*n.lhs, space);
          const auto r = denote(*n.rhs, space);
          switch (n.op) {
          case action_op::choice:
            return choice(l, r);
          case action_op::priority:
            return priority(l, r);
          case action_op::seq:
            return seq(l, r);
          case action_op::guarded_seq:
            return guarded_seq(l, r);
          case action_op::dep:
            return dep(l, r);
          }
          throw error("unknown action operator");
        }
      },
      a.node);
}

denotation denote(const action_expr& a, const space_ptr& space, const label_table* labels) {
  return denote(*resolve(a, space, labels), space);
}

outcome outcome_at(const resolved_action& a, const state_space& space, state_id s) {
  return std::visit(
      [&](const auto& n) -> outcome {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, r_abort>) {
          return outcome::abort();
        } else if constexpr (std::is_same_v<T, r_skip>) {
          return outcome::single(s);
        } else if constexpr (std::is_same_v<T, r_assign>) {
          state_id t = s;
          for (const auto& tg : n.targets) {
            const auto value = tg.copy ? *space.find_value(tg.var, space.value_name(s, tg.source))
                                       : tg.source;
            t = space.with_value(t, tg.var, value);
          }
          return outcome::single(t);
        } else if constexpr (std::is_same_v<T, r_assume>) {
          return n.condition.contains(s) ? outcome::single(s) : outcome::abort();
        } else if constexpr (std::is_same_v<T, r_guarded>) {
          return n.guard.contains(s) ? outcome_at(*n.body, space, s) : outcome::miracle();
        } else {
          const auto& l = *n.lhs;
          const auto& r = *n.rhs;
          auto rhs_at = [&](state_id t) { return outcome_at(r, space, t); };
          switch (n.op) {
          case action_op::choice:
            return choice_at(outcome_at(l, space, s), outcome_at(r, space, s));
          case action_op::priority: {
            auto x = outcome_at(l, space, s);
            return x.is_miracle() ? outcome_at(r, space, s) : x;
          }
          case action_op::seq:
            return seq_at(outcome_at(l, space, s), rhs_at);
          case action_op::guarded_seq: {
            const auto x = outcome_at(l, space, s);
            if (x.is_miracle() || x.is_abort()) {
              // disabled, or wp(body, g(rhs)) fails at an aborting body
              return outcome::miracle();
            }
            std::vector<outcome> next;
            for (auto t : x.successors()) {
              next.push_back(rhs_at(t));
              if (next.back().is_miracle()) {
                return outcome::miracle();
              }
            }
            std::size_t i = 0;
            return seq_at(x, [&](state_id) { return next[i++]; });
          }
          case action_op::dep: {
            const auto x = outcome_at(l, space, s);
            if (x.is_miracle() || outcome_at(r, space, s).is_miracle()) {
              return outcome::miracle();
            }
            return seq_at(x, rhs_at);
          }
          }
          throw error("unknown action operator");
        }
      },
      a.node);
}

} // namespace acta
