#pragma once

// Pointwise outcome rules shared by the whole-space combinators and the
// per-state evaluator.

#include "acta/semantics.hpp"

namespace acta::detail {

inline outcome choice_at(const outcome& x, const outcome& y) {
  if (x.is_abort() || y.is_abort()) {
    return outcome::abort();
  }
  if (x.is_miracle()) {
    return y;
  }
  if (y.is_miracle()) {
    return x;
  }
  auto merged = x.successors();
  merged.insert(merged.end(), y.successors().begin(), y.successors().end());
  return outcome::enabled(std::move(merged));
}

/// `first ; second` at one state, where `second_at(t)` yields the outcome of
/// the second action at successor t.
template <class SecondAt>
outcome seq_at(const outcome& first, SecondAt&& second_at) {
  if (!first.is_enabled()) {
    return first;
  }
  std::vector<state_id> acc;
  for (auto t : first.successors()) {
    const outcome next = second_at(t);
    if (next.is_abort()) {
      return outcome::abort();
    }
    if (next.is_enabled()) {
      acc.insert(acc.end(), next.successors().begin(), next.successors().end());
    }
  }
  return outcome::enabled(std::move(acc));
}

inline outcome body_at(const outcome& x, state_id s) {
  return x.is_miracle() ? outcome::single(s) : x;
}

} // namespace acta::detail
