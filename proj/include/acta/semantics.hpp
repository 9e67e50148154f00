#pragma once

#include "acta/ast.hpp"
#include "acta/predicate.hpp"
#include "acta/space.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace acta {

// ------------------------------------------------------------------ outcomes

enum class outcome_kind : std::uint8_t { abort, miracle, enabled };

/// What an action does from one start state. An enabled outcome always has a
/// nonempty successor set; an empty demonic choice is a miracle.
class outcome {
public:
  static outcome abort() { return outcome(outcome_kind::abort, {}); }
  static outcome miracle() { return outcome(outcome_kind::miracle, {}); }
  static outcome single(state_id s) { return outcome(outcome_kind::enabled, {s}); }
  /// Sorts and deduplicates; an empty vector yields a miracle.
  static outcome enabled(std::vector<state_id> successors);

  outcome_kind kind() const { return kind_; }
  bool is_abort() const { return kind_ == outcome_kind::abort; }
  bool is_miracle() const { return kind_ == outcome_kind::miracle; }
  bool is_enabled() const { return kind_ == outcome_kind::enabled; }
  const std::vector<state_id>& successors() const { return successors_; }

  bool operator==(const outcome&) const = default;

private:
  outcome(outcome_kind k, std::vector<state_id> succ) : kind_(k), successors_(std::move(succ)) {}

  outcome_kind kind_;
  std::vector<state_id> successors_;
};

/// Total, immutable map from states to outcomes: the meaning of an action.
class denotation {
public:
  denotation(space_ptr space, std::vector<outcome> outcomes);

  const space_ptr& space() const { return space_; }
  state_id size() const { return static_cast<state_id>(outcomes_.size()); }
  const outcome& at(state_id s) const { return outcomes_[s]; }
  const std::vector<outcome>& outcomes() const { return outcomes_; }

  bool operator==(const denotation& other) const {
    return same_space(space_, other.space_) && outcomes_ == other.outcomes_;
  }

private:
  space_ptr space_;
  std::vector<outcome> outcomes_;
};

// ----------------------------------------------------- denotation combinators

denotation abort_action(const space_ptr& space);
denotation skip_action(const space_ptr& space);
/// skip where p holds, abort elsewhere
denotation assume(const predicate& p);
/// p -> a: a where p holds, miracle elsewhere
denotation guarded(const predicate& p, const denotation& a);
denotation choice(const denotation& a, const denotation& b);
/// Composition of weakest preconditions: wp(a;b, q) = wp(a, wp(b, q)).
denotation seq(const denotation& a, const denotation& b);
/// The guard-and-body form g(a) & wp(b(a), g(b)) -> b(a) ; b(b).
denotation guarded_seq(const denotation& a, const denotation& b);
/// a if a is enabled, otherwise b.
denotation priority(const denotation& a, const denotation& b);
/// g(a) & g(b) -> a ; b
denotation dep(const denotation& a, const denotation& b);

// -------------------------------------------------------- semantic functions

predicate wp(const denotation& a, const predicate& post);
/// Complement of wp(a, false): the states where a is not miraculous.
predicate guard(const denotation& a);
/// Canonical guard-free completion: skip wherever a is miraculous.
denotation body(const denotation& a);
bool terminates(const denotation& a);
/// No abort, and every enabled outcome has exactly one successor.
bool deterministic(const denotation& a);

bool equal(const denotation& a, const denotation& b);
bool refines(const denotation& a, const denotation& b);
/// First state (in state order) where the outcomes differ.
std::optional<state_id> first_difference(const denotation& a, const denotation& b);
/// First state where the pointwise refinement condition fails.
std::optional<state_id> refinement_violation(const denotation& a, const denotation& b);

/// wp(a1, g(a2)) as a predicate.
predicate enables_pred(const denotation& a1, const denotation& a2);
/// g(a2) => wp(a1, g(a2))
predicate cannot_disable_pred(const denotation& a1, const denotation& a2);
/// !g(a2) => wp(a1, !g(a2))
predicate cannot_enable_pred(const denotation& a1, const denotation& a2);
bool enables(const denotation& a1, const denotation& a2);
bool cannot_disable(const denotation& a1, const denotation& a2);
bool cannot_enable(const denotation& a1, const denotation& a2);

// Guard/body forms of the same relations.
predicate enables_reduced(const denotation& a1, const denotation& a2);
predicate cannot_disable_reduced(const denotation& a1, const denotation& a2);
predicate cannot_enable_reduced(const denotation& a1, const denotation& a2);

// -------------------------------------------------------------------- oracle

enum class relation { equal, refines };

inline constexpr std::size_t default_oracle_cap = 16;

struct oracle_witness {
  predicate post;
  state_id state;
};

struct oracle_verdict {
  bool holds = true;
  std::optional<oracle_witness> witness;
};

/// Brute-force check of the relation over every postcondition, in increasing
/// bitmask order. Throws limit_error when the space exceeds `cap` states.
oracle_verdict wp_oracle_compare(const denotation& a1, const denotation& a2, relation rel,
                                 std::size_t cap = default_oracle_cap);

// ------------------------------------------------------- resolved expressions

struct resolved_action;
using resolved_ptr = std::shared_ptr<const resolved_action>;

struct r_abort {};
struct r_skip {};
struct r_assign {
  struct target {
    std::size_t var;
    bool copy;           // copy the current value of `source` instead of a literal
    std::size_t source;  // value index, or source variable index when copy
  };
  std::vector<target> targets;
};
struct r_assume {
  predicate condition;
};
struct r_guarded {
  predicate guard;
  resolved_ptr body;
};
struct r_binary {
  action_op op;
  resolved_ptr lhs;
  resolved_ptr rhs;
};

/// An action expression with names bound to a space and predicates denoted.
struct resolved_action {
  std::variant<r_abort, r_skip, r_assign, r_assume, r_guarded, r_binary> node;
};

using label_table = std::map<std::string, action_ptr, std::less<>>;

/// Denote a predicate expression; throws validation_error naming the offender.
predicate denote_predicate(const pred_expr& p, const space_ptr& space);

/// Bind an action expression to a space. References are looked up in
/// `labels`; a null table rejects every reference.
resolved_ptr resolve(const action_expr& a, const space_ptr& space,
                     const label_table* labels = nullptr);

/// Whole-space denotation, built bottom-up with the combinators above.
denotation denote(const resolved_action& a, const space_ptr& space);
denotation denote(const action_expr& a, const space_ptr& space, const label_table* labels = nullptr);

/// Outcome at a single state, evaluated by recursion on the expression.
outcome outcome_at(const resolved_action& a, const state_space& space, state_id s);

} // namespace acta
