#pragma once

#include "acta/predicate.hpp"
#include "acta/semantics.hpp"
#include "acta/space.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace acta {

// ----------------------------------------------------------------- generator

/// Enumerates or samples total denotations over a space. Per state, outcome
/// code 0 is abort, 1 is miracle and code c >= 2 is the successor set whose
/// bitmask is c - 1.
class action_generator {
public:
  static constexpr std::size_t max_exhaustive_states = 3;
  static constexpr std::size_t max_states = 16;

  /// Every denotation once, in increasing code order (first state least
  /// significant). Requires at most 3 states.
  static action_generator exhaustive(space_ptr space);
  /// `count` draws from a 64-bit Mersenne twister seeded with `seed`.
  static action_generator random(space_ptr space, std::uint64_t seed, std::uint64_t count);

  /// Outcomes available per state: 2 + (2^n - 1).
  std::uint64_t outcomes_per_state() const { return per_state_; }
  /// Total number of denotations this stream yields.
  std::uint64_t size() const { return count_; }
  bool is_exhaustive() const { return exhaustive_; }

  std::optional<denotation> next();
  /// The exhaustive denotation with the given index.
  denotation at(std::uint64_t index) const;
  /// Uniform draw from an explicit engine.
  denotation draw(std::mt19937_64& rng) const;

private:
  action_generator(space_ptr space, bool exhaustive, std::uint64_t seed, std::uint64_t count);
  outcome decode(std::uint64_t code) const;

  space_ptr space_;
  bool exhaustive_;
  std::uint64_t per_state_;
  std::uint64_t count_;
  std::uint64_t produced_ = 0;
  std::mt19937_64 rng_;
};

/// Number of total denotations over n states, if it fits in 64 bits.
std::optional<std::uint64_t> denotation_count(std::size_t states);

// ---------------------------------------------------------------------- laws

enum class side_condition_kind {
  none,
  cannot_disable,
  cannot_enable,
  guard_implication,
  commuting_assumption,
  body_determinism
};

std::string to_string(side_condition_kind k);

/// Metavariable bindings for one instantiation of a law.
struct law_instance {
  std::vector<denotation> actions;
  std::vector<predicate> preds;
};

using law_term = std::variant<denotation, predicate>;

/// One `lhs rel rhs` obligation of a law.
struct law_clause {
  std::string lhs;
  std::string rhs;
  relation rel = relation::equal;
  std::function<law_term(const law_instance&)> lhs_fn;
  std::function<law_term(const law_instance&)> rhs_fn;
};

struct law {
  std::string id;
  std::string name;
  /// Action metavariables; the law's arity is their count.
  std::vector<std::string> action_vars;
  /// Predicate metavariables; each ranges over every predicate of the space.
  std::vector<std::string> pred_vars;
  std::vector<law_clause> clauses;
  /// Refinement hypotheses `A_i ⊑ A_j`; tuples violating them are not
  /// instances of the law at all.
  std::vector<std::pair<std::size_t, std::size_t>> premises;
  side_condition_kind side = side_condition_kind::none;
  std::string side_text;
  std::function<bool(const law_instance&)> side_fn;
  /// The law claims that a violating instance exists (e.g. non-commutativity).
  bool existential = false;

  std::size_t arity() const { return action_vars.size(); }
  bool conditional() const { return side != side_condition_kind::none; }
  /// Human statement, e.g. `A1 ; A2 ⊑ A1 \\ A2  if g(A1) => g(A2)`.
  std::string statement() const;
};

/// All 21 catalogued laws, ids L1..L21 in order.
const std::vector<law>& builtin_laws();
const law& find_law(const std::string& id);

// ------------------------------------------------------------------ checking

enum class check_mode { automatic, exhaustive, random };

struct check_budget {
  check_mode mode = check_mode::automatic;
  std::uint64_t samples = 20000;
  std::uint64_t seed = 0xAC7A;
};

enum class verdict { holds, counterexample, vacuous, no_witness };
enum class necessity { yes, no, not_applicable };

std::string to_string(verdict v);
std::string to_string(necessity n);

/// A concrete violating instance, enough to re-evaluate it.
struct law_witness {
  law_instance instance;
  std::size_t clause = 0;
  /// First state where the clause fails.
  state_id state = 0;
  /// Postcondition separating the two sides, when the oracle could find one.
  std::optional<predicate> post;
  std::string lhs_at_state;
  std::string rhs_at_state;
};

struct check_report {
  std::string law_id;
  std::string law_name;
  std::size_t states = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;
  /// Instantiations tried (premise-satisfying, counting predicate bindings).
  std::uint64_t instances = 0;
  /// Of those, the ones satisfying the side condition.
  std::uint64_t applicable = 0;
  verdict result = verdict::holds;
  std::optional<law_witness> witness;
  necessity necessity_result = necessity::not_applicable;
  std::optional<law_witness> necessity_witness;

  /// Counts against the aggregate status of a law run.
  bool failed() const { return result == verdict::counterexample || result == verdict::vacuous; }
};

/// Evaluate every clause of `l` on one instance; the first failing clause, if
/// any, is returned as a witness.
std::optional<law_witness> evaluate(const law& l, const law_instance& inst);
/// True when the witness still violates its clause.
bool reverify(const law& l, const law_witness& w);

check_report check_law(const law& l, const space_ptr& space, const check_budget& budget = {});
std::vector<check_report> check_all(const space_ptr& space, const check_budget& budget = {});
/// Aggregate status: false iff some report failed.
bool all_passed(const std::vector<check_report>& reports);

std::string format_denotation(const denotation& d);
std::string format_human(const check_report& r);
/// One JSON object, no trailing newline.
std::string format_json(const check_report& r);

} // namespace acta
