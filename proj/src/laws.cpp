#include "acta/laws.hpp"

#include "acta/describe.hpp"

#include "json.hpp"

#include <limits>
#include <sstream>

namespace acta {

// ----------------------------------------------------------------- generator

std::optional<std::uint64_t> denotation_count(std::size_t states) {
  if (states >= 63) {
    return std::nullopt;
  }
  const std::uint64_t per = 2 + ((std::uint64_t{1} << states) - 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < states; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / per) {
      return std::nullopt;
    }
    total *= per;
  }
  return total;
}

action_generator::action_generator(space_ptr space, bool exhaustive, std::uint64_t seed,
                                   std::uint64_t count)
    : space_(std::move(space)), exhaustive_(exhaustive), count_(count), rng_(seed) {
  const auto n = space_->size();
  if (n > max_states) {
    throw limit_error("action generator supports at most " + std::to_string(max_states) +
                      " states, space has " + std::to_string(n));
  }
  per_state_ = 2 + ((std::uint64_t{1} << n) - 1);
}

action_generator action_generator::exhaustive(space_ptr space) {
  const auto n = space->size();
  if (n > max_exhaustive_states) {
    throw limit_error("exhaustive generation needs at most " +
                      std::to_string(max_exhaustive_states) + " states, space has " +
                      std::to_string(n));
  }
  const auto count = *denotation_count(n);
  return action_generator(std::move(space), true, 0, count);
}

action_generator action_generator::random(space_ptr space, std::uint64_t seed,
                                          std::uint64_t count) {
  return action_generator(std::move(space), false, seed, count);
}

outcome action_generator::decode(std::uint64_t code) const {
  if (code == 0) {
    return outcome::abort();
  }
  if (code == 1) {
    return outcome::miracle();
  }
  const std::uint64_t mask = code - 1;
  std::vector<state_id> succ;
  for (state_id t = 0; t < space_->size(); ++t) {
    if ((mask >> t) & 1U) {
      succ.push_back(t);
    }
  }
  return outcome::enabled(std::move(succ));
}

denotation action_generator::at(std::uint64_t index) const {
  std::vector<outcome> out;
  out.reserve(space_->size());
  for (state_id s = 0; s < space_->size(); ++s) {
    out.push_back(decode(index % per_state_));
    index /= per_state_;
  }
  return denotation(space_, std::move(out));
}

denotation action_generator::draw(std::mt19937_64& rng) const {
  std::vector<outcome> out;
  out.reserve(space_->size());
  for (state_id s = 0; s < space_->size(); ++s) {
    out.push_back(decode(rng() % per_state_));
  }
  return denotation(space_, std::move(out));
}

std::optional<denotation> action_generator::next() {
  if (produced_ >= count_) {
    return std::nullopt;
  }
  const auto i = produced_++;
  return exhaustive_ ? at(i) : draw(rng_);
}

// ---------------------------------------------------------------------- laws

std::string to_string(side_condition_kind k) {
  switch (k) {
  case side_condition_kind::none: return "none";
  case side_condition_kind::cannot_disable: return "cannot_disable";
  case side_condition_kind::cannot_enable: return "cannot_enable";
  case side_condition_kind::guard_implication: return "guard_implication";
  case side_condition_kind::commuting_assumption: return "commuting_assumption";
  case side_condition_kind::body_determinism: return "body_determinism";
  }
  return "unknown";
}

std::string law::statement() const {
  std::string out;
  for (const auto& [i, j] : premises) {
    out += action_vars[i] + " ⊑ " + action_vars[j] + "  ==>  ";
  }
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    const auto& cl = clauses[c];
    out += (c ? ",  " : "") + cl.lhs + (cl.rel == relation::equal ? " = " : " ⊑ ") + cl.rhs;
  }
  if (existential) {
    out = "not always: " + out;
  }
  if (conditional()) {
    out += "  if " + side_text;
  }
  return out;
}

namespace {

// Stable across platforms, unlike std::hash.
std::uint32_t fnv1a(const std::string& text) {
  std::uint32_t h = 2166136261U;
  for (const unsigned char c : text) {
    h = (h ^ c) * 16777619U;
  }
  return h;
}

using term_fn = std::function<law_term(const law_instance&)>;

law_clause clause(std::string lhs, relation rel, std::string rhs, term_fn l, term_fn r) {
  return {std::move(lhs), std::move(rhs), rel, std::move(l), std::move(r)};
}

law basic(std::string id, std::string name, std::vector<std::string> vars,
          std::vector<std::string> preds, std::vector<law_clause> clauses) {
  law l;
  l.id = std::move(id);
  l.name = std::move(name);
  l.action_vars = std::move(vars);
  l.pred_vars = std::move(preds);
  l.clauses = std::move(clauses);
  return l;
}

// Shorthands for the law bodies below.
const denotation& a1(const law_instance& x) { return x.actions[0]; }
const denotation& a2(const law_instance& x) { return x.actions[1]; }
const denotation& a3(const law_instance& x) { return x.actions[2]; }

std::vector<law> make_laws() {
  using x_t = const law_instance&;
  constexpr auto eq = relation::equal;
  constexpr auto ref = relation::refines;
  const std::vector<std::string> two{"A1", "A2"};
  const std::vector<std::string> three{"A1", "A2", "A3"};
  std::vector<law> laws;

  laws.push_back(basic("L1", "guard-of-priority", two, {},
                  {clause("g(A1 // A2)", eq, "g(A1) | g(A2)",
                          [](x_t x) { return guard(priority(a1(x), a2(x))); },
                          [](x_t x) { return guard(a1(x)) | guard(a2(x)); })}));

  laws.push_back(basic("L2", "wp-of-priority", two, {"q"},
                  {clause("wp(A1 // A2, q)", eq, "wp(A1, q) & (g(A1) | wp(A2, q))",
                          [](x_t x) { return wp(priority(a1(x), a2(x)), x.preds[0]); },
                          [](x_t x) {
                            return wp(a1(x), x.preds[0]) & (guard(a1(x)) | wp(a2(x), x.preds[0]));
                          })}));

  laws.push_back(basic("L3", "assumption-split", {}, {"a", "b"},
                  {clause("[a & b]", eq, "[a] ; [b]",
                          [](x_t x) { return assume(x.preds[0] & x.preds[1]); },
                          [](x_t x) { return seq(assume(x.preds[0]), assume(x.preds[1])); }),
                   clause("[a & b]", eq, "[b] ; [a]",
                          [](x_t x) { return assume(x.preds[0] & x.preds[1]); },
                          [](x_t x) { return seq(assume(x.preds[1]), assume(x.preds[0])); })}));

  laws.push_back(
      basic("L4", "assumption-shift", {"X", "A", "Y"}, {"g"},
       {clause("[wp(A, g)] ; X ; A ; Y", eq, "X ; A ; [g] ; Y",
               [](x_t x) {
                 return seq(seq(seq(assume(wp(a2(x), x.preds[0])), a1(x)), a2(x)), a3(x));
               },
               [](x_t x) { return seq(seq(seq(a1(x), a2(x)), assume(x.preds[0])), a3(x)); })}));

  laws.push_back(
      basic("L5", "dep-normal-form", two, {},
       {clause("A1 \\\\ A2", eq, "g(A1) & g(A2) & wp(b(A1), g(A2)) -> b(A1) ; b(A2)",
               [](x_t x) { return dep(a1(x), a2(x)); },
               [](x_t x) {
                 const auto g = guard(a1(x)) & guard(a2(x)) & wp(body(a1(x)), guard(a2(x)));
                 return guarded(g, seq(body(a1(x)), body(a2(x))));
               })}));

  {
    law l = basic("L6", "dep-assoc", three, {},
          {clause("(A1 \\\\ A2) \\\\ A3", eq, "A1 \\\\ (A2 \\\\ A3)",
                  [](x_t x) { return dep(dep(a1(x), a2(x)), a3(x)); },
                  [](x_t x) { return dep(a1(x), dep(a2(x), a3(x))); })});
    l.side = side_condition_kind::cannot_disable;
    l.side_text = "g(A3) => wp(A1, g(A3))";
    l.side_fn = [](x_t x) { return cannot_disable(a1(x), a3(x)); };
    laws.push_back(std::move(l));
  }

  laws.push_back(basic("L7", "dep-over-seq", three, {},
                  {clause("A1 \\\\ (A2 ; A3)", eq, "(A1 \\\\ A2) ; A3",
                          [](x_t x) { return dep(a1(x), seq(a2(x), a3(x))); },
                          [](x_t x) { return seq(dep(a1(x), a2(x)), a3(x)); })}));

  {
    law l = basic("L8", "seq-over-dep", three, {},
          {clause("A1 ; (A2 \\\\ A3)", eq, "(A1 ; A2) \\\\ A3",
                  [](x_t x) { return seq(a1(x), dep(a2(x), a3(x))); },
                  [](x_t x) { return dep(seq(a1(x), a2(x)), a3(x)); })});
    l.side = side_condition_kind::commuting_assumption;
    l.side_text = "[g(A3)] ; b(A1) = b(A1) ; [g(A3)]";
    l.side_fn = [](x_t x) {
      const auto g3 = assume(guard(a3(x)));
      const auto b1 = body(a1(x));
      return equal(seq(g3, b1), seq(b1, g3));
    };
    laws.push_back(std::move(l));
  }

  laws.push_back(basic("L9", "dep-over-choice-left", three, {},
                  {clause("A1 \\\\ (A2 [] A3)", eq, "(A1 \\\\ A2) [] (A1 \\\\ A3)",
                          [](x_t x) { return dep(a1(x), choice(a2(x), a3(x))); },
                          [](x_t x) { return choice(dep(a1(x), a2(x)), dep(a1(x), a3(x))); })}));

  laws.push_back(basic("L10", "dep-over-choice-right", three, {},
                  {clause("(A1 [] A2) \\\\ A3", eq, "(A1 \\\\ A3) [] (A2 \\\\ A3)",
                          [](x_t x) { return dep(choice(a1(x), a2(x)), a3(x)); },
                          [](x_t x) { return choice(dep(a1(x), a3(x)), dep(a2(x), a3(x))); })}));

  {
    law l = basic("L11", "dep-over-priority-left", three, {},
          {clause("A1 \\\\ (A2 // A3)", eq, "(A1 \\\\ A2) // (A1 \\\\ A3)",
                  [](x_t x) { return dep(a1(x), priority(a2(x), a3(x))); },
                  [](x_t x) { return priority(dep(a1(x), a2(x)), dep(a1(x), a3(x))); })});
    l.side = side_condition_kind::cannot_enable;
    l.side_text = "!g(A2) => wp(A1, !g(A2))";
    l.side_fn = [](x_t x) { return cannot_enable(a1(x), a2(x)); };
    laws.push_back(std::move(l));
  }

  laws.push_back(basic("L12", "dep-over-priority-right", three, {},
                  {clause("(A1 // A2) \\\\ A3", eq, "(A1 \\\\ A3) // (A2 \\\\ A3)",
                          [](x_t x) { return dep(priority(a1(x), a2(x)), a3(x)); },
                          [](x_t x) { return priority(dep(a1(x), a3(x)), dep(a2(x), a3(x))); })}));

  laws.push_back(basic("L13", "seq-refined-by-dep", two, {},
                  {clause("A1 ; A2", ref, "A1 \\\\ A2",
                          [](x_t x) { return seq(a1(x), a2(x)); },
                          [](x_t x) { return dep(a1(x), a2(x)); })}));

  {
    law l = basic("L14", "dep-refines-seq", two, {},
          {clause("A1 \\\\ A2", ref, "A1 ; A2",
                  [](x_t x) { return dep(a1(x), a2(x)); },
                  [](x_t x) { return seq(a1(x), a2(x)); })});
    l.side = side_condition_kind::guard_implication;
    l.side_text = "g(A1) => g(A2)";
    l.side_fn = [](x_t x) { return guard(a1(x)).subset_of(guard(a2(x))); };
    laws.push_back(std::move(l));
  }

  {
    law l = basic("L15", "choice-seq-monotonic", {"A", "A'", "B"}, {},
          {clause("A [] B", ref, "A' [] B",
                  [](x_t x) { return choice(a1(x), a3(x)); },
                  [](x_t x) { return choice(a2(x), a3(x)); }),
           clause("B [] A", ref, "B [] A'",
                  [](x_t x) { return choice(a3(x), a1(x)); },
                  [](x_t x) { return choice(a3(x), a2(x)); }),
           clause("A ; B", ref, "A' ; B",
                  [](x_t x) { return seq(a1(x), a3(x)); },
                  [](x_t x) { return seq(a2(x), a3(x)); }),
           clause("B ; A", ref, "B ; A'",
                  [](x_t x) { return seq(a3(x), a1(x)); },
                  [](x_t x) { return seq(a3(x), a2(x)); })});
    l.premises = {{0, 1}};
    laws.push_back(std::move(l));
  }

  {
    law l = basic("L16", "dep-left-monotonic", three, {},
          {clause("A1 \\\\ A3", ref, "A2 \\\\ A3",
                  [](x_t x) { return dep(a1(x), a3(x)); },
                  [](x_t x) { return dep(a2(x), a3(x)); })});
    l.premises = {{0, 1}};
    laws.push_back(std::move(l));
  }

  {
    law l = basic("L17", "dep-right-monotonic", three, {},
          {clause("A3 \\\\ A1", ref, "A3 \\\\ A2",
                  [](x_t x) { return dep(a3(x), a1(x)); },
                  [](x_t x) { return dep(a3(x), a2(x)); })});
    l.premises = {{0, 1}};
    l.side = side_condition_kind::guard_implication;
    l.side_text = "g(A2) => g(A1)";
    l.side_fn = [](x_t x) { return guard(a2(x)).subset_of(guard(a1(x))); };
    laws.push_back(std::move(l));
  }

  laws.push_back(basic("L18", "choice-refined-by-priority", two, {},
                  {clause("A1 [] A2", ref, "A1 // A2",
                          [](x_t x) { return choice(a1(x), a2(x)); },
                          [](x_t x) { return priority(a1(x), a2(x)); })}));

  {
    law l = basic("L19", "dep-noncommutative", two, {},
          {clause("A1 \\\\ A2", eq, "A2 \\\\ A1",
                  [](x_t x) { return dep(a1(x), a2(x)); },
                  [](x_t x) { return dep(a2(x), a1(x)); })});
    l.existential = true;
    laws.push_back(std::move(l));
  }

  {
    law l = basic("L20", "seq-variants-coincide", two, {},
          {clause("A1 ;; A2", eq, "A1 ; A2",
                  [](x_t x) { return guarded_seq(a1(x), a2(x)); },
                  [](x_t x) { return seq(a1(x), a2(x)); })});
    l.side = side_condition_kind::body_determinism;
    l.side_text = "b(A1) deterministic";
    l.side_fn = [](x_t x) { return deterministic(body(a1(x))); };
    laws.push_back(std::move(l));
  }

  laws.push_back(
      basic("L21", "dep-assumption-decomposition", two, {},
       {clause("A1 \\\\ A2", eq, "[g(A1)] ; [g(A2)] ; b(A1) ; [g(A2)] ; b(A2)",
               [](x_t x) { return dep(a1(x), a2(x)); },
               [](x_t x) {
                 const auto g2 = assume(guard(a2(x)));
                 return seq(seq(seq(seq(assume(guard(a1(x))), g2), body(a1(x))), g2),
                            body(a2(x)));
               })}));

  return laws;
}

std::string state_name(const state_space& space, state_id s) {
  if (space.variable_count() == 1) {
    return space.value_name(s, 0);
  }
  return "(" + space.format(s) + ")";
}

std::string format_outcome(const outcome& o, const state_space& space) {
  if (o.is_abort()) {
    return "abort";
  }
  if (o.is_miracle()) {
    return "miracle";
  }
  std::string out = "{";
  for (std::size_t i = 0; i < o.successors().size(); ++i) {
    out += (i ? ", " : "") + state_name(space, o.successors()[i]);
  }
  return out + "}";
}

std::string format_predicate(const predicate& p) {
  std::string out = "{";
  bool first = true;
  for (auto s : p.members()) {
    out += (first ? "" : ", ") + state_name(*p.space(), s);
    first = false;
  }
  return out + "}";
}

/// All bindings of `n` predicate metavariables, as mask digits.
void for_each_pred_binding(const space_ptr& space, std::size_t n,
                           const std::function<void(const std::vector<predicate>&)>& f) {
  if (n == 0) {
    f({});
    return;
  }
  const auto states = space->size();
  if (states > 16) {
    throw limit_error("predicate metavariables need a space of at most 16 states");
  }
  const std::uint64_t per = std::uint64_t{1} << states;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    total *= per;
  }
  std::vector<predicate> binding;
  for (std::uint64_t code = 0; code < total; ++code) {
    binding.clear();
    auto c = code;
    for (std::size_t i = 0; i < n; ++i) {
      binding.push_back(predicate::from_mask(space, c % per));
      c /= per;
    }
    f(binding);
  }
}

void attach_oracle_post(const law& l, law_witness& w) {
  const auto& cl = l.clauses[w.clause];
  const auto lhs = cl.lhs_fn(w.instance);
  const auto rhs = cl.rhs_fn(w.instance);
  const auto* dl = std::get_if<denotation>(&lhs);
  const auto* dr = std::get_if<denotation>(&rhs);
  if (!dl || !dr || dl->space()->size() > default_oracle_cap) {
    return;
  }
  const auto v = wp_oracle_compare(*dl, *dr, cl.rel);
  if (v.witness) {
    w.post = v.witness->post;
  }
}

} // namespace

const std::vector<law>& builtin_laws() {
  static const std::vector<law> laws = make_laws();
  return laws;
}

const law& find_law(const std::string& id) {
  for (const auto& l : builtin_laws()) {
    if (l.id == id) {
      return l;
    }
  }
  throw validation_error("unknown law '" + id + "'");
}

// ------------------------------------------------------------------ checking

std::string to_string(verdict v) {
  switch (v) {
  case verdict::holds: return "holds";
  case verdict::counterexample: return "counterexample";
  case verdict::vacuous: return "vacuous";
  case verdict::no_witness: return "no_witness";
  }
  return "unknown";
}

std::string to_string(necessity n) {
  switch (n) {
  case necessity::yes: return "yes";
  case necessity::no: return "no";
  case necessity::not_applicable: return "n/a";
  }
  return "unknown";
}

std::optional<law_witness> evaluate(const law& l, const law_instance& inst) {
  for (std::size_t c = 0; c < l.clauses.size(); ++c) {
    const auto& cl = l.clauses[c];
    const auto lhs = cl.lhs_fn(inst);
    const auto rhs = cl.rhs_fn(inst);
    if (const auto* dl = std::get_if<denotation>(&lhs)) {
      const auto& dr = std::get<denotation>(rhs);
      const auto bad = cl.rel == relation::equal ? first_difference(*dl, dr)
                                                 : refinement_violation(*dl, dr);
      if (bad) {
        const auto& space = *dl->space();
        return law_witness{inst, c, *bad, std::nullopt, format_outcome(dl->at(*bad), space),
                           format_outcome(dr.at(*bad), space)};
      }
    } else {
      const auto& pl = std::get<predicate>(lhs);
      const auto& pr = std::get<predicate>(rhs);
      for (state_id s = 0; s < pl.universe(); ++s) {
        if (pl.contains(s) != pr.contains(s)) {
          return law_witness{inst, c, s, std::nullopt, pl.contains(s) ? "true" : "false",
                             pr.contains(s) ? "true" : "false"};
        }
      }
    }
  }
  return std::nullopt;
}

bool reverify(const law& l, const law_witness& w) {
  if (w.clause >= l.clauses.size()) {
    return false;
  }
  const auto& cl = l.clauses[w.clause];
  const auto lhs = cl.lhs_fn(w.instance);
  const auto rhs = cl.rhs_fn(w.instance);
  if (const auto* dl = std::get_if<denotation>(&lhs)) {
    const auto& dr = std::get<denotation>(rhs);
    const auto& a = dl->at(w.state);
    const auto& b = dr.at(w.state);
    if (cl.rel == relation::equal) {
      return a != b;
    }
    // Pointwise refinement failure at the recorded state.
    if (a.is_abort() || b.is_miracle()) {
      return false;
    }
    if (a.is_miracle() || b.is_abort()) {
      return true;
    }
    for (auto t : b.successors()) {
      if (!std::binary_search(a.successors().begin(), a.successors().end(), t)) {
        return true;
      }
    }
    return false;
  }
  return std::get<predicate>(lhs).contains(w.state) != std::get<predicate>(rhs).contains(w.state);
}

check_report check_law(const law& l, const space_ptr& space, const check_budget& budget) {
  const auto n = space->size();
  check_report r;
  r.law_id = l.id;
  r.law_name = l.name;
  r.states = n;

  bool exhaustive = false;
  switch (budget.mode) {
  case check_mode::exhaustive:
    exhaustive = true;
    break;
  case check_mode::random:
    exhaustive = l.arity() == 0;
    break;
  case check_mode::automatic:
    exhaustive = l.arity() == 0 || n == 1 || (n == 2 && l.arity() <= 2);
    break;
  }
  r.exhaustive = exhaustive;
  r.seed = exhaustive ? 0 : budget.seed;

  std::uint64_t tuples = 0;
  std::vector<denotation> pool;
  std::optional<action_generator> gen;
  std::mt19937_64 rng;
  if (exhaustive) {
    auto g = action_generator::exhaustive(space);
    tuples = 1;
    for (std::size_t i = 0; i < l.arity(); ++i) {
      if (tuples > 50'000'000 / g.size()) {
        throw limit_error("exhaustive check of " + l.id + " over " + std::to_string(n) +
                          " states is too large; use sampling");
      }
      tuples *= g.size();
    }
    pool.reserve(g.size());
    while (auto d = g.next()) {
      pool.push_back(std::move(*d));
    }
  } else {
    tuples = budget.samples;
    gen.emplace(action_generator::random(space, 0, 0));
    // Independent, reproducible stream per law.
    std::seed_seq seq{static_cast<std::uint32_t>(budget.seed),
                      static_cast<std::uint32_t>(budget.seed >> 32),
                      fnv1a(l.id)};
    rng.seed(seq);
  }

  law_instance inst;
  for (std::uint64_t t = 0; t < tuples; ++t) {
    inst.actions.clear();
    if (exhaustive) {
      auto code = t;
      for (std::size_t i = 0; i < l.arity(); ++i) {
        inst.actions.push_back(pool[code % pool.size()]);
        code /= pool.size();
      }
    } else {
      for (std::size_t i = 0; i < l.arity(); ++i) {
        inst.actions.push_back(gen->draw(rng));
      }
    }

    bool premise = true;
    for (const auto& [i, j] : l.premises) {
      premise = premise && refines(inst.actions[i], inst.actions[j]);
    }
    if (!premise) {
      continue;
    }
    const bool side = !l.side_fn || l.side_fn(inst);

    for_each_pred_binding(space, l.pred_vars.size(), [&](const std::vector<predicate>& preds) {
      inst.preds = preds;
      ++r.instances;
      if (side) {
        ++r.applicable;
        if (!r.witness) {
          r.witness = evaluate(l, inst);
        }
      } else if (!r.necessity_witness) {
        r.necessity_witness = evaluate(l, inst);
      }
    });
  }

  if (l.existential) {
    r.result = r.witness ? verdict::holds : verdict::no_witness;
  } else if (r.applicable == 0) {
    r.result = verdict::vacuous;
  } else {
    r.result = r.witness ? verdict::counterexample : verdict::holds;
  }
  if (l.conditional()) {
    r.necessity_result = r.necessity_witness ? necessity::yes : necessity::no;
  }
  if (r.witness) {
    attach_oracle_post(l, *r.witness);
  }
  if (r.necessity_witness) {
    attach_oracle_post(l, *r.necessity_witness);
  }
  return r;
}

std::vector<check_report> check_all(const space_ptr& space, const check_budget& budget) {
  std::vector<check_report> out;
  for (const auto& l : builtin_laws()) {
    out.push_back(check_law(l, space, budget));
  }
  return out;
}

bool all_passed(const std::vector<check_report>& reports) {
  for (const auto& r : reports) {
    if (r.failed()) {
      return false;
    }
  }
  return true;
}

// ------------------------------------------------------------- serialization

std::string format_denotation(const denotation& d) {
  const auto& space = *d.space();
  std::string out = "[";
  for (state_id s = 0; s < d.size(); ++s) {
    out += (s ? ", " : "") + state_name(space, s) + ": " + format_outcome(d.at(s), space);
  }
  return out + "]";
}

namespace {

void human_witness(std::ostream& os, const law& l, const law_witness& w) {
  for (std::size_t i = 0; i < w.instance.actions.size(); ++i) {
    os << "      " << l.action_vars[i] << " = " << format_denotation(w.instance.actions[i])
       << '\n';
  }
  for (std::size_t i = 0; i < w.instance.preds.size(); ++i) {
    os << "      " << l.pred_vars[i] << " = " << format_predicate(w.instance.preds[i]) << '\n';
  }
  const auto& cl = l.clauses[w.clause];
  const auto& space = w.instance.actions.empty() ? *w.instance.preds.front().space()
                                                 : *w.instance.actions.front().space();
  os << "      at " << state_name(space, w.state) << ": " << cl.lhs << " gives " << w.lhs_at_state
     << ", " << cl.rhs << " gives " << w.rhs_at_state << '\n';
  if (w.post) {
    os << "      separating postcondition q = " << format_predicate(*w.post) << '\n';
  }
}

nlohmann::ordered_json json_witness(const law& l, const law_witness& w) {
  nlohmann::ordered_json j;
  const auto& cl = l.clauses[w.clause];
  j["clause"] = cl.lhs + (cl.rel == relation::equal ? " = " : " ⊑ ") + cl.rhs;
  nlohmann::ordered_json acts = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < w.instance.actions.size(); ++i) {
    acts[l.action_vars[i]] = format_denotation(w.instance.actions[i]);
  }
  j["actions"] = acts;
  if (!w.instance.preds.empty()) {
    nlohmann::ordered_json preds = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < w.instance.preds.size(); ++i) {
      preds[l.pred_vars[i]] = format_predicate(w.instance.preds[i]);
    }
    j["preds"] = preds;
  }
  const auto& space = w.instance.actions.empty() ? *w.instance.preds.front().space()
                                                 : *w.instance.actions.front().space();
  j["state"] = state_name(space, w.state);
  j["lhs"] = w.lhs_at_state;
  j["rhs"] = w.rhs_at_state;
  if (w.post) {
    j["post"] = format_predicate(*w.post);
  }
  return j;
}

} // namespace

std::string format_human(const check_report& r) {
  const auto& l = find_law(r.law_id);
  std::ostringstream os;
  os << l.id << ' ' << l.name << ": " << l.statement() << '\n';
  os << "  verdict: " << to_string(r.result) << "  (" << r.instances << " instances";
  if (l.conditional()) {
    os << ", " << r.applicable << " under condition";
  }
  os << "; " << (r.exhaustive ? "exhaustive" : "sampled, seed " + std::to_string(r.seed))
     << ", " << r.states << (r.states == 1 ? " state)" : " states)") << '\n';
  if (r.witness) {
    os << (l.existential ? "    witness:\n" : "    counterexample:\n");
    human_witness(os, l, *r.witness);
  }
  if (l.conditional()) {
    os << "  necessity: " << to_string(r.necessity_result)
       << (r.necessity_witness ? "  (fails without the condition)" : "") << '\n';
    if (r.necessity_witness) {
      human_witness(os, l, *r.necessity_witness);
    }
  }
  return os.str();
}

std::string format_json(const check_report& r) {
  const auto& l = find_law(r.law_id);
  nlohmann::ordered_json j;
  j["law"] = l.id;
  j["name"] = l.name;
  j["statement"] = l.statement();
  j["side_condition"] = to_string(l.side);
  j["states"] = r.states;
  j["mode"] = r.exhaustive ? "exhaustive" : "sampled";
  if (!r.exhaustive) {
    j["seed"] = r.seed;
  }
  j["instances"] = r.instances;
  j["applicable"] = r.applicable;
  j["verdict"] = to_string(r.result);
  j["necessity"] = to_string(r.necessity_result);
  if (r.witness) {
    j["witness"] = json_witness(l, *r.witness);
  }
  if (r.necessity_witness) {
    j["necessity_witness"] = json_witness(l, *r.necessity_witness);
  }
  return j.dump();
}

} // namespace acta
