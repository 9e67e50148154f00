#pragma once

// Helpers shared by the unit tests and the acceptance binary: bundled model
// paths, a random AST generator, and an independent wp oracle that works on
// postcondition bitmasks rather than on outcomes.

#include "acta/ast.hpp"
#include "acta/semantics.hpp"
#include "acta/space.hpp"

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace support {

inline std::string model_path(const std::string& name) {
  return std::string(ACTA_MODELS_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline const std::vector<std::string>& bundled_models() {
  static const std::vector<std::string> names{"crossing1.as", "crossing2.as", "bank.as",
                                              "train.as", "train_exit.as"};
  return names;
}

// ------------------------------------------------------------ AST generator

class ast_generator {
public:
  struct vocabulary {
    std::vector<std::string> names{"x", "y", "loc", "at[L]", "token"};
    std::vector<std::string> values{"a", "b", "null", "C", "v1"};
    std::vector<std::string> targets{"x", "y", "at[L]"};
    std::vector<std::string> labels{"A1", "A2"};
  };

  explicit ast_generator(std::uint64_t seed) : ast_generator(seed, vocabulary()) {}
  ast_generator(std::uint64_t seed, vocabulary vocab) : rng_(seed), vocab_(std::move(vocab)) {}

  acta::pred_ptr pred(int depth) {
    const auto pick = depth <= 0 ? below(4) : below(8);
    switch (pick) {
    case 0: return acta::make_pred(acta::pred_const{below(2) == 0});
    case 1:
    case 2: return acta::make_compare(name(), value(), below(3) == 0);
    case 3: {
      std::vector<std::string> vals;
      const auto n = 1 + below(3);
      for (std::size_t i = 0; i < n; ++i) {
        vals.push_back(value());
      }
      return acta::make_member(name(), vals);
    }
    case 4: return acta::make_not(pred(depth - 1));
    default: {
      const acta::pred_op ops[] = {acta::pred_op::conj, acta::pred_op::disj,
                                   acta::pred_op::implies};
      return acta::make_pred_binary(ops[below(3)], pred(depth - 1), pred(depth - 1));
    }
    }
  }

  acta::action_ptr action(int depth) {
    const auto pick = depth <= 0 ? below(5) : below(11);
    switch (pick) {
    case 0: return acta::make_abort();
    case 1: return acta::make_skip();
    case 2: {
      acta::assign_node a;
      const auto n = 1 + below(vocab_.targets.size());
      for (std::size_t i = 0; i < n; ++i) {
        a.targets.push_back({vocab_.targets[i], {}});
        a.values.push_back({below(4) == 0 ? name() : value(), {}});
      }
      return acta::make_assign(a);
    }
    case 3:
      if (vocab_.labels.empty()) {
        return acta::make_skip();
      }
      return acta::make_ref(vocab_.labels[below(vocab_.labels.size())]);
    case 4: return acta::make_assume(pred(1));
    case 5: return acta::make_guarded(pred(2), action(depth - 1));
    default: {
      const acta::action_op ops[] = {acta::action_op::choice, acta::action_op::priority,
                                     acta::action_op::seq, acta::action_op::guarded_seq,
                                     acta::action_op::dep};
      return acta::make_binary(ops[below(5)], action(depth - 1), action(depth - 1));
    }
    }
  }

private:
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }
  std::string name() { return vocab_.names[below(vocab_.names.size())]; }
  std::string value() { return vocab_.values[below(vocab_.values.size())]; }

  std::mt19937_64 rng_;
  vocabulary vocab_;
};

// ------------------------------------------------------------ wp oracle
//
// An action over n <= 6 states is represented as its predicate transformer:
// the table of wp(A, q) for every postcondition bitmask q. The combinators
// below follow the textbook wp rules and never look at outcomes, so they
// check the outcome-based combinators of the library independently.

using mask = std::uint64_t;

struct transformer {
  std::size_t n = 0;
  std::vector<mask> wp;  // indexed by postcondition mask

  mask full() const { return (mask{1} << n) - 1; }
  mask at(mask q) const { return wp[q]; }
  mask guard() const { return full() & ~wp[0]; }
  bool operator==(const transformer&) const = default;
};

inline transformer tabulate(std::size_t n, auto&& f) {
  transformer t{n, std::vector<mask>(std::size_t{1} << n)};
  for (mask q = 0; q < t.wp.size(); ++q) {
    t.wp[q] = f(q) & t.full();
  }
  return t;
}

// Read off a transformer from a library denotation using only the defining
// property of wp on single outcomes.
inline transformer from_denotation(const acta::denotation& d) {
  const auto n = static_cast<std::size_t>(d.size());
  return tabulate(n, [&](mask q) {
    mask out = 0;
    for (std::size_t s = 0; s < n; ++s) {
      const auto& o = d.at(s);
      bool ok = o.is_miracle();
      if (o.is_enabled()) {
        ok = true;
        for (auto t : o.successors()) {
          ok = ok && ((q >> t) & 1U);
        }
      }
      out |= mask{ok} << s;
    }
    return out;
  });
}

inline transformer o_abort(std::size_t n) { return tabulate(n, [](mask) { return mask{0}; }); }
inline transformer o_skip(std::size_t n) { return tabulate(n, [](mask q) { return q; }); }
inline transformer o_assume(std::size_t n, mask p) {
  return tabulate(n, [p](mask q) { return p & q; });
}
inline transformer o_guarded(mask p, const transformer& a) {
  return tabulate(a.n, [&](mask q) { return ~p | a.at(q); });
}
inline transformer o_choice(const transformer& a, const transformer& b) {
  return tabulate(a.n, [&](mask q) { return a.at(q) & b.at(q); });
}
inline transformer o_seq(const transformer& a, const transformer& b) {
  return tabulate(a.n, [&](mask q) { return a.at(b.at(q)); });
}
inline transformer o_priority(const transformer& a, const transformer& b) {
  return tabulate(a.n, [&](mask q) { return a.at(q) & (a.guard() | b.at(q)); });
}
inline transformer o_dep(const transformer& a, const transformer& b) {
  return o_guarded(a.guard() & b.guard(), o_seq(a, b));
}
// Canonical body: wp(b(A), q) = wp(A, q) & (g(A) | q).
inline transformer o_body(const transformer& a) {
  return tabulate(a.n, [&](mask q) { return a.at(q) & (a.guard() | q); });
}
inline transformer o_guarded_seq(const transformer& a, const transformer& b) {
  const auto ba = o_body(a);
  const auto bb = o_body(b);
  return o_guarded(a.guard() & ba.at(b.guard()), o_seq(ba, bb));
}
// Assignment s := target(s) as a transformer.
inline transformer o_update(std::size_t n, const std::vector<std::size_t>& target) {
  return tabulate(n, [&](mask q) {
    mask out = 0;
    for (std::size_t s = 0; s < n; ++s) {
      out |= mask{(q >> target[s]) & 1U} << s;
    }
    return out;
  });
}

// Equality and refinement quantified over every postcondition.
inline bool o_equal(const transformer& a, const transformer& b) { return a.wp == b.wp; }
inline bool o_refines(const transformer& a, const transformer& b) {
  for (mask q = 0; q < a.wp.size(); ++q) {
    if ((a.at(q) & ~b.at(q)) != 0) {
      return false;
    }
  }
  return true;
}

inline acta::predicate to_predicate(const acta::space_ptr& space, mask m) {
  return acta::predicate::from_mask(space, m);
}

inline mask to_mask(const acta::predicate& p) {
  mask m = 0;
  for (auto s : p.members()) {
    m |= mask{1} << s;
  }
  return m;
}

} // namespace support
