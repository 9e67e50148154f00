#include "acta/dsl.hpp"

#include <optional>
#include <utility>

namespace acta {

namespace {

bool later(const source_span& a, const source_span& b) {
  return a.line != b.line ? a.line > b.line : a.column > b.column;
}

constexpr int max_depth = 400;

class nesting {
public:
  nesting(int& depth, const source_span& span) : depth_(depth) {
    if (++depth_ > max_depth) {
      --depth_;
      throw parse_error(span, "expression nested too deeply");
    }
  }
  ~nesting() { --depth_; }
  nesting(const nesting&) = delete;
  nesting& operator=(const nesting&) = delete;

private:
  int& depth_;
};

class parser {
public:
  parser(std::string_view text, const std::string& file) : toks_(lex(text, file)), file_(file) {}

  system_model system() {
    system_model m;
    m.file = file_;
    expect(token_kind::kw_system, "expected 'system' at start of description");
    m.name = name_of(expect(token_kind::identifier, "expected system name"));

    bool have_init = false;
    while (!at(token_kind::end)) {
      const token& t = peek();
      switch (t.kind) {
      case token_kind::kw_export:
      case token_kind::kw_import:
      case token_kind::kw_var:
        var_decls(m);
        break;
      case token_kind::kw_init:
        if (have_init) {
          throw parse_error(t.span, "duplicate init clause", t.text);
        }
        have_init = true;
        init_clause(m);
        break;
      case token_kind::kw_action:
        m.actions.push_back(action_declaration());
        break;
      case token_kind::kw_run:
        if (m.run) {
          throw parse_error(t.span, "duplicate run clause", t.text);
        }
        next();
        m.run = action();
        break;
      default:
        throw unexpected("expected declaration ('var', 'init', 'action' or 'run')");
      }
    }
    if (m.actions.empty()) {
      throw parse_error(peek().span, "at least one action required");
    }
    return m;
  }

  action_ptr whole_action() {
    auto a = action();
    expect(token_kind::end, "unexpected input after action");
    return a;
  }

  pred_ptr whole_predicate() {
    auto p = pred();
    expect(token_kind::end, "unexpected input after predicate");
    return p;
  }

private:
  // ------------------------------------------------------------- utilities

  const token& peek(std::size_t ahead = 0) const {
    const std::size_t i = pos_ + ahead;
    return i < toks_.size() ? toks_[i] : toks_.back();
  }
  bool at(token_kind k) const { return peek().kind == k; }
  const token& next() {
    const token& t = peek();
    if (pos_ < toks_.size() - 1) {
      ++pos_;
    }
    return t;
  }
  bool accept(token_kind k) {
    if (at(k)) {
      next();
      return true;
    }
    return false;
  }
  // A failed speculative parse that got further than the real error
  // usually explains the problem better.
  parse_error unexpected(const std::string& what) const {
    const token& t = peek();
    if (furthest_ && later(furthest_->span(), t.span)) {
      return *furthest_;
    }
    return parse_error(t.span, what + ", found " + std::string(token_name(t.kind)), t.text);
  }
  void note_failure(const parse_error& e) {
    if (!furthest_ || later(e.span(), furthest_->span())) {
      furthest_ = e;
    }
  }
  const token& expect(token_kind k, const std::string& what) {
    if (!at(k)) {
      throw unexpected(what);
    }
    return next();
  }
  static name_ref name_of(const token& t) { return {t.text, t.span}; }

  /// IDENT or IDENT '[' IDENT ']'
  name_ref name(const std::string& what) {
    const token& id = expect(token_kind::identifier, what);
    name_ref n = name_of(id);
    if (accept(token_kind::lbracket)) {
      const token& idx = expect(token_kind::identifier, "expected index");
      expect(token_kind::rbracket, "expected ']' after index");
      n.text = indexed_name(n.text, idx.text);
    }
    return n;
  }

  std::vector<name_ref> name_list(const std::string& what) {
    std::vector<name_ref> out{name(what)};
    while (accept(token_kind::comma)) {
      out.push_back(name(what));
    }
    return out;
  }

  // ---------------------------------------------------------- declarations

  void var_decls(system_model& m) {
    visibility vis = visibility::local;
    if (accept(token_kind::kw_export)) {
      vis = visibility::exported;
    } else if (accept(token_kind::kw_import)) {
      vis = visibility::imported;
    }
    expect(token_kind::kw_var, "expected 'var'");
    do {
      var_decl d;
      d.vis = vis;
      d.span = peek().span;
      d.name = name_of(expect(token_kind::identifier, "expected variable name"));
      if (accept(token_kind::lbracket)) {
        do {
          d.indices.push_back(name_of(expect(token_kind::identifier, "expected index")));
        } while (accept(token_kind::comma));
        expect(token_kind::rbracket, "expected ']' after indices");
      }
      expect(token_kind::colon, "expected ':' before domain");
      expect(token_kind::lbrace, "expected '{' to open domain");
      do {
        d.domain.push_back(name_of(expect(token_kind::identifier, "expected domain value")));
      } while (accept(token_kind::comma));
      expect(token_kind::rbrace, "expected '}' to close domain");
      m.variables.push_back(std::move(d));
    } while (accept(token_kind::comma));
  }

  void init_clause(system_model& m) {
    expect(token_kind::kw_init, "expected 'init'");
    do {
      init_assignment ia;
      ia.span = peek().span;
      ia.assign.targets = name_list("expected variable name");
      expect(token_kind::becomes, "expected ':=' in init");
      ia.assign.values = name_list("expected value");
      m.init.push_back(std::move(ia));
    } while (accept(token_kind::seq));
  }

  action_decl action_declaration() {
    action_decl d;
    d.span = expect(token_kind::kw_action, "expected 'action'").span;
    d.label = name_of(expect(token_kind::identifier, "expected action label"));
    expect(token_kind::colon, "expected ':' after action label");
    d.body = action();
    return d;
  }

  // --------------------------------------------------------------- actions
  //
  // loosest to tightest: [] , // , ; and ;; , \\ , prefix guard

  action_ptr action() {
    auto lhs = priority_level();
    while (at(token_kind::choice)) {
      const auto span = next().span;
      lhs = make_binary(action_op::choice, lhs, priority_level(), span);
    }
    return lhs;
  }

  action_ptr priority_level() {
    auto lhs = seq_level();
    while (at(token_kind::priority)) {
      const auto span = next().span;
      lhs = make_binary(action_op::priority, lhs, seq_level(), span);
    }
    return lhs;
  }

  action_ptr seq_level() {
    auto lhs = dep_level();
    while (at(token_kind::seq) || at(token_kind::guarded_seq)) {
      const token& t = next();
      const auto op = t.kind == token_kind::seq ? action_op::seq : action_op::guarded_seq;
      lhs = make_binary(op, lhs, dep_level(), t.span);
    }
    return lhs;
  }

  action_ptr dep_level() {
    auto lhs = unary();
    while (at(token_kind::dep)) {
      const auto span = next().span;
      lhs = make_binary(action_op::dep, lhs, unary(), span);
    }
    return lhs;
  }

  static bool starts_predicate(token_kind k) {
    return k == token_kind::identifier || k == token_kind::bang || k == token_kind::lparen ||
           k == token_kind::kw_true || k == token_kind::kw_false;
  }

  // A guard is a predicate followed by '->'. Predicates and actions share
  // a prefix (identifiers, parentheses), so try the predicate first and
  // backtrack when no arrow follows.
  action_ptr unary() {
    const nesting guard(depth_, peek().span);

    if (starts_predicate(peek().kind)) {
      const std::size_t saved = pos_;
      const source_span span = peek().span;
      pred_ptr p;
      try {
        p = pred();
      } catch (const parse_error& e) {
        note_failure(e);
      }
      if (p && accept(token_kind::arrow)) {
        return make_guarded(p, unary(), span);
      }
      pos_ = saved;
    }
    return atom();
  }

  action_ptr atom() {
    const token& t = peek();
    switch (t.kind) {
    case token_kind::kw_skip:
      next();
      return make_skip(t.span);
    case token_kind::kw_abort:
      next();
      return make_abort(t.span);
    case token_kind::lbracket: {
      next();
      auto p = pred();
      expect(token_kind::rbracket, "expected ']' to close assumption");
      return make_assume(p, t.span);
    }
    case token_kind::lparen: {
      next();
      auto a = action();
      expect(token_kind::rparen, "expected ')'");
      return a;
    }
    case token_kind::identifier: {
      const source_span span = t.span;
      name_ref first = name("expected name");
      if (at(token_kind::becomes) || at(token_kind::comma)) {
        assign_node a;
        a.targets.push_back(std::move(first));
        while (accept(token_kind::comma)) {
          a.targets.push_back(name("expected variable name"));
        }
        expect(token_kind::becomes, "expected ':=' in assignment");
        a.values = name_list("expected value");
        return make_assign(std::move(a), span);
      }
      if (first.text.find('[') != std::string::npos) {
        throw unexpected("expected ':=' after '" + first.text + "'");
      }
      return make_ref(std::move(first.text), span);
    }
    default:
      throw unexpected("expected action");
    }
  }

  // ------------------------------------------------------------ predicates
  //
  // loosest to tightest: => (right-assoc), |, &, !

  pred_ptr pred() {
    const source_span span = peek().span;
    auto lhs = pred_or();
    if (accept(token_kind::implies)) {
      return make_pred_binary(pred_op::implies, lhs, pred(), span);
    }
    return lhs;
  }

  pred_ptr pred_or() {
    auto lhs = pred_and();
    while (at(token_kind::bar)) {
      const auto span = next().span;
      lhs = make_pred_binary(pred_op::disj, lhs, pred_and(), span);
    }
    return lhs;
  }

  pred_ptr pred_and() {
    auto lhs = pred_unary();
    while (at(token_kind::amp)) {
      const auto span = next().span;
      lhs = make_pred_binary(pred_op::conj, lhs, pred_unary(), span);
    }
    return lhs;
  }

  pred_ptr pred_unary() {
    const nesting guard(depth_, peek().span);

    const token& t = peek();
    switch (t.kind) {
    case token_kind::bang:
      next();
      return make_not(pred_unary(), t.span);
    case token_kind::kw_true:
      next();
      return make_pred(pred_const{true}, t.span);
    case token_kind::kw_false:
      next();
      return make_pred(pred_const{false}, t.span);
    case token_kind::lparen: {
      next();
      auto p = pred();
      expect(token_kind::rparen, "expected ')'");
      return p;
    }
    case token_kind::identifier: {
      name_ref lhs = name("expected name");
      if (accept(token_kind::kw_in)) {
        expect(token_kind::lbrace, "expected '{' after 'in'");
        pred_member m{lhs, {}};
        do {
          m.values.push_back(name_of(expect(token_kind::identifier, "expected value")));
        } while (accept(token_kind::comma));
        expect(token_kind::rbrace, "expected '}'");
        return std::make_shared<const pred_expr>(pred_expr{std::move(m), t.span});
      }
      bool negated = false;
      if (accept(token_kind::neq)) {
        negated = true;
      } else {
        expect(token_kind::eq, "expected '=', '!=' or 'in' after '" + lhs.text + "'");
      }
      name_ref rhs = name("expected variable or value");
      return std::make_shared<const pred_expr>(
          pred_expr{pred_compare{std::move(lhs), std::move(rhs), negated}, t.span});
    }
    default:
      throw unexpected("expected predicate");
    }
  }

  std::vector<token> toks_;
  std::string file_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::optional<parse_error> furthest_;
};

} // namespace

system_model parse_system_syntax(std::string_view text, const std::string& file) {
  return parser(text, file).system();
}

action_ptr parse_action_syntax(std::string_view text, const std::string& file) {
  return parser(text, file).whole_action();
}

pred_ptr parse_predicate_syntax(std::string_view text, const std::string& file) {
  return parser(text, file).whole_predicate();
}

action_ptr parse_action(std::string_view text, const space_ptr& space, const label_table* labels) {
  auto a = parse_action_syntax(text);
  resolve(*a, space, labels);
  return a;
}

pred_ptr parse_predicate(std::string_view text, const space_ptr& space) {
  auto p = parse_predicate_syntax(text);
  denote_predicate(*p, space);
  return p;
}

} // namespace acta
