#pragma once

#include "acta/ast.hpp"
#include "acta/error.hpp"
#include "acta/predicate.hpp"
#include "acta/semantics.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace acta {

enum class token_kind {
  identifier,
  kw_system,
  kw_var,
  kw_init,
  kw_action,
  kw_run,
  kw_export,
  kw_import,
  kw_true,
  kw_false,
  kw_in,
  kw_skip,
  kw_abort,
  lbrace,
  rbrace,
  lparen,
  rparen,
  lbracket,
  rbracket,
  choice,       // []
  comma,
  colon,
  becomes,      // :=
  eq,
  neq,
  bang,
  amp,
  bar,
  implies,      // =>
  arrow,        // ->
  priority,     // //
  dep,          // \\ (two backslashes)
  seq,          // ;
  guarded_seq,  // ;;
  end
};

struct token {
  token_kind kind;
  std::string text;
  source_span span;
};

std::string_view token_name(token_kind k);

/// Tokenize; `#` starts a comment running to the end of the line.
std::vector<token> lex(std::string_view text, const std::string& file = {});

// Syntax only: no name resolution.
system_model parse_system_syntax(std::string_view text, const std::string& file = {});
action_ptr parse_action_syntax(std::string_view text, const std::string& file = {});
pred_ptr parse_predicate_syntax(std::string_view text, const std::string& file = {});

/// Parse and check every well-formedness rule of a system description.
system_model parse_system(std::string_view text, const std::string& file = {});

/// Parse an action against a space; names resolve to variables of `space` or
/// to labels in `labels`.
action_ptr parse_action(std::string_view text, const space_ptr& space,
                        const label_table* labels = nullptr);
pred_ptr parse_predicate(std::string_view text, const space_ptr& space);

std::string print(const pred_expr& p);
std::string print(const action_expr& a);
std::string print(const system_model& m);

} // namespace acta
