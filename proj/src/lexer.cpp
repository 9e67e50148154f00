#include "acta/dsl.hpp"

#include <array>
#include <utility>

namespace acta {

namespace {

bool is_word_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

constexpr std::array<std::pair<std::string_view, token_kind>, 12> keywords{{
    {"system", token_kind::kw_system},
    {"var", token_kind::kw_var},
    {"init", token_kind::kw_init},
    {"action", token_kind::kw_action},
    {"run", token_kind::kw_run},
    {"export", token_kind::kw_export},
    {"import", token_kind::kw_import},
    {"true", token_kind::kw_true},
    {"false", token_kind::kw_false},
    {"in", token_kind::kw_in},
    {"skip", token_kind::kw_skip},
    {"abort", token_kind::kw_abort},
}};

std::string printable(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) {
    return std::string(1, c);
  }
  static constexpr char hex[] = "0123456789abcdef";
  return std::string("\\x") + hex[u >> 4] + hex[u & 0xf];
}

} // namespace

std::string_view token_name(token_kind k) {
  switch (k) {
  case token_kind::identifier: return "identifier";
  case token_kind::kw_system: return "'system'";
  case token_kind::kw_var: return "'var'";
  case token_kind::kw_init: return "'init'";
  case token_kind::kw_action: return "'action'";
  case token_kind::kw_run: return "'run'";
  case token_kind::kw_export: return "'export'";
  case token_kind::kw_import: return "'import'";
  case token_kind::kw_true: return "'true'";
  case token_kind::kw_false: return "'false'";
  case token_kind::kw_in: return "'in'";
  case token_kind::kw_skip: return "'skip'";
  case token_kind::kw_abort: return "'abort'";
  case token_kind::lbrace: return "'{'";
  case token_kind::rbrace: return "'}'";
  case token_kind::lparen: return "'('";
  case token_kind::rparen: return "')'";
  case token_kind::lbracket: return "'['";
  case token_kind::rbracket: return "']'";
  case token_kind::choice: return "'[]'";
  case token_kind::comma: return "','";
  case token_kind::colon: return "':'";
  case token_kind::becomes: return "':='";
  case token_kind::eq: return "'='";
  case token_kind::neq: return "'!='";
  case token_kind::bang: return "'!'";
  case token_kind::amp: return "'&'";
  case token_kind::bar: return "'|'";
  case token_kind::implies: return "'=>'";
  case token_kind::arrow: return "'->'";
  case token_kind::priority: return "'//'";
  case token_kind::dep: return "'\\\\'";
  case token_kind::seq: return "';'";
  case token_kind::guarded_seq: return "';;'";
  case token_kind::end: return "end of input";
  }
  return "token";
}

std::vector<token> lex(std::string_view text, const std::string& file) {
  std::vector<token> out;
  std::size_t i = 0;
  std::size_t line = 1;
  std::size_t col = 1;

  auto span_here = [&](std::size_t len) { return source_span{file, line, col, len}; };
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto emit = [&](token_kind k, std::size_t len) {
    out.push_back({k, std::string(text.substr(i, len)), span_here(len)});
    advance(len);
  };
  auto next_is = [&](char c) { return i + 1 < text.size() && text[i + 1] == c; };

  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') {
        advance(1);
      }
      continue;
    }
    if (is_word_char(c)) {
      std::size_t j = i;
      while (j < text.size() && is_word_char(text[j])) {
        ++j;
      }
      const auto word = text.substr(i, j - i);
      token_kind kind = token_kind::identifier;
      for (const auto& [kw, k] : keywords) {
        if (word == kw) {
          kind = k;
        }
      }
      emit(kind, j - i);
      continue;
    }
    switch (c) {
    case '{': emit(token_kind::lbrace, 1); continue;
    case '}': emit(token_kind::rbrace, 1); continue;
    case '(': emit(token_kind::lparen, 1); continue;
    case ')': emit(token_kind::rparen, 1); continue;
    case ']': emit(token_kind::rbracket, 1); continue;
    case ',': emit(token_kind::comma, 1); continue;
    case '&': emit(token_kind::amp, 1); continue;
    case '|': emit(token_kind::bar, 1); continue;
    case '[':
      emit(next_is(']') ? token_kind::choice : token_kind::lbracket, next_is(']') ? 2 : 1);
      continue;
    case ':':
      emit(next_is('=') ? token_kind::becomes : token_kind::colon, next_is('=') ? 2 : 1);
      continue;
    case '=':
      emit(next_is('>') ? token_kind::implies : token_kind::eq, next_is('>') ? 2 : 1);
      continue;
    case '!':
      emit(next_is('=') ? token_kind::neq : token_kind::bang, next_is('=') ? 2 : 1);
      continue;
    case ';':
      emit(next_is(';') ? token_kind::guarded_seq : token_kind::seq, next_is(';') ? 2 : 1);
      continue;
    case '-':
      if (next_is('>')) {
        emit(token_kind::arrow, 2);
        continue;
      }
      break;
    case '/':
      if (next_is('/')) {
        emit(token_kind::priority, 2);
        continue;
      }
      break;
    case '\\':
      if (next_is('\\')) {
        emit(token_kind::dep, 2);
        continue;
      }
      break;
    default:
      break;
    }
    throw parse_error(span_here(1), "unexpected character", printable(c));
  }
  out.push_back({token_kind::end, "", source_span{file, line, col, 0}});
  return out;
}

} // namespace acta
