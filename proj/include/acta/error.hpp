#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace acta {

/// Location of a token or construct inside a source text. Lines and columns
/// are 1-based; a default-constructed span means "no source location".
struct source_span {
  std::string file;
  std::size_t line = 0;
  std::size_t column = 0;
  std::size_t length = 0;

  bool known() const { return line != 0; }
  std::string to_string() const;
};

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Lexical or syntactic failure. Always carries a span.
class parse_error : public error {
public:
  parse_error(source_span span, std::string message, std::string token = {});

  const source_span& span() const { return span_; }
  const std::string& message() const { return message_; }
  const std::string& token() const { return token_; }

private:
  source_span span_;
  std::string message_;
  std::string token_;
};

/// Scoping, typing or domain failure found after parsing.
class validation_error : public error {
public:
  validation_error(source_span span, std::string message);
  explicit validation_error(std::string message);

  const source_span& span() const { return span_; }
  const std::string& message() const { return message_; }

private:
  source_span span_;
  std::string message_;
};

/// Two operands built over different state spaces.
class space_mismatch : public error {
public:
  space_mismatch() : error("operands belong to different state spaces") {}
};

/// A scripted schedule named an action that is not selectable.
class scheduling_error : public error {
public:
  using error::error;
};

/// A configured size limit (oracle cap, exploration cap) was exceeded.
class limit_error : public error {
public:
  using error::error;
};

} // namespace acta
