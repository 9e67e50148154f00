#include "acta/space.hpp"

#include "acta/error.hpp"

#include <limits>
#include <set>

namespace acta {

std::string source_span::to_string() const {
  std::string out = file.empty() ? std::string("<input>") : file;
  if (known()) {
    out += ':' + std::to_string(line) + ':' + std::to_string(column);
  }
  return out;
}

parse_error::parse_error(source_span span, std::string message, std::string token)
    : error(span.to_string() + ": error: " + message +
            (token.empty() ? std::string() : " (at '" + token + "')")),
      span_(std::move(span)), message_(std::move(message)), token_(std::move(token)) {}

validation_error::validation_error(source_span span, std::string message)
    : error(span.known() ? span.to_string() + ": error: " + message : "error: " + message),
      span_(std::move(span)), message_(std::move(message)) {}

validation_error::validation_error(std::string message)
    : validation_error(source_span{}, std::move(message)) {}

state_space::state_space(std::vector<variable> vars) : vars_(std::move(vars)) {
  std::set<std::string_view> names;
  for (const auto& v : vars_) {
    if (!names.insert(v.name).second) {
      throw validation_error("duplicate variable '" + v.name + "'");
    }
    if (v.domain.empty()) {
      throw validation_error("variable '" + v.name + "' has an empty domain");
    }
    std::set<std::string_view> values;
    for (const auto& val : v.domain) {
      if (!values.insert(val).second) {
        throw validation_error("value '" + val + "' repeated in domain of '" + v.name + "'");
      }
    }
  }
  stride_.assign(vars_.size(), 1);
  size_ = 1;
  for (std::size_t i = vars_.size(); i-- > 0;) {
    stride_[i] = size_;
    const auto d = static_cast<state_id>(vars_[i].domain.size());
    if (size_ > std::numeric_limits<state_id>::max() / d) {
      throw validation_error("state space too large");
    }
    size_ *= d;
  }
}

std::shared_ptr<const state_space> state_space::abstract(std::size_t n) {
  variable v{"s", {}};
  for (std::size_t i = 0; i < n; ++i) {
    v.domain.push_back("s" + std::to_string(i));
  }
  return std::make_shared<const state_space>(std::vector<variable>{std::move(v)});
}

std::optional<std::size_t> state_space::find_variable(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) {
      return i;
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> state_space::find_value(std::size_t var, std::string_view value) const {
  const auto& dom = vars_.at(var).domain;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    if (dom[i] == value) {
      return i;
    }
  }
  return std::nullopt;
}

state_id state_space::encode(std::span<const std::size_t> values) const {
  state_id s = 0;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    s += values[i] * stride_[i];
  }
  return s;
}

std::vector<std::size_t> state_space::decode(state_id s) const {
  std::vector<std::size_t> out(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    out[i] = value_of(s, i);
  }
  return out;
}

std::string state_space::format(state_id s) const {
  std::string out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i != 0) {
      out += ", ";
    }
    out += vars_[i].name + '=' + value_name(s, i);
  }
  return out;
}

bool same_space(const space_ptr& a, const space_ptr& b) {
  return a == b || (a && b && *a == *b);
}

} // namespace acta
