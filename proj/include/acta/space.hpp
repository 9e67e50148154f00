#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace acta {

/// Index of a state in its space. States are numbered lexicographically by
/// the declared variable order (first variable most significant) and, within a
/// variable, by the declared domain order.
using state_id = std::uint64_t;

struct variable {
  std::string name;
  std::vector<std::string> domain;

  bool operator==(const variable&) const = default;
};

/// Finite product of enumerated variable domains.
class state_space {
public:
  /// Throws validation_error on duplicate names, empty or duplicated domains,
  /// or a state count that does not fit the index type.
  explicit state_space(std::vector<variable> vars);

  /// One variable `s` with values s0..s{n-1}; used for abstract law checks.
  static std::shared_ptr<const state_space> abstract(std::size_t n);

  std::size_t variable_count() const { return vars_.size(); }
  const variable& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<variable>& variables() const { return vars_; }

  std::optional<std::size_t> find_variable(std::string_view name) const;
  std::optional<std::size_t> find_value(std::size_t var, std::string_view value) const;

  state_id size() const { return size_; }

  std::size_t value_of(state_id s, std::size_t var) const {
    return static_cast<std::size_t>((s / stride_[var]) % vars_[var].domain.size());
  }
  const std::string& value_name(state_id s, std::size_t var) const {
    return vars_[var].domain[value_of(s, var)];
  }
  state_id with_value(state_id s, std::size_t var, std::size_t value) const {
    return s - value_of(s, var) * stride_[var] + value * stride_[var];
  }
  state_id encode(std::span<const std::size_t> values) const;
  std::vector<std::size_t> decode(state_id s) const;

  /// "light=green, loc=B"
  std::string format(state_id s) const;

  bool operator==(const state_space& other) const { return vars_ == other.vars_; }

private:
  std::vector<variable> vars_;
  std::vector<state_id> stride_;
  state_id size_ = 1;
};

using space_ptr = std::shared_ptr<const state_space>;

/// True when both pointers denote the same space (by identity or structure).
bool same_space(const space_ptr& a, const space_ptr& b);

} // namespace acta
