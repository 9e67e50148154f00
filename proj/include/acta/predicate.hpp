#pragma once

#include "acta/space.hpp"

#include <cstdint>
#include <vector>

namespace acta {

/// A set of states of one space, stored as a bitset.
class predicate {
public:
  static predicate none(space_ptr space);
  static predicate all(space_ptr space);
  /// Bit i of `mask` selects state i. Requires space->size() <= 64.
  static predicate from_mask(space_ptr space, std::uint64_t mask);

  const space_ptr& space() const { return space_; }
  state_id universe() const { return space_->size(); }

  bool contains(state_id s) const { return (words_[s / 64] >> (s % 64)) & 1U; }
  void insert(state_id s) { words_[s / 64] |= std::uint64_t{1} << (s % 64); }
  void erase(state_id s) { words_[s / 64] &= ~(std::uint64_t{1} << (s % 64)); }

  state_id count() const;
  bool empty() const;
  bool full() const { return count() == universe(); }
  bool subset_of(const predicate& other) const;
  std::vector<state_id> members() const;

  predicate operator~() const;
  predicate operator&(const predicate& other) const;
  predicate operator|(const predicate& other) const;
  /// Pointwise implication: ~*this | other.
  predicate implies(const predicate& other) const;

  bool operator==(const predicate& other) const;

private:
  predicate(space_ptr space, bool value);
  void check_space(const predicate& other) const;
  void clear_tail();

  space_ptr space_;
  std::vector<std::uint64_t> words_;
};

} // namespace acta
