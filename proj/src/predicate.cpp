#include "acta/predicate.hpp"

#include "acta/error.hpp"

#include <bit>

namespace acta {

predicate::predicate(space_ptr space, bool value) : space_(std::move(space)) {
  const auto n = space_->size();
  words_.assign(static_cast<std::size_t>((n + 63) / 64), value ? ~std::uint64_t{0} : 0);
  clear_tail();
}

predicate predicate::none(space_ptr space) { return predicate(std::move(space), false); }

predicate predicate::all(space_ptr space) { return predicate(std::move(space), true); }

predicate predicate::from_mask(space_ptr space, std::uint64_t mask) {
  predicate p(std::move(space), false);
  if (p.universe() > 64) {
    throw limit_error("predicate masks need a space of at most 64 states");
  }
  p.words_[0] = mask;
  p.clear_tail();
  return p;
}

void predicate::clear_tail() {
  const auto rem = space_->size() % 64;
  if (rem != 0 && !words_.empty()) {
    words_.back() &= (std::uint64_t{1} << rem) - 1;
  }
}

void predicate::check_space(const predicate& other) const {
  if (!same_space(space_, other.space_)) {
    throw space_mismatch();
  }
}

state_id predicate::count() const {
  state_id n = 0;
  for (auto w : words_) {
    n += static_cast<state_id>(std::popcount(w));
  }
  return n;
}

bool predicate::empty() const {
  for (auto w : words_) {
    if (w != 0) {
      return false;
    }
  }
  return true;
}

bool predicate::subset_of(const predicate& other) const {
  check_space(other);
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if ((words_[i] & ~other.words_[i]) != 0) {
      return false;
    }
  }
  return true;
}

std::vector<state_id> predicate::members() const {
  std::vector<state_id> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    auto w = words_[i];
    while (w != 0) {
      const auto bit = static_cast<state_id>(std::countr_zero(w));
      out.push_back(static_cast<state_id>(i) * 64 + bit);
      w &= w - 1;
    }
  }
  return out;
}

predicate predicate::operator~() const {
  predicate out = *this;
  for (auto& w : out.words_) {
    w = ~w;
  }
  out.clear_tail();
  return out;
}

predicate predicate::operator&(const predicate& other) const {
  check_space(other);
  predicate out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] &= other.words_[i];
  }
  return out;
}

predicate predicate::operator|(const predicate& other) const {
  check_space(other);
  predicate out = *this;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    out.words_[i] |= other.words_[i];
  }
  return out;
}

predicate predicate::implies(const predicate& other) const { return ~*this | other; }

bool predicate::operator==(const predicate& other) const {
  return same_space(space_, other.space_) && words_ == other.words_;
}

} // namespace acta
