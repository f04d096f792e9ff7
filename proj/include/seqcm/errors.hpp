#pragma once

#include <stdexcept>
#include <string>

namespace seqcm {

/// The degree-t part of a constraint ideal is zero, so no form can be drawn.
class NoFormAvailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A randomized construction failed verification on every attempt.
/// `condition` names the failing check (e.g. "sop", "condition 3") and
/// `position` the 1-based element index where it failed (0 = whole system).
class RetriesExhausted : public std::runtime_error {
 public:
  RetriesExhausted(const std::string& what, std::string condition, std::size_t position)
      : std::runtime_error(what), condition_(std::move(condition)), position_(position) {}
  const std::string& condition() const { return condition_; }
  std::size_t position() const { return position_; }

 private:
  std::string condition_;
  std::size_t position_;
};

/// An internal consistency check failed (e.g. two routes to the same
/// invariant disagree).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A quotient expected to have finite length does not.
class NotArtinian : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace seqcm
