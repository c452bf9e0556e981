#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace sumdiff {

/// A sum, difference or product left the signed 64-bit range.
class arithmetic_range_error : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// A construction was called outside its hypotheses. `clause()` names the
/// hypothesis that failed.
class precondition_error : public std::invalid_argument {
 public:
  precondition_error(std::string clause, const std::string& detail)
      : std::invalid_argument(clause + (detail.empty() ? "" : ": " + detail)),
        clause_(std::move(clause)) {}
  explicit precondition_error(std::string clause) : precondition_error(std::move(clause), "") {}

  [[nodiscard]] const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

/// A construction produced a set that does not satisfy its stated identity.
class postcondition_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A request exceeds an explicit work or memory cap.
class resource_limit_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// No MDTS set could be interposed between two consecutive MSTD steps.
class chain_break_error : public std::runtime_error {
 public:
  chain_break_error(std::size_t step, const std::string& what)
      : std::runtime_error(what), step_(step) {}
  [[nodiscard]] std::size_t step() const noexcept { return step_; }

 private:
  std::size_t step_;
};

/// Malformed set literal; `position()` is the 0-based character offset.
class parse_error : public std::invalid_argument {
 public:
  parse_error(std::size_t position, const std::string& what)
      : std::invalid_argument(what + " at position " + std::to_string(position)),
        position_(position) {}
  [[nodiscard]] std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace sumdiff
