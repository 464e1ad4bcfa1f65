#ifndef QOLAB_ERROR_HPP
#define QOLAB_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qolab {

enum class ErrorCode {
  MalformedInput,
  InvalidArgument,
  IndexOutOfRange,
  NotQuasiOrder,
  NotGraph,
  BudgetExceeded,
  NotInAuxGraph,
  NotAntichain,
  WrongCardinality,
  NotIndependent,
  PropositionViolated,
  HypothesisViolated,
  MissingLeaf,
  Io,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message)
      : std::runtime_error(std::move(message)), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Node-expansion budget shared by the exhaustive searches. A limit of 0
// selects the default cap.
class Budget {
 public:
  static constexpr std::uint64_t kDefaultLimit = 10'000'000;

  explicit Budget(std::uint64_t limit = kDefaultLimit)
      : limit_(limit == 0 ? kDefaultLimit : limit) {}

  void spend(std::uint64_t amount = 1) {
    used_ += amount;
    if (used_ > limit_) {
      throw Error(ErrorCode::BudgetExceeded,
                  "search budget of " + std::to_string(limit_) +
                      " node expansions exhausted");
    }
  }

  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

// Resolves an optional caller budget: callers may pass nullptr to get a
// fresh default-capped budget owned by `storage`.
inline Budget& resolve_budget(Budget* maybe, Budget& storage) {
  return maybe != nullptr ? *maybe : storage;
}

}  // namespace qolab

#endif
