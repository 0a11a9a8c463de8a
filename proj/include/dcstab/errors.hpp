#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcstab {

/// Malformed external input (graph6 records, graph6 streams).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line = 0)
      : std::runtime_error(what), offset_(offset), line_(line) {}

  /// Byte offset inside the offending record.
  std::size_t offset() const noexcept { return offset_; }
  /// 1-based line number when the record came from a stream, 0 otherwise.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t offset_;
  std::size_t line_;
};

/// A caller broke an operation's precondition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised by constructors that validate a list of hypotheses up front.
/// Every failed hypothesis is listed, not only the first.
class HypothesisError : public ContractViolation {
 public:
  explicit HypothesisError(std::vector<std::string> failures);

  const std::vector<std::string>& failures() const noexcept { return failures_; }

 private:
  std::vector<std::string> failures_;
};

/// A sufficient stability condition held but the direct computation found
/// the graph unstable. This is always an implementation bug.
class SoundnessError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace dcstab
