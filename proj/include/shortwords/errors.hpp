#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shortwords {

/// Failure taxonomy shared by the whole toolkit.  Parse errors carry a
/// position, precondition errors mean the caller broke a contract, and
/// limit errors mean a configured resource guard fired.
enum class errc {
  syntax_error,
  repeated_point,
  point_out_of_range,
  degree_mismatch,
  index_out_of_range,
  arity_mismatch,
  not_a_subgroup,
  target_not_covered,
  element_not_contained,
  chain_violated,
  not_a_two_group,
  checker_precondition_violated,
  order_overflow,
  order_exceeds_limit,
  index_exceeds_limit,
  frontier_exhausted,
};

inline const char* errc_name(errc c) {
  switch (c) {
    case errc::syntax_error: return "SyntaxError";
    case errc::repeated_point: return "RepeatedPoint";
    case errc::point_out_of_range: return "PointOutOfRange";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::not_a_subgroup: return "NotASubgroup";
    case errc::target_not_covered: return "TargetNotCovered";
    case errc::element_not_contained: return "ElementNotContained";
    case errc::chain_violated: return "ChainViolated";
    case errc::not_a_two_group: return "NotATwoGroup";
    case errc::checker_precondition_violated: return "CheckerPreconditionViolated";
    case errc::order_overflow: return "OrderOverflow";
    case errc::order_exceeds_limit: return "OrderExceedsLimit";
    case errc::index_exceeds_limit: return "IndexExceedsLimit";
    case errc::frontier_exhausted: return "FrontierExhausted";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

/// Unreadable input text: bad cycle notation or a malformed generator file.
class ParseError : public Error {
 public:
  ParseError(errc code, const std::string& what, std::size_t line,
             std::size_t column)
      : Error(code, what), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class LimitError : public Error {
 public:
  using Error::Error;
};

}  // namespace shortwords
