#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aicrepair {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UnknownAtom : Error {
  using Error::Error;
};
struct UpdatableConditionViolated : Error {
  using Error::Error;
};
struct InconsistentUpdateSet : Error {
  using Error::Error;
};
struct EmptyRevisionRule : Error {
  using Error::Error;
};
struct NotNormalProgram : Error {
  using Error::Error;
};
struct NotProperProgram : Error {
  using Error::Error;
};
struct NotSimpleRule : Error {
  using Error::Error;
};
struct UniverseTooLarge : Error {
  UniverseTooLarge(std::size_t size, std::size_t bound)
      : Error("universe has " + std::to_string(size) +
              " atoms, exhaustive bound is " + std::to_string(bound)),
        size(size),
        bound(bound) {}
  std::size_t size;
  std::size_t bound;
};

struct SyntaxError : Error {
  SyntaxError(std::size_t line, std::size_t col, std::string expected)
      : Error(std::to_string(line) + ":" + std::to_string(col) + ": expected " +
              expected),
        line(line),
        col(col),
        expected(std::move(expected)) {}
  std::size_t line;
  std::size_t col;
  std::string expected;
};

}  // namespace aicrepair
