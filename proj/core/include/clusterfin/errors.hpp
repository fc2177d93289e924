#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace clusterfin {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotSkewSymmetrizableError : Error { using Error::Error; };
struct NotSymmetrizableError : Error { using Error::Error; };
struct MalformedDiagramError : Error { using Error::Error; };
struct MalformedCycleError : Error { using Error::Error; };
struct CapExceededError : Error { using Error::Error; };
struct NotOrientableError : Error { using Error::Error; };
struct SignDomainMismatchError : Error { using Error::Error; };
struct NotACompanionError : Error { using Error::Error; };
struct NotKCompatibleError : Error { using Error::Error; };
struct SymmetrizerMismatchError : Error { using Error::Error; };
struct NotPositiveError : Error { using Error::Error; };
struct NotFiniteTypeError : Error { using Error::Error; };

struct ParseError : Error {
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line),
        column(column) {}

  std::size_t line;
  std::size_t column;
};

}  // namespace clusterfin
