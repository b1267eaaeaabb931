#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "wallin/grid.hpp"

namespace wallin {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  Syntax,
  UnknownType,
  UnknownInstance,
  DuplicateDeclaration,
  MissingAnchor,
  Incomplete,
};

const char* to_string(ParseErrorKind kind);

// Problem-file error. `line` is 1-based; 0 when the error is not tied to a
// single statement (e.g. a missing anchor).
class ParseError : public Error {
 public:
  ParseError(ParseErrorKind kind, std::size_t line, const std::string& message);

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }

 private:
  ParseErrorKind kind_;
  std::size_t line_;
};

struct OverlapConflict {
  TileCoord tile;
  std::string first;
  std::string second;

  friend bool operator==(const OverlapConflict&, const OverlapConflict&) = default;
};

class OverlapError : public Error {
 public:
  explicit OverlapError(std::vector<OverlapConflict> conflicts);

  const std::vector<OverlapConflict>& conflicts() const noexcept { return conflicts_; }

 private:
  std::vector<OverlapConflict> conflicts_;
};

// An assignment names an instance the problem does not declare, or leaves a
// declared instance unplaced where a total assignment is required.
class AssignmentError : public Error {
 public:
  using Error::Error;
};

class StageError : public Error {
 public:
  using Error::Error;
};

// The brute-force oracle refuses search spaces above its product bound.
class TooLargeError : public Error {
 public:
  using Error::Error;
};

// Malformed ASP solver output.
class AnswerFormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace wallin
