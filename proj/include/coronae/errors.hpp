#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace coronae {

/// Malformed graph text (graph6 or edge list). `offset()` is the byte offset
/// of the first offending character, or the line number for edge lists.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

/// A configured work budget (path enumeration, census order, tree order) was exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An identity that must hold by construction failed. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// exact_div was asked to divide polynomials that do not divide exactly.
class NotDivisibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace coronae
