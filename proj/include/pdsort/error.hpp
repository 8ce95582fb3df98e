#pragma once

#include <stdexcept>
#include <string>

namespace pdsort {

// Raised for malformed inputs: bad node indices, overlapping blocks,
// order mismatches, non-permutations and parse failures.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public DomainError {
 public:
  ParseError(const std::string& what, std::size_t position)
      : DomainError(what + " at offset " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pdsort
