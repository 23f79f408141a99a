#pragma once

#include <stdexcept>
#include <string>

namespace hopflab {

// Malformed textual input (forest, word, rational or linear-combination
// literal).
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its domain: wrong algebra, unit component
// where the augmentation ideal is required, non-parking word, and so on.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace hopflab
