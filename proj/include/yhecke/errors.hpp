#pragma once

#include <stdexcept>
#include <string>

namespace yh {

// Arithmetic between cyclotomic numbers of different (non-rational) orders.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Negative (or fractional) power of a variable substituted by a value that
// has no such power in the Laurent ring.
class NonInvertibleSubstitution : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// A configured computational budget was exceeded. Never a wrong answer.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace yh
