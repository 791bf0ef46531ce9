#pragma once

#include <stdexcept>
#include <string>

namespace sbound {

// Shape or size mismatch between an operation and its inputs.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RankDeficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotOrthonormal : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EnumerationCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

class NegativeComponent : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input (matrix files).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sbound
