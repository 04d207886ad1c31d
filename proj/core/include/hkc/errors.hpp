#pragma once

#include <stdexcept>
#include <string>

namespace hkc {

// Wrong shapes, mismatched base points, out-of-range indices.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Non-finite values produced during evaluation.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DegenerateInputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operation called outside its documented domain (e.g. non-horizontal input).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Two routes that must agree by construction disagreed.
class InternalConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hkc
