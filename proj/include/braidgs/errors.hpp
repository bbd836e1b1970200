#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidgs {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed token or word text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A strand index outside the valid range for the strand count.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Two operands built over different strand counts.
class StrandMismatch : public Error {
 public:
  using Error::Error;
};

// A normal form that does not split as f_n ... f_2 followed by sigma runs.
class ShapeError : public Error {
 public:
  ShapeError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace braidgs
