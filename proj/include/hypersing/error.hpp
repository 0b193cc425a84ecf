#ifndef HYPERSING_ERROR_HPP
#define HYPERSING_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hypersing {

/// Base class of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed polynomial text. `position()` is a 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// An operation's precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The input is well formed but the requested object degenerates
/// (rank drop, vanishing coefficient, non-isolated locus, ...).
class DegenerateError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypersing

#endif  // HYPERSING_ERROR_HPP
