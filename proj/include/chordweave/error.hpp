#ifndef CHORDWEAVE_ERROR_HPP_
#define CHORDWEAVE_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace chordweave {

  //! Base class of every exception thrown by the library.
  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Malformed text input. Line and column are 1-based; 0 means unknown.
  class ParseError : public Error {
   public:
    ParseError(std::string const& message, std::size_t line, std::size_t column)
        : Error(format(message, line, column)), _line(line), _column(column) {}

    [[nodiscard]] std::size_t line() const noexcept {
      return _line;
    }
    [[nodiscard]] std::size_t column() const noexcept {
      return _column;
    }

   private:
    static std::string format(std::string const& message,
                              std::size_t        line,
                              std::size_t        column) {
      if (line == 0) {
        return message;
      }
      return "line " + std::to_string(line) + ", column "
             + std::to_string(column) + ": " + message;
    }

    std::size_t _line;
    std::size_t _column;
  };

  //! Well-formed input that violates a structural invariant, or an argument
  //! that violates an operation's precondition.
  class ValidationError : public Error {
   public:
    using Error::Error;
  };

  //! Enumeration parameters exceed the configured guard rails.
  class GuardRailError : public Error {
   public:
    using Error::Error;
  };

  //! A construction failed its own postcondition check. Never expected for
  //! inputs the recognizer accepts.
  class RealizationError : public Error {
   public:
    using Error::Error;
  };

}  // namespace chordweave

#endif  // CHORDWEAVE_ERROR_HPP_
