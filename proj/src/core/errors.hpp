#ifndef SFWNAV_CORE_ERRORS_HPP_
#define SFWNAV_CORE_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sfwnav {

/// Scenario/config text could not be parsed or failed validation.
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// No global path exists between start and goal.
class UnreachableError : public std::runtime_error {
 public:
  explicit UnreachableError(const std::string& what) : std::runtime_error(what) {}
};

/// Operation attempted on an object in the wrong state (e.g. stepping a finished episode).
class StateError : public std::runtime_error {
 public:
  explicit StateError(const std::string& what) : std::runtime_error(what) {}
};

/// File could not be read or written.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sfwnav

#endif
