#pragma once

#include <stdexcept>
#include <string>

namespace ccsp {

// Bad user input: malformed files, invalid parameters, violated preconditions.
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

// Parse failure with a source line attached.
class parse_error : public input_error {
 public:
  parse_error(int line, const std::string& what)
      : input_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A structural validator rejected an otherwise well-formed file.
class validation_error : public input_error {
 public:
  explicit validation_error(const std::string& what) : input_error(what) {}
};

// Broken internal invariant (e.g. a non-integral LP vertex). Never caused by
// user input alone; maps to a distinct process exit code.
class internal_error : public std::logic_error {
 public:
  explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

}  // namespace ccsp
