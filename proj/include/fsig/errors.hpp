#pragma once
#include <stdexcept>
#include <string>

namespace fsig {

// Base class for every library error.
struct error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Caller broke a contract: bad arguments, mismatched rings, colon by zero, ...
struct usage_error : error {
  using error::error;
};

// Input failed semantic validation: bad sop, not Gorenstein, missing data.
struct validation_error : error {
  using error::error;
};

// A quotient that had to be finite dimensional is not; carries the witness variable.
struct dimension_error : error {
  explicit dimension_error(const std::string& var)
      : error("quotient is not zero-dimensional: no pure power of '" + var +
              "' among the leading terms"),
        variable(var) {}
  std::string variable;
};

// A resource guard tripped (term budget, pair queue, matrix size).
struct resource_error : error {
  resource_error(const std::string& what, long long progress_, long long budget_)
      : error(what + " (progress " + std::to_string(progress_) + ", budget " +
              std::to_string(budget_) + ")"),
        progress(progress_),
        budget(budget_) {}
  long long progress = 0;
  long long budget = 0;
};

// Structured-text parse failure with position info.
struct parse_error : error {
  parse_error(int line_, int column_, const std::string& message_)
      : error(std::to_string(line_) + ":" + std::to_string(column_) + ": " +
              message_),
        line(line_),
        column(column_),
        message(message_) {}
  int line = 1;
  int column = 1;
  std::string message;
};

}  // namespace fsig
