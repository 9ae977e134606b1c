#pragma once

// Typed error hierarchy: every failure mode the library reports has its own
// exception class so callers (and the CLI's exit-code mapping) can tell
// mathematical impossibilities, bad input, and resource caps apart.

#include <stdexcept>
#include <string>

namespace cdlat {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Construction / size caps
struct GroupTooLarge : Error {
  explicit GroupTooLarge(const std::string& msg) : Error(msg) {}
};
struct OrderMismatch : Error {
  explicit OrderMismatch(const std::string& msg) : Error(msg) {}
};
struct InvalidFamilyParameters : Error {
  explicit InvalidFamilyParameters(const std::string& msg) : Error(msg) {}
};
struct LatticeTooLarge : Error {
  explicit LatticeTooLarge(const std::string& msg) : Error(msg) {}
};

// Measure / lattice logic
struct CDClosureViolation : Error {
  explicit CDClosureViolation(const std::string& msg) : Error(msg) {}
};
struct NotNested : Error {
  explicit NotNested(const std::string& msg) : Error(msg) {}
};
struct NotACDMember : Error {
  explicit NotACDMember(const std::string& msg) : Error(msg) {}
};
struct NotAPGroup : Error {
  explicit NotAPGroup(const std::string& msg) : Error(msg) {}
};

// Catalog I/O
struct ParseError : Error {
  int line;
  ParseError(int line_no, const std::string& reason)
      : Error("parse error at line " + std::to_string(line_no) + ": " + reason),
        line(line_no) {}
};
struct MissingCatalog : Error {
  explicit MissingCatalog(const std::string& msg) : Error(msg) {}
};
struct IncompleteCatalog : Error {
  explicit IncompleteCatalog(const std::string& msg) : Error(msg) {}
};

}  // namespace cdlat
