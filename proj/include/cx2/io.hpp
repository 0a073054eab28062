#ifndef CX2_IO_HPP_
#define CX2_IO_HPP_

#include <stdexcept>
#include <string>
#include <variant>

#include "cx2/complex.hpp"
#include "cx2/families.hpp"

namespace cx2 {

/// Parse failure in an input file, with 1-based position.
struct FileParseError : std::runtime_error {
  int line;
  int column;

  FileParseError(const std::string& message, int line_, int column_)
      : std::runtime_error("line " + std::to_string(line_) + ", column " +
                           std::to_string(column_) + ": " + message),
        line(line_),
        column(column_) {}
};

/// A parsed input plus a short descriptor of where it came from.
struct LoadedInput {
  std::variant<Presentation, CombinatorialDescription> value;
  std::string source;

  bool is_presentation() const {
    return std::holds_alternative<Presentation>(value);
  }
  const Presentation& presentation() const {
    return std::get<Presentation>(value);
  }
  const CombinatorialDescription& description() const {
    return std::get<CombinatorialDescription>(value);
  }
};

/// Presentation file: `#` comments, a `gens: <letters>` header line, then
/// one relator (word) or relation (`lhs = rhs`) per nonblank line.
Presentation parse_presentation_text(const std::string& text);

/// Description file: `#` comments, one boundary word per nonblank line,
/// each optionally wrapped in `[ ... ]`.
CombinatorialDescription parse_description_text(const std::string& text);

Presentation load_presentation_file(const std::string& path);
CombinatorialDescription load_description_file(const std::string& path);

/// Built-in input for a named family: the two-vertex description for Tor
/// and Art, the presentation for BS (which has no description here).
LoadedInput family_input(const FamilyId& family);

/// Whole file as a string; throws std::runtime_error when unreadable.
std::string read_file(const std::string& path);

}  // namespace cx2

#endif  // CX2_IO_HPP_
