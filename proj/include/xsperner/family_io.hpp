#pragma once

// Plain-text family pair files:
//
//   # comment
//   n=3
//   2 3
//   ---
//   1
//   1 2
//   1 3
//
// The first non-comment line is "n=<int>". Each following line is one set as
// space-separated element labels, "{}" for the empty set. A line holding
// exactly "---" ends F and starts G. Blank lines are ignored.

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "xsperner/setfam.hpp"

namespace xsperner {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  [[nodiscard]] int line() const noexcept { return line_; }

 private:
  int line_;
};

FamilyPair parse_family_text(std::string_view text);
FamilyPair parse_family_file(const std::filesystem::path& path);

/// Inverse of parse_family_text on valid pairs.
std::string format_family_file(const FamilyPair& pair);

}  // namespace xsperner
