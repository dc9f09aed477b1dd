#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "rspec/kernel/errors.hpp"
#include "rspec/kernel/ring.hpp"

namespace rspec {

/// Syntax error with a byte offset into the parsed text and the set of
/// tokens that would have been accepted there.
class ParseError : public Error {
 public:
  ParseError(std::size_t offset, std::string expected, std::string found)
      : Error("expected " + expected + ", found " + found), offset_(offset), expected_(std::move(expected)),
        found_(std::move(found)) {}

  std::size_t offset() const { return offset_; }
  const std::string& expected() const { return expected_; }
  const std::string& found() const { return found_; }

 private:
  std::size_t offset_;
  std::string expected_;
  std::string found_;
};

/// Parses a polynomial expression over `ring`: integer literals, variable
/// names, + - * ^ and division by nonzero constants, parentheses.
/// The result is in canonical form.
Poly parse_poly(const Ring& ring, std::string_view text);

}  // namespace rspec
