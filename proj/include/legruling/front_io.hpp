#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "legruling/front.hpp"

namespace legruling {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses the front text format: one event per line (`L <k>`, `R <k>` or
/// `X <k>`), `#` starts a comment, blank lines are ignored. Heights must be
/// positive integers. The result is not validated.
FrontDiagram parse_front(std::string_view text, std::string name = {});

/// Reads and parses a file; the front is named after the file stem.
FrontDiagram read_front(const std::filesystem::path& path);

std::string render_front(const FrontDiagram& front);

}  // namespace legruling
