#pragma once

#include <stdexcept>
#include <string>

#include "toricfill/plumbing.hpp"

namespace toricfill::cli {

// Grammar: spec := shape ':' intlist ; shape := 'linear' | 'cyclic' ;
// intlist := int (',' int)* ; whitespace allowed anywhere.
class SpecParseError : public std::runtime_error {
public:
  SpecParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("parse error at " + std::to_string(line) + ":" +
                           std::to_string(column) + ": " + message),
        line(line), column(column) {}
  std::size_t line;
  std::size_t column;
};

PlumbingGraph parse_spec(const std::string& text);

// Inverse of parse_spec on valid graphs: "linear: 1, 0, -1".
std::string unparse(const PlumbingGraph& g);

}  // namespace toricfill::cli
