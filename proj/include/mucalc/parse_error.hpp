#pragma once

#include <stdexcept>
#include <string>

namespace mucalc {

/// Error raised by the text-format parsers (formulas, Kripke structures,
/// automaton dumps, PGSolver games). Positions are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line, int column)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

}  // namespace mucalc
