#pragma once

#include <stdexcept>
#include <string>

namespace fgrade {

/// Violated mathematical or API precondition (bad input, ring mismatch,
/// rejected degenerate case). Maps to CLI exit code 2.
class precondition_error : public std::runtime_error {
public:
    explicit precondition_error(const std::string& what) : std::runtime_error(what) {}
};

/// Internal inconsistency: a theorem-backed invariant failed, which means an
/// engine bug rather than a math outcome. Maps to CLI exit code 1.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& what) : std::logic_error(what) {}
};

/// Randomized element search ran out of retries; rerunning with another
/// seed is the remedy, not a bug fix. Maps to CLI exit code 2.
class search_exhausted : public std::runtime_error {
public:
    explicit search_exhausted(const std::string& what) : std::runtime_error(what) {}
};

/// Lexical/syntactic/binding error in the input language, with location.
class parse_error : public std::runtime_error {
public:
    parse_error(int line, int column, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line), column(column), message(msg) {}

    int line;
    int column;
    std::string message;
};

}  // namespace fgrade
