#pragma once

#include <stdexcept>
#include <string>

namespace linstrand {

/// Raised when an input exceeds a hard size cap (brute-force bounds).
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when a computation would exceed its configured budget.
/// Callers that sweep many instances generally treat this as "skipped".
class BudgetExceededError : public std::runtime_error {
public:
    explicit BudgetExceededError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised when an operation's mathematical hypotheses do not hold for the
/// given input; the message names the violated hypothesis.
class HypothesisError : public std::runtime_error {
public:
    explicit HypothesisError(const std::string& what) : std::runtime_error(what) {}
};

/// Raised on malformed text input; carries a 1-based line number when known.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

} // namespace linstrand
