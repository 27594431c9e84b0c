#ifndef BLOWUP_ERRORS_HPP
#define BLOWUP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace blowup {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"), pos_(pos) {}
    explicit ParseError(const std::string& msg) : std::runtime_error(msg), pos_(0) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

// A resource cap was hit. Deliberately an error, never a wrong answer.
class BudgetExceeded : public std::runtime_error {
public:
    explicit BudgetExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

// A theorem-level consistency check failed; this signals a toolkit bug, not
// a property of the input.
class InvariantViolation : public std::logic_error {
public:
    explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace blowup

#endif
