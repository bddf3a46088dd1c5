#ifndef REMBED_ERRORS_HPP
#define REMBED_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rembed {

// Malformed user input: partition text, edge-list files, ordering/cycle files.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A documented precondition was violated (wrong ground set, disconnected
// input to an ordering bound, loop where none is supported, ...).
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// An enumeration or scan would exceed its configured work budget.  Carries the
// exact amount of work that would have been required, as a decimal string
// (the value routinely overflows 64 bits).
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::string required_work)
        : std::runtime_error(what), required_(std::move(required_work)) {}

    const std::string& required_work() const { return required_; }

private:
    std::string required_;
};

} // namespace rembed

#endif
