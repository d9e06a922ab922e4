#pragma once

#include <stdexcept>
#include <string>

namespace antipodes {

// Malformed or out-of-range user input (bad dimensions, odd polygon side
// counts, unparsable files, ...).
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A documented precondition on an otherwise well-formed object does not
// hold, e.g. counting on a set whose diameter exceeds 1.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// An iterative method ran out of iterations. Carries the last bracket.
class ConvergenceError : public std::runtime_error {
public:
    ConvergenceError(const std::string& what, double lower, double upper)
        : std::runtime_error(what), lower_(lower), upper_(upper) {}

    double lower() const noexcept { return lower_; }
    double upper() const noexcept { return upper_; }

private:
    double lower_;
    double upper_;
};

}  // namespace antipodes
