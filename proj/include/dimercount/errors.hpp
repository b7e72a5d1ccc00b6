#ifndef DIMERCOUNT_ERRORS_HPP
#define DIMERCOUNT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace dimercount {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Invalid argument for an operation (stage out of range, undefined ratios, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

// A configured cap was exceeded (build cap, exact cap, digit guard).
class ResourceLimitError : public Error {
public:
    using Error::Error;
};

// Working precision too low to certify a result; caller may retry with more bits.
class PrecisionError : public Error {
public:
    using Error::Error;
};

// Two routes that must agree produced different values. Signals a bug, never input error.
class ConsistencyError : public Error {
public:
    using Error::Error;
};

// Iteration failed to reach its enclosure target within the step cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

// Oracle ran out of steps or wall-clock budget. Carries the work done so far;
// no partial count is ever reported as an answer.
class BudgetExhaustedError : public Error {
public:
    BudgetExhaustedError(const std::string& msg, std::uint64_t steps_consumed)
        : Error(msg), steps(steps_consumed) {}
    std::uint64_t steps;
};

}  // namespace dimercount

#endif
