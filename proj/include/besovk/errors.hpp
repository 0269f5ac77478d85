#ifndef BESOVK_ERRORS_HPP
#define BESOVK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace besovk {

/// Layer number outside 0..J-1.
class IndexError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

/// Malformed coefficient data (NaN, negative magnitudes, bad file layout).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller violated an operation's parameter contract.
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Argument outside the mathematical domain (e.g. t <= 0).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Instance exceeds the enumeration budget of the brute-force oracle.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterative solver failed; carries the last bracket.
class NumericError : public std::runtime_error {
public:
    NumericError(const std::string& what, double lo = 0.0, double hi = 0.0)
        : std::runtime_error(what), lo_(lo), hi_(hi) {}

    double bracket_lo() const noexcept { return lo_; }
    double bracket_hi() const noexcept { return hi_; }

private:
    double lo_;
    double hi_;
};

}  // namespace besovk

#endif  // BESOVK_ERRORS_HPP
