#pragma once

#include <stdexcept>
#include <string>

namespace simpson {

/// A vector or angle outside the open first quadrant.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Caller-supplied arguments that violate an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The closed-form split lost positivity or hit a vanishing denominator.
/// `cell()` is empty for a direct decompose() call and names the failing
/// stratification cell when raised from the tree builder.
class DegenerateSeedError : public std::runtime_error {
public:
    explicit DegenerateSeedError(const std::string& what, std::string cell = {})
        : std::runtime_error(cell.empty() ? what : what + " (cell " + cell + ")"),
          cell_(std::move(cell)) {}

    const std::string& cell() const noexcept { return cell_; }

private:
    std::string cell_;
};

/// Conditioning on an event of (numerically) zero probability.
class ZeroProbabilityError : public std::runtime_error {
public:
    explicit ZeroProbabilityError(const std::string& what, std::string cell = {})
        : std::runtime_error(what), cell_(std::move(cell)) {}

    const std::string& cell() const noexcept { return cell_; }

private:
    std::string cell_;
};

/// Malformed JSON/CSV input.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace simpson
