#pragma once

#include <stdexcept>
#include <string>

namespace tms21 {

/// Invalid argument outside the mathematical domain of an operation.
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A numerical procedure failed to reach its configured tolerance.
class NumericError : public std::runtime_error {
public:
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
    NumericError(const std::string& what, double achieved)
        : std::runtime_error(what + " (achieved " + std::to_string(achieved) + ")"),
          achieved_(achieved) {}
    double achieved() const { return achieved_; }

private:
    double achieved_ = 0.0;
};

}  // namespace tms21
