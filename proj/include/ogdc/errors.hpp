#pragma once

#include <stdexcept>
#include <string>

namespace ogdc {

/// A solver terminated without reaching its required residual targets.
/// The message carries the residual diagnostics of the failed run.
class SolverError : public std::runtime_error {
public:
    explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

/// A problem that was expected to be feasible has no solution.
class InfeasibleProblem : public std::runtime_error {
public:
    explicit InfeasibleProblem(const std::string& what) : std::runtime_error(what) {}
};

/// A runtime condition that certified pre-validation should have excluded.
/// Raised loudly: carries a dump of the offending instance.
class AssumptionViolation : public std::runtime_error {
public:
    explicit AssumptionViolation(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ogdc
