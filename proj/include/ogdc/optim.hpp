#pragma once

#include <optional>

#include <Eigen/Dense>

#include "ogdc/errors.hpp"

namespace ogdc {

inline constexpr double kDefaultSolverTol = 1e-9;

/// Find z with ineq_lhs * z <= ineq_rhs and eq_lhs * z == eq_rhs.
/// Either block may be empty (0 rows); dim must match the column counts.
struct LinearFeasibilityProblem {
    int dim = 0;
    Eigen::MatrixXd ineq_lhs;
    Eigen::VectorXd ineq_rhs;
    Eigen::MatrixXd eq_lhs;
    Eigen::VectorXd eq_rhs;
};

enum class SolveStatus {
    kOptimal,        // feasible point / optimum found
    kInfeasible,     // certified: phase-1 optimum above tolerance
    kUnbounded,      // objective unbounded over the feasible set
    kIterationLimit, // cap hit before termination; distinct from infeasible
};

struct FeasibilityResult {
    SolveStatus status = SolveStatus::kIterationLimit;
    Eigen::VectorXd point;
    double infeasibility = 0.0; // phase-1 objective at termination
    int iterations = 0;

    bool feasible() const { return status == SolveStatus::kOptimal; }
};

/// Phase-1 simplex with Bland's rule. Deterministic: identical inputs give
/// bit-identical outputs. An empty constraint system returns the zero vector.
FeasibilityResult solve_feasibility(const LinearFeasibilityProblem& problem,
                                    double tol = kDefaultSolverTol);

struct LinearProgramResult {
    SolveStatus status = SolveStatus::kIterationLimit;
    Eigen::VectorXd point;
    double value = 0.0;
    int iterations = 0;
};

/// Maximize objective . z over the problem's constraint set (two-phase
/// simplex, Bland's rule). Reports unboundedness explicitly; used for
/// support-function evaluations.
LinearProgramResult solve_lp(const LinearFeasibilityProblem& problem,
                             const Eigen::VectorXd& objective,
                             double tol = kDefaultSolverTol);

/// minimize 1/2 z'Hz + q'z  s.t.  ineq_lhs z <= ineq_rhs, eq_lhs z == eq_rhs.
/// hessian must be symmetric (within 1e-12) and positive semidefinite.
struct ConvexQp {
    Eigen::MatrixXd hessian;
    Eigen::VectorXd linear;
    Eigen::MatrixXd ineq_lhs;
    Eigen::VectorXd ineq_rhs;
    Eigen::MatrixXd eq_lhs;
    Eigen::VectorXd eq_rhs;
};

struct QpResult {
    Eigen::VectorXd point;
    Eigen::VectorXd ineq_multipliers;
    Eigen::VectorXd eq_multipliers;
    int iterations = 0;
    double stationarity = 0.0;
    double primal_residual = 0.0;
    double complementarity = 0.0;
};

/// Dense primal active-set method. Equalities are eliminated through an
/// orthonormal null-space basis; the reduced problem starts from
/// `feasible_start` when one is supplied (and actually feasible), otherwise
/// from a phase-1 simplex point. KKT residuals of the returned point are
/// checked against `tol`.
///
/// Throws InfeasibleProblem when the constraints admit no point and
/// SolverError when the iteration cap (1000) is exceeded or the residual
/// targets cannot be met.
QpResult solve_qp(const ConvexQp& problem,
                  double tol = kDefaultSolverTol,
                  const std::optional<Eigen::VectorXd>& feasible_start = std::nullopt);

} // namespace ogdc
