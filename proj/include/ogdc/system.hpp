#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ogdc/geometry.hpp"

namespace ogdc {

/// Discrete-time linear plant x' = Ax + Bu. Construction checks dimensions
/// only; controllability and constrained reachability are separate,
/// reportable checks.
class LtiSystem {
public:
    LtiSystem(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B);

    int state_dim() const { return static_cast<int>(A_.rows()); }
    int input_dim() const { return static_cast<int>(B_.cols()); }
    const Eigen::MatrixXd& A() const { return A_; }
    const Eigen::MatrixXd& B() const { return B_; }

    Eigen::VectorXd step(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const;

private:
    Eigen::MatrixXd A_;
    Eigen::MatrixXd B_;
};

/// States visited when applying the input sequence from x0; result[k] is the
/// state after k steps (result[0] == x0).
std::vector<Eigen::VectorXd> simulate(const LtiSystem& sys, const Eigen::VectorXd& x0,
                                      const std::vector<Eigen::VectorXd>& inputs);

/// [B AB ... A^(h-1) B], the h-step input-to-state map.
Eigen::MatrixXd reach_matrix(const LtiSystem& sys, int horizon);

/// Rank of the controllability matrix, via singular values above
/// 1e-10 * sigma_max.
int controllability_rank(const LtiSystem& sys);

/// Induced 2-norm of A by power iteration on A'A (relative tolerance 1e-12).
double spectral_norm(const LtiSystem& sys);

/// Induced 2-norm of an arbitrary matrix (same power iteration).
double induced_two_norm(const Eigen::MatrixXd& M);

/// Proof that any state of X can be steered to any other within `horizon`
/// steps while respecting X and U: one feasibility LP per ordered vertex
/// pair, witnesses retained for replay.
struct ReachabilityCertificate {
    int horizon = 0;
    Eigen::MatrixXd reach; // [B AB ... A^(horizon-1) B]

    struct Witness {
        int from_vertex = 0;
        int to_vertex = 0;
        std::vector<Eigen::VectorXd> inputs; // application order
    };
    std::vector<Eigen::VectorXd> checked_vertices;
    std::vector<Witness> witnesses;
};

struct ReachCheckResult {
    std::optional<ReachabilityCertificate> certificate;
    // First failing ordered pair when certification fails.
    int failed_from = -1;
    int failed_to = -1;
    Eigen::VectorXd failed_from_vertex;
    Eigen::VectorXd failed_to_vertex;

    bool ok() const { return certificate.has_value(); }
};

/// Vertex-pair certification of constrained reachability at a fixed horizon.
/// The feasible (start, target) pairs form a convex set, so covering all
/// vertex pairs of X covers X x X.
ReachCheckResult check_reach_horizon(const LtiSystem& sys, const Polytope& X,
                                     const Polytope& U, int horizon);

/// Smallest horizon <= max_horizon that certifies, else the failure of the
/// final attempt.
ReachCheckResult find_reach_horizon(const LtiSystem& sys, const Polytope& X,
                                    const Polytope& U, int max_horizon);

/// Pragmatic stand-in for viability-kernel computation: try uniformly scaled
/// copies of X0 (offsets scaled by the grid factors, largest first) until
/// one certifies. Scaling down preserves certification, so the grid search
/// is sound; it cannot reshape a set whose template is itself non-viable,
/// in which case the caller must supply a set designed by hand.
struct FeasibleSubsetResult {
    std::optional<Polytope> set;
    std::optional<ReachabilityCertificate> certificate;
    double factor = 0.0;

    bool ok() const { return set.has_value(); }
};

FeasibleSubsetResult shrink_to_feasible(
    const LtiSystem& sys, const Polytope& X0, const Polytope& U, int max_horizon,
    const std::vector<double>& grid = {1.0, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1});

/// Constraint system for steering x_start into a terminal condition within
/// `horizon` steps: inputs in U, intermediate states in X. The terminal
/// state is pinned exactly (when target is set) or constrained to a set.
struct SteeringTerminal {
    std::optional<Eigen::VectorXd> target;   // exact terminal equality
    std::optional<Polytope> terminal_set;    // terminal membership
};

LinearFeasibilityProblem build_steering_problem(const LtiSystem& sys, const Polytope& X,
                                                const Polytope& U, int horizon,
                                                const Eigen::VectorXd& x_start,
                                                const SteeringTerminal& terminal);

/// Split a stacked steering solution (application order) into per-step inputs.
std::vector<Eigen::VectorXd> split_inputs(const Eigen::VectorXd& stacked, int horizon,
                                          int input_dim);

} // namespace ogdc
