#include "ogdc/system.hpp"

#include <cmath>

namespace ogdc {

LtiSystem::LtiSystem(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B) : A_(A), B_(B) {
    if (A.rows() == 0 || A.rows() != A.cols())
        throw std::invalid_argument("A must be square and nonempty");
    if (B.rows() != A.rows() || B.cols() == 0)
        throw std::invalid_argument("B must have one row per state and at least one column");
}

Eigen::VectorXd LtiSystem::step(const Eigen::VectorXd& x, const Eigen::VectorXd& u) const {
    if (x.size() != state_dim() || u.size() != input_dim())
        throw std::invalid_argument("state/input dimension mismatch");
    return A_ * x + B_ * u;
}

std::vector<Eigen::VectorXd> simulate(const LtiSystem& sys, const Eigen::VectorXd& x0,
                                      const std::vector<Eigen::VectorXd>& inputs) {
    std::vector<Eigen::VectorXd> states;
    states.reserve(inputs.size() + 1);
    states.push_back(x0);
    for (const auto& u : inputs) states.push_back(sys.step(states.back(), u));
    return states;
}

Eigen::MatrixXd reach_matrix(const LtiSystem& sys, int horizon) {
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    const int n = sys.state_dim();
    const int m = sys.input_dim();
    Eigen::MatrixXd result(n, horizon * m);
    Eigen::MatrixXd block = sys.B();
    for (int k = 0; k < horizon; ++k) {
        result.middleCols(k * m, m) = block;
        if (k + 1 < horizon) block = sys.A() * block;
    }
    return result;
}

int controllability_rank(const LtiSystem& sys) {
    const Eigen::MatrixXd ctrb = reach_matrix(sys, sys.state_dim());
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(ctrb);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0 || sv(0) <= 0.0) return 0;
    int rank = 0;
    for (int i = 0; i < sv.size(); ++i)
        if (sv(i) > 1e-10 * sv(0)) ++rank;
    return rank;
}

double induced_two_norm(const Eigen::MatrixXd& M) {
    if (M.size() == 0) return 0.0;
    const Eigen::MatrixXd gram = M.transpose() * M;
    const int n = static_cast<int>(gram.rows());
    if (gram.cwiseAbs().maxCoeff() == 0.0) return 0.0;

    // Deterministic start vector with a component along every direction.
    Eigen::VectorXd v = Eigen::VectorXd::Ones(n);
    for (int i = 0; i < n; ++i) v(i) += 0.01 * static_cast<double>(i + 1);
    v /= v.norm();

    double lambda = 0.0;
    for (int iter = 0; iter < 10000; ++iter) {
        Eigen::VectorXd w = gram * v;
        const double norm = w.norm();
        if (norm == 0.0) return 0.0;
        w /= norm;
        const double next = w.dot(gram * w);
        if (std::abs(next - lambda) <= 1e-12 * std::max(next, 1.0)) {
            lambda = next;
            break;
        }
        lambda = next;
        v = w;
    }
    return std::sqrt(std::max(lambda, 0.0));
}

double spectral_norm(const LtiSystem& sys) { return induced_two_norm(sys.A()); }

LinearFeasibilityProblem build_steering_problem(const LtiSystem& sys, const Polytope& X,
                                                const Polytope& U, int horizon,
                                                const Eigen::VectorXd& x_start,
                                                const SteeringTerminal& terminal) {
    if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
    if (x_start.size() != sys.state_dim())
        throw std::invalid_argument("start state dimension mismatch");
    if (X.dim() != sys.state_dim() || U.dim() != sys.input_dim())
        throw std::invalid_argument("constraint set dimensions do not match the system");
    if (!terminal.target && !terminal.terminal_set)
        throw std::invalid_argument("steering needs a terminal target or terminal set");

    const int n = sys.state_dim();
    const int m = sys.input_dim();
    const int dim = horizon * m; // stacked inputs, application order

    // Powers of A and the per-step input maps: state after k steps is
    // A^k x_start + sum_{i=1..k} A^(k-i) B u_i.
    std::vector<Eigen::MatrixXd> a_pow(static_cast<size_t>(horizon) + 1);
    a_pow[0] = Eigen::MatrixXd::Identity(n, n);
    for (int k = 1; k <= horizon; ++k) a_pow[static_cast<size_t>(k)] = sys.A() * a_pow[static_cast<size_t>(k - 1)];

    auto state_map = [&](int k) {
        Eigen::MatrixXd map = Eigen::MatrixXd::Zero(n, dim);
        for (int i = 1; i <= k; ++i)
            map.middleCols((i - 1) * m, m) = a_pow[static_cast<size_t>(k - i)] * sys.B();
        return map;
    };

    const bool exact_terminal = terminal.target.has_value();
    const int state_rows_until = exact_terminal ? horizon - 1 : horizon;

    const int cu = U.facets();
    const int cx = X.facets();
    int n_ineq = horizon * cu + state_rows_until * cx;
    if (!exact_terminal) {
        // Terminal handled through its own set below; remove the X rows for
        // the terminal step and add the terminal-set rows instead.
        n_ineq = horizon * cu + (horizon - 1) * cx + terminal.terminal_set->facets();
    }

    LinearFeasibilityProblem p;
    p.dim = dim;
    p.ineq_lhs = Eigen::MatrixXd::Zero(n_ineq, dim);
    p.ineq_rhs = Eigen::VectorXd::Zero(n_ineq);

    int row = 0;
    for (int i = 0; i < horizon; ++i) {
        p.ineq_lhs.block(row, i * m, cu, m) = U.normals();
        p.ineq_rhs.segment(row, cu) = U.offsets();
        row += cu;
    }
    for (int k = 1; k <= horizon - 1; ++k) {
        const Eigen::MatrixXd map = state_map(k);
        p.ineq_lhs.block(row, 0, cx, dim) = X.normals() * map;
        p.ineq_rhs.segment(row, cx) = X.offsets() - X.normals() * (a_pow[static_cast<size_t>(k)] * x_start);
        row += cx;
    }
    const Eigen::MatrixXd terminal_map = state_map(horizon);
    const Eigen::VectorXd terminal_drift = a_pow[static_cast<size_t>(horizon)] * x_start;
    if (exact_terminal) {
        if (terminal.target->size() != n)
            throw std::invalid_argument("terminal target dimension mismatch");
        p.eq_lhs = terminal_map;
        p.eq_rhs = *terminal.target - terminal_drift;
    } else {
        const Polytope& term = *terminal.terminal_set;
        if (term.dim() != n)
            throw std::invalid_argument("terminal set dimension mismatch");
        p.ineq_lhs.block(row, 0, term.facets(), dim) = term.normals() * terminal_map;
        p.ineq_rhs.segment(row, term.facets()) =
            term.offsets() - term.normals() * terminal_drift;
        row += term.facets();
    }
    return p;
}

std::vector<Eigen::VectorXd> split_inputs(const Eigen::VectorXd& stacked, int horizon,
                                          int input_dim) {
    if (stacked.size() != horizon * input_dim)
        throw std::invalid_argument("stacked input length mismatch");
    std::vector<Eigen::VectorXd> inputs;
    inputs.reserve(static_cast<size_t>(horizon));
    for (int i = 0; i < horizon; ++i) inputs.push_back(stacked.segment(i * input_dim, input_dim));
    return inputs;
}

ReachCheckResult check_reach_horizon(const LtiSystem& sys, const Polytope& X,
                                     const Polytope& U, int horizon) {
    ReachCheckResult result;
    const auto verts = vertices(X);

    ReachabilityCertificate cert;
    cert.horizon = horizon;
    cert.reach = reach_matrix(sys, horizon);
    cert.checked_vertices = verts;
    cert.witnesses.reserve(verts.size() * verts.size());

    for (size_t from = 0; from < verts.size(); ++from) {
        for (size_t to = 0; to < verts.size(); ++to) {
            SteeringTerminal terminal;
            terminal.target = verts[to];
            const LinearFeasibilityProblem lp =
                build_steering_problem(sys, X, U, horizon, verts[from], terminal);
            const FeasibilityResult sol = solve_feasibility(lp);
            if (!sol.feasible()) {
                result.failed_from = static_cast<int>(from);
                result.failed_to = static_cast<int>(to);
                result.failed_from_vertex = verts[from];
                result.failed_to_vertex = verts[to];
                return result;
            }
            cert.witnesses.push_back({static_cast<int>(from), static_cast<int>(to),
                                      split_inputs(sol.point, horizon, sys.input_dim())});
        }
    }
    result.certificate = std::move(cert);
    return result;
}

ReachCheckResult find_reach_horizon(const LtiSystem& sys, const Polytope& X,
                                    const Polytope& U, int max_horizon) {
    if (max_horizon < 1) throw std::invalid_argument("max horizon must be at least 1");
    ReachCheckResult last;
    for (int h = 1; h <= max_horizon; ++h) {
        last = check_reach_horizon(sys, X, U, h);
        if (last.ok()) return last;
    }
    return last;
}

FeasibleSubsetResult shrink_to_feasible(const LtiSystem& sys, const Polytope& X0,
                                        const Polytope& U, int max_horizon,
                                        const std::vector<double>& grid) {
    FeasibleSubsetResult result;
    for (double factor : grid) {
        const Polytope candidate = scale(X0, factor);
        ReachCheckResult check = find_reach_horizon(sys, candidate, U, max_horizon);
        if (check.ok()) {
            result.set = candidate;
            result.certificate = std::move(check.certificate);
            result.factor = factor;
            return result;
        }
    }
    return result;
}

} // namespace ogdc
