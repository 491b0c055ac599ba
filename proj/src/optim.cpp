#include "ogdc/optim.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

namespace ogdc {

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kReducedCostTol = 1e-10;
constexpr int kSimplexIterationCap = 50000;
constexpr int kQpIterationCap = 1000;

// Dense simplex tableau over nonnegative variables with per-row basis
// bookkeeping. Free variables are handled by the callers via a +/- split.
struct Tableau {
    Eigen::MatrixXd body; // rows x cols, kept in pivoted form
    Eigen::VectorXd rhs;  // always >= 0 up to rounding
    Eigen::RowVectorXd cost;
    double cost_offset = 0.0;
    std::vector<int> basis;              // basic column per row
    std::vector<bool> blocked;           // columns excluded from entering
    Eigen::MatrixXd original_body;       // pre-pivot copy for the final re-solve
    Eigen::VectorXd original_rhs;

    int rows() const { return static_cast<int>(body.rows()); }
    int cols() const { return static_cast<int>(body.cols()); }

    void pivot(int row, int col) {
        const double p = body(row, col);
        body.row(row) /= p;
        rhs(row) /= p;
        for (int r = 0; r < rows(); ++r) {
            if (r == row) continue;
            const double factor = body(r, col);
            if (factor == 0.0) continue;
            body.row(r) -= factor * body.row(row);
            rhs(r) -= factor * rhs(row);
        }
        const double cfactor = cost(col);
        if (cfactor != 0.0) {
            cost -= cfactor * body.row(row);
            cost_offset -= cfactor * rhs(row);
        }
        basis[static_cast<size_t>(row)] = col;
    }

    // Bland's rule: entering column = smallest index with an improving
    // reduced cost, leaving row = smallest basic-variable index among the
    // minimum-ratio rows. Finite termination, deterministic.
    SolveStatus run(int* iterations_used) {
        int iters = 0;
        while (iters < kSimplexIterationCap) {
            int entering = -1;
            for (int c = 0; c < cols(); ++c) {
                if (blocked[static_cast<size_t>(c)]) continue;
                if (cost(c) < -kReducedCostTol) {
                    entering = c;
                    break;
                }
            }
            if (entering < 0) {
                *iterations_used = iters;
                return SolveStatus::kOptimal;
            }

            int leaving = -1;
            double best_ratio = std::numeric_limits<double>::infinity();
            for (int r = 0; r < rows(); ++r) {
                const double p = body(r, entering);
                if (p <= kPivotTol) continue;
                const double ratio = std::max(rhs(r), 0.0) / p;
                if (ratio < best_ratio - 1e-15 ||
                    (std::abs(ratio - best_ratio) <= 1e-15 &&
                     (leaving < 0 || basis[static_cast<size_t>(r)] <
                                         basis[static_cast<size_t>(leaving)]))) {
                    best_ratio = ratio;
                    leaving = r;
                }
            }
            if (leaving < 0) {
                *iterations_used = iters;
                return SolveStatus::kUnbounded;
            }
            pivot(leaving, entering);
            ++iters;
        }
        *iterations_used = iters;
        return SolveStatus::kIterationLimit;
    }

    double objective() const { return -cost_offset; }

    // Recompute the basic values against the unpivoted data. Clears the
    // drift simplex pivoting accumulates over long runs.
    Eigen::VectorXd refined_solution() const {
        const int m = rows();
        Eigen::VectorXd values = Eigen::VectorXd::Zero(cols());
        if (m == 0) return values;
        Eigen::MatrixXd basis_cols(m, m);
        for (int r = 0; r < m; ++r)
            basis_cols.col(r) = original_body.col(basis[static_cast<size_t>(r)]);
        Eigen::FullPivLU<Eigen::MatrixXd> lu(basis_cols);
        if (lu.isInvertible()) {
            const Eigen::VectorXd xb = lu.solve(original_rhs);
            for (int r = 0; r < m; ++r)
                values(basis[static_cast<size_t>(r)]) = xb(r);
        } else {
            for (int r = 0; r < m; ++r)
                values(basis[static_cast<size_t>(r)]) = rhs(r);
        }
        return values;
    }
};

struct BuiltProblem {
    Tableau tableau;
    int dim = 0;
    int n_ineq_kept = 0;
    std::vector<int> artificial_cols;
    bool trivially_infeasible = false;
};

// Standard-form assembly: z = z+ - z-, one slack per inequality row, RHS
// made nonnegative by row flips, artificials wherever no natural basic
// column exists. Rows are equilibrated to unit max-coefficient so the pivot
// tolerances behave across mixed scales.
BuiltProblem build_phase1(const LinearFeasibilityProblem& p, double tol) {
    BuiltProblem built;
    built.dim = p.dim;

    struct Row {
        Eigen::RowVectorXd coeffs; // over z
        double rhs;
        bool is_eq;
    };
    std::vector<Row> rows;
    for (int i = 0; i < p.ineq_lhs.rows(); ++i) {
        Eigen::RowVectorXd c = p.ineq_lhs.row(i);
        const double scale = std::max(c.cwiseAbs().maxCoeff(), std::abs(p.ineq_rhs(i)));
        if (c.cwiseAbs().maxCoeff() <= 0.0) {
            if (p.ineq_rhs(i) < -tol) built.trivially_infeasible = true;
            continue; // vacuous row
        }
        rows.push_back({c / scale, p.ineq_rhs(i) / scale, false});
    }
    for (int i = 0; i < p.eq_lhs.rows(); ++i) {
        Eigen::RowVectorXd c = p.eq_lhs.row(i);
        const double scale = std::max(c.cwiseAbs().maxCoeff(), std::abs(p.eq_rhs(i)));
        if (c.cwiseAbs().maxCoeff() <= 0.0) {
            if (std::abs(p.eq_rhs(i)) > tol) built.trivially_infeasible = true;
            continue;
        }
        rows.push_back({c / scale, p.eq_rhs(i) / scale, true});
    }

    const int m = static_cast<int>(rows.size());
    int n_ineq = 0;
    for (const Row& r : rows)
        if (!r.is_eq) ++n_ineq;
    built.n_ineq_kept = n_ineq;

    // Column layout: [z+ | z- | slacks | artificials].
    int n_art = 0;
    for (const Row& r : rows)
        if (r.is_eq || r.rhs < 0.0) ++n_art;

    const int zcols = 2 * p.dim;
    const int cols = zcols + n_ineq + n_art;

    Tableau& t = built.tableau;
    t.body = Eigen::MatrixXd::Zero(m, cols);
    t.rhs = Eigen::VectorXd::Zero(m);
    t.cost = Eigen::RowVectorXd::Zero(cols);
    t.basis.assign(static_cast<size_t>(m), -1);
    t.blocked.assign(static_cast<size_t>(cols), false);

    int slack_idx = 0;
    int art_idx = 0;
    for (int r = 0; r < m; ++r) {
        const Row& row = rows[static_cast<size_t>(r)];
        const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
        t.body.block(r, 0, 1, p.dim) = sign * row.coeffs;
        t.body.block(r, p.dim, 1, p.dim) = -sign * row.coeffs;
        t.rhs(r) = sign * row.rhs;
        if (!row.is_eq) {
            t.body(r, zcols + slack_idx) = sign;
            if (sign > 0.0) t.basis[static_cast<size_t>(r)] = zcols + slack_idx;
            ++slack_idx;
        }
        if (t.basis[static_cast<size_t>(r)] < 0) {
            const int col = zcols + n_ineq + art_idx;
            t.body(r, col) = 1.0;
            t.basis[static_cast<size_t>(r)] = col;
            t.cost(col) = 1.0;
            built.artificial_cols.push_back(col);
            ++art_idx;
        }
    }

    t.original_body = t.body;
    t.original_rhs = t.rhs;

    // Price out the initial basis so reduced costs start consistent.
    for (int r = 0; r < m; ++r) {
        const int b = t.basis[static_cast<size_t>(r)];
        const double cb = t.cost(b);
        if (cb != 0.0) {
            t.cost -= cb * t.body.row(r);
            t.cost_offset -= cb * t.rhs(r);
        }
    }
    return built;
}

Eigen::VectorXd extract_point(const Tableau& t, int dim) {
    const Eigen::VectorXd w = t.refined_solution();
    Eigen::VectorXd z(dim);
    for (int j = 0; j < dim; ++j) z(j) = w(j) - w(dim + j);
    return z;
}

void check_problem_shape(const LinearFeasibilityProblem& p) {
    if (p.dim < 0) throw std::invalid_argument("negative variable dimension");
    if (p.ineq_lhs.rows() != p.ineq_rhs.size() ||
        (p.ineq_lhs.rows() > 0 && p.ineq_lhs.cols() != p.dim))
        throw std::invalid_argument("inequality block dimensions inconsistent");
    if (p.eq_lhs.rows() != p.eq_rhs.size() ||
        (p.eq_lhs.rows() > 0 && p.eq_lhs.cols() != p.dim))
        throw std::invalid_argument("equality block dimensions inconsistent");
}

} // namespace

FeasibilityResult solve_feasibility(const LinearFeasibilityProblem& problem, double tol) {
    check_problem_shape(problem);

    FeasibilityResult result;
    if (problem.ineq_lhs.rows() == 0 && problem.eq_lhs.rows() == 0) {
        // Convention: the minimum-norm candidate for an empty system.
        result.status = SolveStatus::kOptimal;
        result.point = Eigen::VectorXd::Zero(problem.dim);
        return result;
    }

    BuiltProblem built = build_phase1(problem, tol);
    if (built.trivially_infeasible) {
        result.status = SolveStatus::kInfeasible;
        result.infeasibility = std::numeric_limits<double>::infinity();
        return result;
    }

    const SolveStatus status = built.tableau.run(&result.iterations);
    result.infeasibility = built.tableau.objective();
    if (status == SolveStatus::kIterationLimit) {
        result.status = SolveStatus::kIterationLimit;
        return result;
    }
    if (result.infeasibility > tol) {
        result.status = SolveStatus::kInfeasible;
        return result;
    }
    result.status = SolveStatus::kOptimal;
    result.point = extract_point(built.tableau, problem.dim);
    return result;
}

LinearProgramResult solve_lp(const LinearFeasibilityProblem& problem,
                             const Eigen::VectorXd& objective,
                             double tol) {
    check_problem_shape(problem);
    if (objective.size() != problem.dim)
        throw std::invalid_argument("objective dimension mismatch");

    LinearProgramResult result;
    if (problem.ineq_lhs.rows() == 0 && problem.eq_lhs.rows() == 0) {
        if (objective.cwiseAbs().maxCoeff() > 0.0) {
            result.status = SolveStatus::kUnbounded;
        } else {
            result.status = SolveStatus::kOptimal;
            result.point = Eigen::VectorXd::Zero(problem.dim);
        }
        return result;
    }

    BuiltProblem built = build_phase1(problem, tol);
    if (built.trivially_infeasible) {
        result.status = SolveStatus::kInfeasible;
        return result;
    }
    Tableau& t = built.tableau;

    int phase1_iters = 0;
    SolveStatus status = t.run(&phase1_iters);
    result.iterations = phase1_iters;
    if (status == SolveStatus::kIterationLimit) {
        result.status = status;
        return result;
    }
    if (t.objective() > tol) {
        result.status = SolveStatus::kInfeasible;
        return result;
    }

    // Drive leftover artificials out of the basis (they are at zero), then
    // freeze their columns for phase 2.
    for (int r = 0; r < t.rows(); ++r) {
        const int b = t.basis[static_cast<size_t>(r)];
        const bool is_art = std::find(built.artificial_cols.begin(), built.artificial_cols.end(), b) !=
                            built.artificial_cols.end();
        if (!is_art) continue;
        int pivot_col = -1;
        for (int c = 0; c < 2 * built.dim + built.n_ineq_kept; ++c) {
            if (std::abs(t.body(r, c)) > kPivotTol) {
                pivot_col = c;
                break;
            }
        }
        if (pivot_col >= 0) t.pivot(r, pivot_col);
        // else: the row is redundant; its artificial stays basic at zero.
    }
    for (int col : built.artificial_cols) t.blocked[static_cast<size_t>(col)] = true;

    // Install the real objective: maximize c.z == minimize -c.(z+ - z-).
    t.cost = Eigen::RowVectorXd::Zero(t.cols());
    t.cost_offset = 0.0;
    for (int j = 0; j < built.dim; ++j) {
        t.cost(j) = -objective(j);
        t.cost(built.dim + j) = objective(j);
    }
    for (int r = 0; r < t.rows(); ++r) {
        const int b = t.basis[static_cast<size_t>(r)];
        const double cb = t.cost(b);
        if (cb != 0.0) {
            t.cost -= cb * t.body.row(r);
            t.cost_offset -= cb * t.rhs(r);
        }
    }

    int phase2_iters = 0;
    status = t.run(&phase2_iters);
    result.iterations += phase2_iters;
    result.status = status;
    if (status == SolveStatus::kOptimal) {
        result.point = extract_point(t, built.dim);
        result.value = objective.dot(result.point);
    }
    return result;
}

namespace {

std::string format_residuals(double stationarity, double primal, double complementarity) {
    std::ostringstream os;
    os << "stationarity=" << stationarity << " primal=" << primal
       << " complementarity=" << complementarity;
    return os.str();
}

} // namespace

QpResult solve_qp(const ConvexQp& problem,
                  double tol,
                  const std::optional<Eigen::VectorXd>& feasible_start) {
    const int dim = static_cast<int>(problem.hessian.rows());
    if (problem.hessian.cols() != dim)
        throw std::invalid_argument("hessian must be square");
    if (problem.linear.size() != dim)
        throw std::invalid_argument("linear term dimension mismatch");
    if (problem.ineq_lhs.rows() != problem.ineq_rhs.size() ||
        (problem.ineq_lhs.rows() > 0 && problem.ineq_lhs.cols() != dim))
        throw std::invalid_argument("inequality block dimensions inconsistent");
    if (problem.eq_lhs.rows() != problem.eq_rhs.size() ||
        (problem.eq_lhs.rows() > 0 && problem.eq_lhs.cols() != dim))
        throw std::invalid_argument("equality block dimensions inconsistent");

    const double h_scale = std::max(1.0, problem.hessian.cwiseAbs().maxCoeff());
    if ((problem.hessian - problem.hessian.transpose()).cwiseAbs().maxCoeff() > 1e-12 * h_scale)
        throw std::invalid_argument("hessian not symmetric");
    const Eigen::MatrixXd H = 0.5 * (problem.hessian + problem.hessian.transpose());
    {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(H, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10 * h_scale)
            throw std::invalid_argument("hessian not positive semidefinite");
    }

    const int n_eq = static_cast<int>(problem.eq_lhs.rows());
    const int n_ineq = static_cast<int>(problem.ineq_lhs.rows());

    // Eliminate equalities: z = z_p + Z y with Z an orthonormal null-space
    // basis of eq_lhs, z_p the minimum-norm particular solution.
    Eigen::VectorXd z_p = Eigen::VectorXd::Zero(dim);
    Eigen::MatrixXd Z = Eigen::MatrixXd::Identity(dim, dim);
    if (n_eq > 0) {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(problem.eq_lhs);
        z_p = cod.solve(problem.eq_rhs);
        const double eq_scale = std::max(1.0, problem.eq_rhs.cwiseAbs().maxCoeff());
        if ((problem.eq_lhs * z_p - problem.eq_rhs).cwiseAbs().maxCoeff() > 1e-7 * eq_scale)
            throw InfeasibleProblem("equality system inconsistent");
        Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(problem.eq_lhs.transpose());
        qr.setThreshold(1e-12);
        const int rank = static_cast<int>(qr.rank());
        if (rank >= dim) {
            Z.resize(dim, 0);
        } else {
            Eigen::MatrixXd tail = Eigen::MatrixXd::Zero(dim, dim - rank);
            tail.bottomRows(dim - rank).setIdentity();
            Z = qr.householderQ() * tail;
        }
    }
    const int rdim = static_cast<int>(Z.cols());

    // Row-normalize inequalities; remember scales to restore multipliers.
    Eigen::MatrixXd M(n_ineq, rdim);
    Eigen::VectorXd b(n_ineq);
    Eigen::VectorXd row_scale = Eigen::VectorXd::Ones(n_ineq);
    {
        const Eigen::MatrixXd GZ = n_ineq > 0 ? Eigen::MatrixXd(problem.ineq_lhs * Z)
                                              : Eigen::MatrixXd(0, rdim);
        const Eigen::VectorXd bz =
            n_ineq > 0 ? Eigen::VectorXd(problem.ineq_rhs - problem.ineq_lhs * z_p)
                       : Eigen::VectorXd(0);
        for (int i = 0; i < n_ineq; ++i) {
            const double norm = GZ.row(i).norm();
            if (norm <= 1e-14) {
                if (bz(i) < -tol) throw InfeasibleProblem("constraint unsatisfiable on the equality manifold");
                row_scale(i) = 1.0;
                M.row(i).setZero();
                b(i) = std::max(bz(i), 1.0); // vacuous, keep slack positive
            } else {
                row_scale(i) = norm;
                M.row(i) = GZ.row(i) / norm;
                b(i) = bz(i) / norm;
            }
        }
    }

    const Eigen::MatrixXd P = Z.transpose() * H * Z;
    const Eigen::VectorXd c = Z.transpose() * (H * z_p + problem.linear);

    QpResult result;

    // Reduced starting point: prefer the caller's feasible point, fall back
    // to phase-1 simplex.
    Eigen::VectorXd y;
    bool have_start = false;
    if (feasible_start && feasible_start->size() == dim) {
        const Eigen::VectorXd cand = Z.transpose() * (*feasible_start - z_p);
        bool ok = n_eq == 0 ||
                  (problem.eq_lhs * (*feasible_start) - problem.eq_rhs).cwiseAbs().maxCoeff() <=
                      1e-7 * std::max(1.0, problem.eq_rhs.cwiseAbs().maxCoeff());
        if (ok && n_ineq > 0) ok = ((M * cand - b).maxCoeff() <= tol);
        if (ok) {
            y = cand;
            have_start = true;
        }
    }
    if (!have_start) {
        if (rdim == 0) {
            y.resize(0);
        } else if (n_ineq == 0) {
            y = Eigen::VectorXd::Zero(rdim);
        } else {
            LinearFeasibilityProblem reduced;
            reduced.dim = rdim;
            reduced.ineq_lhs = M;
            reduced.ineq_rhs = b;
            const FeasibilityResult feas = solve_feasibility(reduced, tol);
            if (feas.status == SolveStatus::kInfeasible)
                throw InfeasibleProblem("no point satisfies the constraint system");
            if (feas.status != SolveStatus::kOptimal)
                throw SolverError("phase-1 start for the active-set method did not terminate");
            y = feas.point;
        }
    }

    // Primal active-set iteration on the reduced problem.
    Eigen::LLT<Eigen::MatrixXd> llt;
    bool have_llt = false;
    if (rdim > 0) {
        llt.compute(P);
        have_llt = llt.info() == Eigen::Success;
    }

    std::vector<int> working; // active rows, kept sorted by insertion need only
    const double step_tol = 1e-12;
    int iters = 0;
    if (rdim > 0) {
        while (true) {
            if (iters++ >= kQpIterationCap)
                throw SolverError("active-set iteration cap exceeded (" +
                                  std::to_string(kQpIterationCap) + ")");

            const Eigen::VectorXd grad = P * y + c;
            const int nw = static_cast<int>(working.size());
            Eigen::VectorXd p_step(rdim);
            Eigen::VectorXd lambda(nw);

            if (have_llt) {
                if (nw == 0) {
                    p_step = -llt.solve(grad);
                } else {
                    Eigen::MatrixXd Aw(nw, rdim);
                    for (int i = 0; i < nw; ++i) Aw.row(i) = M.row(working[static_cast<size_t>(i)]);
                    const Eigen::MatrixXd PiAt = llt.solve(Aw.transpose());
                    const Eigen::VectorXd Pig = llt.solve(grad);
                    const Eigen::MatrixXd S = Aw * PiAt;
                    lambda = S.ldlt().solve(-Aw * Pig);
                    p_step = -(Pig + PiAt * lambda);
                }
            } else {
                // Semidefinite reduced Hessian: bordered KKT solve.
                Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(rdim + nw, rdim + nw);
                kkt.topLeftCorner(rdim, rdim) = P;
                for (int i = 0; i < nw; ++i) {
                    kkt.block(0, rdim + i, rdim, 1) = M.row(working[static_cast<size_t>(i)]).transpose();
                    kkt.block(rdim + i, 0, 1, rdim) = M.row(working[static_cast<size_t>(i)]);
                }
                Eigen::VectorXd rhs = Eigen::VectorXd::Zero(rdim + nw);
                rhs.head(rdim) = -grad;
                Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
                if (!lu.isInvertible())
                    throw SolverError("singular KKT system: objective not strictly convex on the active set");
                const Eigen::VectorXd sol = lu.solve(rhs);
                p_step = sol.head(rdim);
                lambda = sol.tail(nw);
            }

            if (p_step.cwiseAbs().maxCoeff() <= step_tol * (1.0 + y.cwiseAbs().maxCoeff())) {
                int drop = -1;
                for (int i = 0; i < nw; ++i) {
                    if (lambda(i) < -tol) {
                        if (drop < 0 || working[static_cast<size_t>(i)] < working[static_cast<size_t>(drop)])
                            drop = i;
                    }
                }
                if (drop < 0) {
                    result.ineq_multipliers = Eigen::VectorXd::Zero(n_ineq);
                    for (int i = 0; i < nw; ++i) {
                        const int row = working[static_cast<size_t>(i)];
                        result.ineq_multipliers(row) = std::max(lambda(i), 0.0) / row_scale(row);
                    }
                    break;
                }
                working.erase(working.begin() + drop);
                continue;
            }

            double alpha = 1.0;
            int blocking = -1;
            for (int i = 0; i < n_ineq; ++i) {
                if (std::find(working.begin(), working.end(), i) != working.end()) continue;
                const double mp = M.row(i).dot(p_step);
                if (mp <= 1e-12) continue;
                const double gap = std::max(b(i) - M.row(i).dot(y), 0.0);
                const double a = gap / mp;
                if (a < alpha - 1e-15) {
                    alpha = a;
                    blocking = i;
                } else if (blocking >= 0 && std::abs(a - alpha) <= 1e-15 && i < blocking) {
                    blocking = i;
                }
            }
            y += alpha * p_step;
            if (blocking >= 0 && alpha < 1.0) {
                working.push_back(blocking);
            }
        }
    } else {
        result.ineq_multipliers = Eigen::VectorXd::Zero(n_ineq);
    }
    result.iterations = iters;

    Eigen::VectorXd z = z_p;
    if (rdim > 0) z = z_p + Z * y;
    result.point = z;
    if (result.ineq_multipliers.size() != n_ineq)
        result.ineq_multipliers = Eigen::VectorXd::Zero(n_ineq);

    // Equality multipliers from least squares on the stationarity condition.
    Eigen::VectorXd stationarity_vec = H * z + problem.linear;
    if (n_ineq > 0)
        stationarity_vec += problem.ineq_lhs.transpose() * result.ineq_multipliers;
    if (n_eq > 0) {
        Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(
            Eigen::MatrixXd(problem.eq_lhs.transpose()));
        result.eq_multipliers = cod.solve(-stationarity_vec);
        stationarity_vec += problem.eq_lhs.transpose() * result.eq_multipliers;
    } else {
        result.eq_multipliers = Eigen::VectorXd::Zero(0);
    }

    const double grad_scale =
        std::max(1.0, (H * z + problem.linear).cwiseAbs().maxCoeff());
    result.stationarity = stationarity_vec.cwiseAbs().maxCoeff() / grad_scale;
    double primal = 0.0;
    if (n_ineq > 0) primal = std::max(primal, (problem.ineq_lhs * z - problem.ineq_rhs).maxCoeff());
    if (n_eq > 0) primal = std::max(primal, (problem.eq_lhs * z - problem.eq_rhs).cwiseAbs().maxCoeff());
    result.primal_residual = std::max(primal, 0.0);
    double compl_res = 0.0;
    for (int i = 0; i < n_ineq; ++i) {
        compl_res = std::max(compl_res,
                             std::abs(result.ineq_multipliers(i) *
                                      (problem.ineq_lhs.row(i).dot(z) - problem.ineq_rhs(i))));
    }
    result.complementarity = compl_res;

    const double check_tol = std::max(tol, 1e-8);
    if (result.stationarity > check_tol || result.primal_residual > check_tol)
        throw SolverError("active-set method terminated with residuals above tolerance: " +
                          format_residuals(result.stationarity, result.primal_residual,
                                           result.complementarity));
    return result;
}

} // namespace ogdc
