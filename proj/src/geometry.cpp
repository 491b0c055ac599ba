#include "ogdc/geometry.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace ogdc {

namespace {

constexpr double kInteriorTol = 1e-12;
constexpr double kVertexFeasTol = 1e-8;
constexpr double kVertexMergeTol = 1e-8;

} // namespace

Polytope::Polytope(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets) {
    if (normals.rows() == 0 || normals.cols() == 0)
        throw std::invalid_argument("polytope needs at least one half space and one dimension");
    if (normals.rows() != offsets.size())
        throw std::invalid_argument("row/offset count mismatch");

    normals_ = normals;
    offsets_ = offsets;
    for (int i = 0; i < normals_.rows(); ++i) {
        const double norm = normals_.row(i).norm();
        if (norm <= 0.0)
            throw std::invalid_argument("half-space normal " + std::to_string(i) + " is zero");
        normals_.row(i) /= norm;
        offsets_(i) /= norm;
    }
    if (offsets_.minCoeff() <= kInteriorTol)
        throw std::invalid_argument("origin is not strictly interior (offset " +
                                    std::to_string(offsets_.minCoeff()) + ")");

    // Boundedness via support LPs along +/- each coordinate axis.
    const LinearFeasibilityProblem constraints = feasibility_problem();
    for (int axis = 0; axis < dim(); ++axis) {
        for (double sign : {1.0, -1.0}) {
            Eigen::VectorXd direction = Eigen::VectorXd::Zero(dim());
            direction(axis) = sign;
            const LinearProgramResult lp = solve_lp(constraints, direction);
            if (lp.status == SolveStatus::kUnbounded)
                throw std::invalid_argument("set is unbounded along axis " + std::to_string(axis));
            if (lp.status != SolveStatus::kOptimal)
                throw SolverError("boundedness check failed to terminate");
        }
    }
}

Polytope Polytope::box(const Eigen::VectorXd& half_widths) {
    return box(-half_widths, half_widths);
}

Polytope Polytope::box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper) {
    if (lower.size() != upper.size())
        throw std::invalid_argument("box bound dimension mismatch");
    const int n = static_cast<int>(lower.size());
    Eigen::MatrixXd normals = Eigen::MatrixXd::Zero(2 * n, n);
    Eigen::VectorXd offsets(2 * n);
    for (int i = 0; i < n; ++i) {
        normals(2 * i, i) = 1.0;
        offsets(2 * i) = upper(i);
        normals(2 * i + 1, i) = -1.0;
        offsets(2 * i + 1) = -lower(i);
    }
    return Polytope(normals, offsets);
}

bool Polytope::contains(const Eigen::VectorXd& x, double tol) const {
    if (x.size() != dim())
        throw std::invalid_argument("point dimension mismatch");
    return violation(x) <= tol;
}

double Polytope::violation(const Eigen::VectorXd& x) const {
    return (normals_ * x - offsets_).maxCoeff();
}

LinearFeasibilityProblem Polytope::feasibility_problem() const {
    LinearFeasibilityProblem p;
    p.dim = dim();
    p.ineq_lhs = normals_;
    p.ineq_rhs = offsets_;
    return p;
}

Polytope shrink(const Polytope& p, double margin) {
    if (margin < 0.0) throw std::invalid_argument("margin must be nonnegative");
    const Eigen::VectorXd tightened = p.offsets().array() - margin;
    if (tightened.minCoeff() <= kInteriorTol) {
        std::ostringstream os;
        os << "margin " << margin << " empties the set (tightest offset "
           << p.offsets().minCoeff() << ")";
        throw InfeasibleProblem(os.str());
    }
    return Polytope(p.normals(), tightened);
}

Polytope scale(const Polytope& p, double factor) {
    if (factor <= 0.0) throw std::invalid_argument("scale factor must be positive");
    return Polytope(p.normals(), factor * p.offsets());
}

Eigen::VectorXd project(const Polytope& p, const Eigen::VectorXd& x, double tol) {
    if (x.size() != p.dim())
        throw std::invalid_argument("point dimension mismatch");
    if (p.contains(x, 0.0)) return x;
    ConvexQp qp;
    qp.hessian = Eigen::MatrixXd::Identity(p.dim(), p.dim());
    qp.linear = -x;
    qp.ineq_lhs = p.normals();
    qp.ineq_rhs = p.offsets();
    return solve_qp(qp, tol).point;
}

std::vector<Eigen::VectorXd> vertices(const Polytope& p, int max_dim) {
    const int n = p.dim();
    const int c = p.facets();
    if (n > max_dim)
        throw std::invalid_argument("vertex enumeration limited to dimension " +
                                    std::to_string(max_dim));

    std::vector<Eigen::VectorXd> found;
    std::vector<int> subset(static_cast<size_t>(n));

    auto consider = [&]() {
        Eigen::MatrixXd rows(n, n);
        Eigen::VectorXd rhs(n);
        for (int i = 0; i < n; ++i) {
            rows.row(i) = p.normals().row(subset[static_cast<size_t>(i)]);
            rhs(i) = p.offsets()(subset[static_cast<size_t>(i)]);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(rows);
        lu.setThreshold(1e-10);
        if (!lu.isInvertible()) return;
        const Eigen::VectorXd candidate = lu.solve(rhs);
        if (p.violation(candidate) > kVertexFeasTol) return;
        for (const auto& v : found)
            if ((v - candidate).cwiseAbs().maxCoeff() <= kVertexMergeTol) return;
        found.push_back(candidate);
    };

    // Lexicographic enumeration of all facet n-subsets.
    std::function<void(int, int)> recurse = [&](int start, int depth) {
        if (depth == n) {
            consider();
            return;
        }
        for (int i = start; i <= c - (n - depth); ++i) {
            subset[static_cast<size_t>(depth)] = i;
            recurse(i + 1, depth + 1);
        }
    };
    recurse(0, 0);

    if (found.empty())
        throw std::invalid_argument("degenerate set: no vertices found");
    return found;
}

double diameter(const Polytope& p) {
    const auto verts = vertices(p);
    double best = 0.0;
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            best = std::max(best, (verts[i] - verts[j]).norm());
    return best;
}

double support(const Polytope& p, const Eigen::VectorXd& direction) {
    if (direction.size() != p.dim())
        throw std::invalid_argument("direction dimension mismatch");
    const LinearProgramResult lp = solve_lp(p.feasibility_problem(), direction);
    if (lp.status != SolveStatus::kOptimal)
        throw SolverError("support LP did not reach an optimum");
    return lp.value;
}

} // namespace ogdc
