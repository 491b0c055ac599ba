#pragma once

// Test-only reference implementations. These deliberately avoid the library
// solver paths so they can serve as independent cross-checks.

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

// Minimize 1/2 z'Hz + q'z s.t. Gz <= h (and optional Ez = f) by exhaustive
// enumeration of facet subsets: for each subset treated as active, solve the
// equality KKT system and keep the best primal-feasible candidate. With H
// positive definite the optimum arises from its own active set, so the
// minimum over feasible candidates is the global optimum.
inline std::optional<Eigen::VectorXd> brute_force_qp(
    const Eigen::MatrixXd& H, const Eigen::VectorXd& q,
    const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
    const Eigen::MatrixXd& E = Eigen::MatrixXd(),
    const Eigen::VectorXd& f = Eigen::VectorXd(),
    double feas_tol = 1e-8) {
    const int n = static_cast<int>(H.rows());
    const int c = static_cast<int>(G.rows());
    const int ne = static_cast<int>(E.rows());

    std::optional<Eigen::VectorXd> best;
    double best_value = std::numeric_limits<double>::infinity();

    for (unsigned mask = 0; mask < (1u << c); ++mask) {
        std::vector<int> active;
        for (int i = 0; i < c; ++i)
            if (mask & (1u << i)) active.push_back(i);
        const int na = static_cast<int>(active.size());
        if (na + ne > n) continue;

        const int dim = n + na + ne;
        Eigen::MatrixXd kkt = Eigen::MatrixXd::Zero(dim, dim);
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(dim);
        kkt.topLeftCorner(n, n) = H;
        rhs.head(n) = -q;
        for (int i = 0; i < na; ++i) {
            kkt.block(0, n + i, n, 1) = G.row(active[static_cast<size_t>(i)]).transpose();
            kkt.block(n + i, 0, 1, n) = G.row(active[static_cast<size_t>(i)]);
            rhs(n + i) = h(active[static_cast<size_t>(i)]);
        }
        for (int i = 0; i < ne; ++i) {
            kkt.block(0, n + na + i, n, 1) = E.row(i).transpose();
            kkt.block(n + na + i, 0, 1, n) = E.row(i);
            rhs(n + na + i) = f(i);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(kkt);
        if (!lu.isInvertible()) continue;
        const Eigen::VectorXd sol = lu.solve(rhs);
        const Eigen::VectorXd z = sol.head(n);

        if (c > 0 && (G * z - h).maxCoeff() > feas_tol) continue;
        if (ne > 0 && (E * z - f).cwiseAbs().maxCoeff() > feas_tol) continue;
        const double value = 0.5 * z.dot(H * z) + q.dot(z);
        if (value < best_value) {
            best_value = value;
            best = z;
        }
    }
    return best;
}

// Euclidean projection via the same exhaustive enumeration.
inline std::optional<Eigen::VectorXd> brute_force_projection(
    const Eigen::MatrixXd& G, const Eigen::VectorXd& h, const Eigen::VectorXd& x) {
    const int n = static_cast<int>(x.size());
    return brute_force_qp(Eigen::MatrixXd::Identity(n, n), -x, G, h);
}

// All facet n-subsets with feasibility filtering; duplicates merged.
inline std::vector<Eigen::VectorXd> brute_force_vertices(
    const Eigen::MatrixXd& G, const Eigen::VectorXd& h,
    double feas_tol = 1e-8, double merge_tol = 1e-8) {
    const int n = static_cast<int>(G.cols());
    const int c = static_cast<int>(G.rows());
    std::vector<Eigen::VectorXd> found;
    std::vector<int> idx(static_cast<size_t>(n));

    auto consider = [&](const std::vector<int>& rows) {
        Eigen::MatrixXd A(n, n);
        Eigen::VectorXd b(n);
        for (int i = 0; i < n; ++i) {
            A.row(i) = G.row(rows[static_cast<size_t>(i)]);
            b(i) = h(rows[static_cast<size_t>(i)]);
        }
        Eigen::FullPivLU<Eigen::MatrixXd> lu(A);
        if (!lu.isInvertible()) return;
        const Eigen::VectorXd v = lu.solve(b);
        if ((G * v - h).maxCoeff() > feas_tol) return;
        for (const auto& w : found)
            if ((w - v).cwiseAbs().maxCoeff() <= merge_tol) return;
        found.push_back(v);
    };

    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == n) {
            consider(idx);
            return;
        }
        for (int i = start; i < c; ++i) {
            idx[static_cast<size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (n > 0 && c >= n) rec(0, 0);
    return found;
}

// Largest singular value through Jacobi SVD (independent of power iteration).
inline double svd_norm(const Eigen::MatrixXd& A) {
    if (A.size() == 0) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A);
    return svd.singularValues()(0);
}

// Plain multiply-accumulate x' = Ax + Bu without any linear-algebra library
// primitives.
inline Eigen::VectorXd naive_step(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                  const Eigen::VectorXd& x, const Eigen::VectorXd& u) {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(A.rows());
    for (int i = 0; i < A.rows(); ++i) {
        double acc = 0.0;
        for (int j = 0; j < A.cols(); ++j) acc += A(i, j) * x(j);
        for (int j = 0; j < B.cols(); ++j) acc += B(i, j) * u(j);
        out(i) = acc;
    }
    return out;
}

// Elementwise quadratic form 1/2 (x-t)'W(x-t).
inline double naive_quadratic(const Eigen::MatrixXd& W, const Eigen::VectorXd& x,
                              const Eigen::VectorXd& t) {
    double acc = 0.0;
    for (int i = 0; i < W.rows(); ++i)
        for (int j = 0; j < W.cols(); ++j) acc += (x(i) - t(i)) * W(i, j) * (x(j) - t(j));
    return 0.5 * acc;
}

} // namespace oracle
