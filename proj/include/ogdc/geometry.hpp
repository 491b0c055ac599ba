#pragma once

#include <vector>

#include <Eigen/Dense>

#include "ogdc/optim.hpp"

namespace ogdc {

/// Compact H-representation polytope { x : normals * x <= offsets } with 0
/// strictly in its interior. Rows are normalized to unit Euclidean norm at
/// construction and validated: no zero rows, positive offsets, boundedness
/// (2n support-function LPs along the coordinate axes).
///
/// Instances are immutable after construction and safe to share across
/// threads; all operations on them are pure.
class Polytope {
public:
    Polytope(const Eigen::MatrixXd& normals, const Eigen::VectorXd& offsets);

    static Polytope box(const Eigen::VectorXd& half_widths);
    static Polytope box(const Eigen::VectorXd& lower, const Eigen::VectorXd& upper);

    int dim() const { return static_cast<int>(normals_.cols()); }
    int facets() const { return static_cast<int>(normals_.rows()); }
    const Eigen::MatrixXd& normals() const { return normals_; }
    const Eigen::VectorXd& offsets() const { return offsets_; }

    /// True iff normals * x <= offsets + tol componentwise. With unit-norm
    /// rows the tolerance is a geometric distance.
    bool contains(const Eigen::VectorXd& x, double tol = kDefaultSolverTol) const;

    /// Largest violation max_i(normals_i . x - offsets_i); <= 0 inside.
    double violation(const Eigen::VectorXd& x) const;

    /// Constraint blocks as a feasibility problem over this set.
    LinearFeasibilityProblem feasibility_problem() const;

private:
    Eigen::MatrixXd normals_;
    Eigen::VectorXd offsets_;
};

/// Inward tightening by a Euclidean margin: offsets_i - margin * |row_i|
/// (rows are unit norm, so the margin subtracts directly). Every point of
/// the result keeps distance >= margin to the complement of the input set.
/// Throws InfeasibleProblem when the margin empties the set.
Polytope shrink(const Polytope& p, double margin);

/// Uniform scaling of the offsets: { x : normals x <= factor * offsets }.
Polytope scale(const Polytope& p, double factor);

/// Unique Euclidean projection onto the set (dual of a strictly convex QP).
Eigen::VectorXd project(const Polytope& p, const Eigen::VectorXd& x,
                        double tol = kDefaultSolverTol);

/// All vertices by facet-subset enumeration with rank and feasibility
/// filtering; duplicates merged within 1e-8. Intended for offline use at
/// desk scale; throws above max_dim.
std::vector<Eigen::VectorXd> vertices(const Polytope& p, int max_dim = 6);

/// Maximum pairwise vertex distance (exact for polytopes).
double diameter(const Polytope& p);

/// Support function max { direction . x : x in p }.
double support(const Polytope& p, const Eigen::VectorXd& direction);

} // namespace ogdc
