#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ogdc/geometry.hpp"
#include "oracles.hpp"

using namespace ogdc;

namespace {

Polytope random_bounded_polytope(std::mt19937& rng, int n) {
    // Box plus a few random cutting planes: bounded with 0 interior by
    // construction.
    std::uniform_real_distribution<double> width(0.5, 2.5);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::VectorXd half(n);
    for (int i = 0; i < n; ++i) half(i) = width(rng);

    const int extra = static_cast<int>(rng() % 3);
    Eigen::MatrixXd normals(2 * n + extra, n);
    Eigen::VectorXd offsets(2 * n + extra);
    for (int i = 0; i < n; ++i) {
        normals.row(2 * i).setZero();
        normals(2 * i, i) = 1.0;
        offsets(2 * i) = half(i);
        normals.row(2 * i + 1).setZero();
        normals(2 * i + 1, i) = -1.0;
        offsets(2 * i + 1) = half(i);
    }
    for (int k = 0; k < extra; ++k) {
        Eigen::VectorXd normal(n);
        double norm = 0.0;
        do {
            for (int j = 0; j < n; ++j) normal(j) = unit(rng);
            norm = normal.norm();
        } while (norm < 0.1);
        normals.row(2 * n + k) = normal.transpose();
        offsets(2 * n + k) = 0.3 + std::abs(unit(rng)) * normal.norm();
    }
    return Polytope(normals, offsets);
}

Eigen::VectorXd random_point(std::mt19937& rng, int n, double radius) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x(i) = radius * unit(rng);
    return x;
}

} // namespace

TEST_CASE("construction validates the half-space data") {
    Eigen::MatrixXd normals(3, 2);
    normals << 1.0, 0.0, -1.0, 0.0, 0.0, 0.0;
    Eigen::VectorXd offsets(3);
    offsets << 1.0, 1.0, 1.0;
    CHECK_THROWS_AS(Polytope(normals, offsets), std::invalid_argument); // zero row

    Eigen::MatrixXd half_space(1, 1);
    half_space << 1.0;
    CHECK_THROWS_AS(Polytope(half_space, Eigen::VectorXd::Ones(1)),
                    std::invalid_argument); // unbounded

    Eigen::MatrixXd shifted(2, 1);
    shifted << 1.0, -1.0;
    Eigen::VectorXd away(2);
    away << 3.0, -1.0; // 1 <= x <= 3 excludes the origin
    CHECK_THROWS_AS(Polytope(shifted, away), std::invalid_argument);
}

TEST_CASE("membership on boxes") {
    const auto box = Polytope::box(Eigen::Vector2d(1.0, 1.0));
    CHECK(box.contains(Eigen::Vector2d(0.0, 0.0)));
    CHECK(box.contains(Eigen::Vector2d(1.0, 1.0), 0.0)); // boundary
    CHECK_FALSE(box.contains(Eigen::Vector2d(1.0 + 1e-6, 0.0), 0.0));

    const auto input_set = Polytope::box(Eigen::VectorXd::Constant(1, 4.0));
    CHECK_FALSE(input_set.contains(Eigen::VectorXd::Constant(1, 4.5)));

    CHECK_THROWS_AS(box.contains(Eigen::Vector3d(0, 0, 0)), std::invalid_argument);
}

TEST_CASE("shrink tightens unit-row offsets by the margin exactly") {
    const auto box = Polytope::box(Eigen::Vector2d(1.0, 1.0));
    const auto tightened = shrink(box, 0.01);
    CHECK(tightened.offsets().isApproxToConstant(0.99, 1e-15));

    const auto same = shrink(box, 0.0);
    CHECK(same.offsets() == box.offsets());
    CHECK(same.normals() == box.normals());
}

TEST_CASE("shrink subtracts margin times the raw row norm") {
    // Row (3,4) with offset 10 and margin 0.1 tightens to the half space
    // 3x + 4y <= 9.5; verify as a set since rows are stored normalized.
    Eigen::MatrixXd normals(3, 2);
    normals << 3.0, 4.0, -1.0, 0.0, 0.0, -1.0;
    Eigen::VectorXd offsets(3);
    offsets << 10.0, 1.0, 1.0;
    const Polytope p(normals, offsets);
    const Polytope t = shrink(p, 0.1);

    const Eigen::Vector2d on_new_boundary = 9.5 / 25.0 * Eigen::Vector2d(3.0, 4.0);
    CHECK(t.contains(on_new_boundary, 1e-12));
    CHECK_FALSE(t.contains(on_new_boundary + 1e-6 * Eigen::Vector2d(0.6, 0.8), 0.0));
    CHECK(p.contains(on_new_boundary + 0.09 * Eigen::Vector2d(0.6, 0.8), 1e-12));
}

TEST_CASE("oversized margin raises the infeasible-shrink error") {
    const auto box = Polytope::box(Eigen::Vector2d(1.0, 1.0));
    CHECK_THROWS_AS(shrink(box, 1.5), InfeasibleProblem);
}

TEST_CASE("projection is the identity inside the set") {
    const auto box = Polytope::box(Eigen::Vector2d(1.0, 1.0));
    const Eigen::Vector2d x(0.3, -0.7);
    CHECK((project(box, x) - x).norm() == 0.0);
}

TEST_CASE("box projection clamps componentwise") {
    const auto box = Polytope::box(Eigen::Vector2d(1.0, 1.0));
    const Eigen::Vector2d p = project(box, Eigen::Vector2d(2.0, 0.5));
    CHECK((p - Eigen::Vector2d(1.0, 0.5)).cwiseAbs().maxCoeff() <= 1e-10);
}

TEST_CASE("projection matches the exhaustive active-set oracle") {
    std::mt19937 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Polytope p = random_bounded_polytope(rng, n);
        const Eigen::VectorXd x = random_point(rng, n, 4.0);
        const auto expected = oracle::brute_force_projection(p.normals(), p.offsets(), x);
        REQUIRE(expected.has_value());
        const Eigen::VectorXd got = project(p, x);
        CHECK((got - *expected).cwiseAbs().maxCoeff() <= 1e-7);
    }
}

TEST_CASE("projection satisfies the variational inequality at the vertices") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 2);
        const Polytope p = random_bounded_polytope(rng, n);
        const Eigen::VectorXd x = random_point(rng, n, 5.0);
        const Eigen::VectorXd proj = project(p, x);
        CHECK(p.contains(proj, 1e-8));
        for (const auto& v : vertices(p))
            CHECK((x - proj).dot(v - proj) <= 1e-7);
    }
}

TEST_CASE("projection is idempotent and nonexpansive") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Polytope p = random_bounded_polytope(rng, n);
        const Eigen::VectorXd x = random_point(rng, n, 4.0);
        const Eigen::VectorXd y = random_point(rng, n, 4.0);
        const Eigen::VectorXd px = project(p, x);
        const Eigen::VectorXd py = project(p, y);
        CHECK((project(p, px) - px).norm() <= 1e-9);
        CHECK((px - py).norm() <= (x - y).norm() + 1e-12);
    }
}

TEST_CASE("vertices of boxes and simplices") {
    const auto box = Polytope::box(Eigen::Vector2d(1.0, 1.0));
    auto verts = vertices(box);
    REQUIRE(verts.size() == 4);
    for (double sx : {-1.0, 1.0})
        for (double sy : {-1.0, 1.0}) {
            const Eigen::Vector2d corner(sx, sy);
            CHECK(std::any_of(verts.begin(), verts.end(), [&](const Eigen::VectorXd& v) {
                return (v - corner).cwiseAbs().maxCoeff() <= 1e-10;
            }));
        }

    // x >= -eps-free simplex around the origin is not allowed (0 must be
    // interior), so test the shifted standard simplex via raw half spaces:
    // x >= -0.25, y >= -0.25, x + y <= 1.
    Eigen::MatrixXd normals(3, 2);
    normals << -1.0, 0.0, 0.0, -1.0, 1.0, 1.0;
    Eigen::VectorXd offsets(3);
    offsets << 0.25, 0.25, 1.0;
    const Polytope simplex(normals, offsets);
    verts = vertices(simplex);
    CHECK(verts.size() == 3);
}

TEST_CASE("vertex enumeration matches the facet-subset oracle") {
    std::mt19937 rng(24);
    for (int trial = 0; trial < 60; ++trial) {
        const Polytope p = random_bounded_polytope(rng, 3);
        const auto got = vertices(p);
        const auto expected = oracle::brute_force_vertices(p.normals(), p.offsets());
        REQUIRE(got.size() == expected.size());
        for (const auto& v : expected) {
            CHECK(std::any_of(got.begin(), got.end(), [&](const Eigen::VectorXd& w) {
                return (w - v).cwiseAbs().maxCoeff() <= 1e-7;
            }));
        }
    }
}

TEST_CASE("vertex enumeration refuses high dimensions") {
    const auto box = Polytope::box(Eigen::VectorXd::Ones(7));
    CHECK_THROWS_AS(vertices(box), std::invalid_argument);
}

TEST_CASE("diameters of simple sets") {
    CHECK(diameter(Polytope::box(Eigen::Vector2d(1.0, 1.0))) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    CHECK(diameter(Polytope::box(Eigen::VectorXd::Constant(1, 4.0))) ==
          doctest::Approx(8.0).epsilon(1e-12));
    const auto segment = Polytope::box(Eigen::VectorXd::Constant(1, -1.0),
                                       Eigen::VectorXd::Constant(1, 3.0));
    CHECK(diameter(segment) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("shrink is monotone and keeps the margin property") {
    std::mt19937 rng(25);
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 3);
        const Polytope p = random_bounded_polytope(rng, n);
        const double d1 = 0.02, d2 = 0.08;
        const Polytope s1 = shrink(p, d1);
        const Polytope s2 = shrink(p, d2);
        for (const auto& v : vertices(s2)) {
            CHECK(s1.contains(v, 1e-9));
            CHECK(p.contains(v, 1e-9));
        }
        // Defining property: any margin-bounded perturbation of a point of
        // the tightened set stays inside the original set.
        for (const auto& v : vertices(s1)) {
            for (int k = 0; k < 10; ++k) {
                Eigen::VectorXd r(n);
                for (int i = 0; i < n; ++i) r(i) = unit(rng);
                if (r.norm() > 1e-9) r *= d1 / r.norm();
                CHECK(p.contains(v + r, 1e-9));
            }
        }
    }
}
