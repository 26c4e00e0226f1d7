#include <doctest.h>

#include <cmath>

#include "leigq/catalog.hpp"
#include "leigq/multistart.hpp"
#include "leigq/sphere.hpp"
#include "support.hpp"

using namespace leigq;
using leigq::test::max_abs_diff;

namespace {

// Random orthonormal frame of R^4; column 3 is the plane normal.
Mat4 random_frame(test::Random& rng) {
    Mat4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) m(r, c) = rng.normal();
    Eigen::HouseholderQR<Mat4> qr(m);
    return qr.householderQ();
}

std::vector<Quaternion> sphere_points(test::Random& rng, const Quaternion& center, double radius,
                                      const Mat4& frame, std::size_t m) {
    std::vector<Quaternion> pts;
    for (std::size_t k = 0; k < m; ++k) {
        Eigen::Vector3d u(rng.normal(), rng.normal(), rng.normal());
        u.normalize();
        const Vec4 p = rvec(center) + radius * frame.leftCols<3>() * u;
        pts.push_back(from_rvec(p));
    }
    return pts;
}

SolveResult samples(const QMatrix& A, std::size_t k, std::uint64_t seed) {
    SolveConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    return solve_left(A, cfg);
}

}  // namespace

TEST_CASE("fit_sphere: 20 exact points on the HS2.7 sphere") {
    test::Random rng(71);
    std::vector<Quaternion> pts;
    for (int k = 0; k < 20; ++k) {
        Eigen::Vector3d u(rng.normal(), rng.normal(), rng.normal());
        u.normalize();
        pts.push_back(Quaternion(2.0 + u(0), 0.0, u(1), u(2)));
    }
    const auto s = fit_sphere(pts);
    REQUIRE(s.has_value());
    CHECK(max_abs_diff(s->center, 2.0) <= 1e-12);
    CHECK(s->radius == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(s->inliers.size() == 20);
    CHECK(s->max_deviation <= 1e-12);
    CHECK(std::abs(std::abs(s->normal(1)) - 1.0) <= 1e-12);
}

TEST_CASE("fit_sphere: degenerate inputs") {
    CHECK_FALSE(fit_sphere({1.0, 2.0, 3.0, 4.0}).has_value());
    CHECK_FALSE(fit_sphere(std::vector<Quaternion>(8, Quaternion(1, 2, 3, 4))).has_value());
    std::vector<Quaternion> line;
    for (int k = 0; k < 10; ++k) line.push_back(Quaternion(k, 2.0 * k, 0, 0));
    CHECK_FALSE(fit_sphere(line).has_value());
}

TEST_CASE("fit_sphere: outliers are trimmed") {
    test::Random rng(72);
    const Mat4 frame = random_frame(rng);
    auto pts = sphere_points(rng, Quaternion(1, -2, 3, 0.5), 2.5, frame, 18);
    pts.push_back(Quaternion(10, 10, 10, 10));
    pts.push_back(Quaternion(-7, 3, 0, 1));
    const auto s = fit_sphere(pts);
    REQUIRE(s.has_value());
    CHECK(s->inliers.size() == 18);
    CHECK(s->radius == doctest::Approx(2.5).epsilon(1e-10));
    CHECK(s->inlier_fraction == doctest::Approx(0.9));
}

TEST_CASE("property: noiseless recovery of random spheres") {
    test::Random rng(73);
    for (int t = 0; t < 200; ++t) {
        const Mat4 frame = random_frame(rng);
        const Quaternion c = rng.quaternion() * 5.0;
        const double r = std::exp(rng.uniform(std::log(0.1), std::log(10.0)));
        const std::size_t m = 8 + t % 20;
        const auto pts = sphere_points(rng, c, r, frame, m);
        SphereFitConfig cfg;
        cfg.seed = t;
        const auto s = fit_sphere(pts, cfg);
        REQUIRE(s.has_value());
        CHECK(distance(s->center, c) <= 1e-10 * (c.abs() + r));
        CHECK(std::abs(s->radius - r) <= 1e-10 * r);
        CHECK(s->inliers.size() == m);
        CHECK(std::abs(s->normal.norm() - 1.0) <= 1e-14);
        CHECK(std::abs(std::abs(s->normal.dot(frame.col(3))) - 1.0) <= 1e-10);
        CHECK(s->plane_distance(s->center) <= 1e-10 * (1 + c.abs()));
    }
}

TEST_CASE("SphereModel: projection lands on the sphere") {
    test::Random rng(74);
    const Mat4 frame = random_frame(rng);
    const auto s = fit_sphere(sphere_points(rng, Quaternion(1, 1, 1, 1), 3.0, frame, 12));
    REQUIRE(s.has_value());
    for (int t = 0; t < 50; ++t) {
        const Quaternion p = rng.quaternion() * 4.0;
        CHECK(s->deviation(s->project(p)) <= 1e-12);
        CHECK(s->deviation(p) <= distance(p, s->center) + s->radius);
    }
}

TEST_CASE("property: HS2.7 spherical family is exact") {
    const QMatrix A = catalog::huang_so_2_7();
    test::Random rng(75);
    for (int t = 0; t < 100; ++t) {
        Eigen::Vector3d u(rng.normal(), rng.normal(), rng.normal());
        u.normalize();
        const double beta = u(0), gamma = u(1), delta = u(2);
        CHECK(res_min(A, Quaternion(2.0 - beta, 0.0, -delta, gamma)).sigma <= 1e-12);
    }
}

TEST_CASE("detect_components: HS2.7 with 20 samples") {
    const QMatrix A = catalog::huang_so_2_7();
    const SolveResult r = samples(A, 20, 1);
    REQUIRE(r.found() >= 8);
    const Components c = detect_components(A, r.pairs);
    REQUIRE(c.spheres.size() == 1);
    CHECK(c.isolated.empty());
    CHECK(max_abs_diff(c.spheres[0].center, 2.0) <= 1e-6);
    CHECK(c.spheres[0].radius == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("detect_components: sphere plus two isolated eigenvalues") {
    const QMatrix A = catalog::sphere_plus_isolated_4x4();
    const SolveResult r = samples(A, 20, 1);
    REQUIRE(r.found() == 20);
    const Components c = detect_components(A, r.pairs);
    REQUIRE(c.spheres.size() == 1);
    const SphereModel& s = c.spheres[0];
    CHECK(max_abs_diff(s.center, Quaternion(10, 4, -6, 4)) <= 1e-4);
    CHECK(s.radius == doctest::Approx(8.0).epsilon(1e-6));
    CHECK(s.inliers.size() >= 16);
    REQUIRE(c.isolated.size() == 2);
    for (const Quaternion& l : {Quaternion(-6, 6, -4, 8), Quaternion(-10, 8, -8, 2)}) {
        double best = INFINITY;
        for (const auto& p : c.isolated) best = std::min(best, distance(p.lambda, l));
        CHECK(best <= 1e-2);
    }
}

TEST_CASE("detect_components: five isolated eigenvalues") {
    const QMatrix A = catalog::five_eigenvalues_3x3();
    const SolveResult r = samples(A, 5, 1);
    REQUIRE(r.found() == 5);
    const Components c = detect_components(A, r.pairs);
    CHECK(c.spheres.empty());
    CHECK(c.isolated.size() == 5);
}

TEST_CASE("property: sphere inlier projections are validated by res_min") {
    for (const QMatrix& A : {catalog::huang_so_2_7(), catalog::rotation_2x2(), catalog::sphere_plus_isolated_4x4()}) {
        const SolveResult r = samples(A, 20, 2);
        const DetectConfig cfg;
        const Components c = detect_components(A, r.pairs, cfg);
        const double s = matrix_scale(A);
        REQUIRE(c.spheres.size() == 1);
        for (std::size_t idx : c.spheres[0].inliers) {
            const Quaternion proj = c.spheres[0].project(c.points[idx].lambda);
            CHECK(res_min(A, proj).sigma <= cfg.validation_tol * s);
        }
    }
}
