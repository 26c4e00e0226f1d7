#include <doctest.h>

#include <cmath>

#include "leigq/catalog.hpp"
#include "leigq/multistart.hpp"
#include "leigq/newton.hpp"
#include "leigq/refine.hpp"
#include "support.hpp"

using namespace leigq;
using leigq::test::max_abs_diff;

TEST_CASE("RefineConfig: validation") {
    RefineConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.radii = {1e-4, 1e-2};
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = RefineConfig{};
    cfg.radii = {1e-2, -1e-3};
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = RefineConfig{};
    cfg.samples_per_radius = 0;
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("nelder_mead: minimizes a shifted quadratic") {
    const Vec4 target(1.0, -2.0, 0.5, 3.0);
    auto f = [&](const Vec4& p) { return (p - target).squaredNorm() + 2.0 * std::pow(p(0) - target(0), 2); };
    const SimplexResult r = nelder_mead(f, Vec4::Zero(), 1.0, 2000, 1e-10);
    CHECK((r.point - target).norm() <= 1e-6);
    CHECK(r.value <= 1e-12);
    CHECK(r.evaluations <= 2000);
}

TEST_CASE("refine_certificate: exact eigenvalue is kept") {
    const QMatrix A = catalog::huang_so_2_5();
    const RefinedValue r = refine_certificate(A, std::sqrt(2.0));
    CHECK(max_abs_diff(r.lambda, std::sqrt(2.0)) <= 1e-12);
    CHECK(r.phi <= res_min(A, std::sqrt(2.0)).sigma);
}

TEST_CASE("refine_certificate: HS2.7 from a crude on-sphere sample") {
    const QMatrix A = catalog::huang_so_2_7();
    NewtonSettings loose;
    loose.abs_tol = 1e-6;
    loose.rel_tol = 0.0;
    test::Random rng(63);
    int refined = 0;
    for (int t = 0; t < 10; ++t) {
        const QVector x0 = rng.vector(2);
        const NewtonResult crude = newton_solve(A, init_lambda(A, x0), x0, loose);
        if (!crude.converged) continue;
        const double phi0 = res_min(A, crude.lambda).sigma;
        if (phi0 <= 1e-12) continue;
        RefineConfig cfg;
        cfg.seed = t;
        const RefinedValue r = refine_certificate(A, crude.lambda, cfg);
        CHECK(r.phi <= 1e-14);
        CHECK(r.phi <= phi0);
        ++refined;
    }
    CHECK(refined >= 3);
}

TEST_CASE("refine_certificate: A52 from 6.5e-6 k improves") {
    const QMatrix A = catalog::mvps_52();
    const Quaternion l0{0, 0, 0, 6.5e-6};
    const double phi0 = res_min(A, l0).sigma;
    const RefinedValue r = refine_certificate(A, l0);
    CHECK(r.phi < phi0);
}

TEST_CASE("polish_pair: examples") {
    const QMatrix D = QMatrix::diagonal({2.0, 5.0});
    const Eigenpair exact = polish_pair(D, 2.0, QVector::unit(2, 0));
    CHECK(max_abs_diff(exact.lambda, 2.0) <= 1e-14);
    CHECK(max_abs_diff(exact.vector, QVector::unit(2, 0)) <= 1e-14);

    const QMatrix A = catalog::huang_so_2_5();
    const MinResidual m = res_min(A, std::sqrt(2.0));
    const Quaternion l0 = std::sqrt(2.0) + Quaternion(1e-12, -1e-12, 0, 0);
    QVector v0 = m.vector;
    v0[1] += Quaternion(0, 1e-12, 0, 0);
    CHECK(res_pair(A, l0, v0).value <= 1e-11);
    const Eigenpair p = polish_pair(A, l0, v0);
    CHECK(p.cert.res_pair <= 1e-15);
    CHECK(p.source == PairSource::refinement);

    const QMatrix F = catalog::five_eigenvalues_3x3();
    for (const auto& ref : catalog::five_eigenvalues_3x3_reference()) {
        const MinResidual fm = res_min(F, ref);
        const Eigenpair fp = polish_pair(F, ref, fm.vector);
        CHECK(fp.cert.res_min <= 4e-15 * matrix_scale(F));
    }
}

TEST_CASE("property: refinement never worsens res_min") {
    test::Random rng(61);
    for (int t = 0; t < 30; ++t) {
        const QMatrix A = rng.matrix(2 + t % 3);
        const Quaternion l0 = rng.quaternion();
        const double phi0 = res_min(A, l0).sigma;
        RefineConfig cfg;
        cfg.seed = t;
        CHECK(refine_certificate(A, l0, cfg).phi <= phi0);
        CHECK(polish_pair(A, l0, rng.vector(A.size()), cfg).cert.res_min <= phi0);
        CHECK(refine(A, l0, cfg).cert.res_min <= phi0);
    }
}

TEST_CASE("property: stage 1 commutes with real shifts") {
    test::Random rng(62);
    const QMatrix A = catalog::huang_so_2_6();
    for (int t = 0; t < 10; ++t) {
        const double alpha = rng.normal();
        const Quaternion l0 = Quaternion(0.5, 0.5, 0.5, -0.5) + rng.quaternion() * 1e-8;
        RefineConfig cfg;
        cfg.seed = 9;
        const RefinedValue a = refine_certificate(A, l0, cfg);
        const RefinedValue b =
            refine_certificate(A + QMatrix::identity(2) * alpha, l0 + alpha, cfg);
        CHECK(distance(b.lambda, a.lambda + alpha) <= 1e-12 * (1 + a.lambda.abs()));
    }
}

TEST_CASE("property: refining a polished pair is idempotent") {
    SolveConfig cfg;
    cfg.k = 5;
    cfg.seed = 3;
    const QMatrix F = catalog::five_eigenvalues_3x3();
    const SolveResult r = solve_left(F, cfg);
    REQUIRE(r.found() == 5);
    for (const auto& p : r.pairs) {
        const Eigenpair again = refine(F, p.lambda);
        CHECK(distance(again.lambda, p.lambda) <= 1e-12 * (1 + p.lambda.abs()));
    }
}
