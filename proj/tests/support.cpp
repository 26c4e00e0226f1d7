#include "support.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "leigq/newton.hpp"

namespace leigq::test {

using cd = std::complex<double>;

Quaternion Random::unit_quaternion() {
    Quaternion q;
    do {
        q = quaternion();
    } while (q.abs() < 1e-3);
    return q / q.abs();
}

QVector Random::vector(std::size_t n) {
    QVector x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = quaternion();
    return x;
}

QMatrix Random::matrix(std::size_t n) {
    QMatrix A(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) A(r, s) = quaternion();
    return A;
}

Quaternion complex_oracle_product(const Quaternion& p, const Quaternion& q) {
    // q = z + w j with z = a + b i, w = c + d i.
    const cd pz{p.a, p.b}, pw{p.c, p.d}, qz{q.a, q.b}, qw{q.c, q.d};
    // [[pz, pw], [-conj pw, conj pz]] * [[qz, qw], [-conj qw, conj qz]], first row.
    const cd z = pz * qz - pw * std::conj(qw);
    const cd w = pz * qw + pw * std::conj(qz);
    return {z.real(), z.imag(), w.real(), w.imag()};
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
    return std::max({std::abs(p.a - q.a), std::abs(p.b - q.b), std::abs(p.c - q.c),
                     std::abs(p.d - q.d)});
}

double max_abs_diff(const QVector& x, const QVector& y) {
    double m = 0.0;
    for (std::size_t k = 0; k < x.size(); ++k) m = std::max(m, max_abs_diff(x[k], y[k]));
    return m;
}

double complex_res_min(const QMatrix& A, const Quaternion& lambda) {
    const ComplexMat c = chi(A.shifted(lambda));
    Eigen::JacobiSVD<ComplexMat> svd(c);
    return svd.singularValues().minCoeff();
}

namespace {

void record(SuiteResult& out, double err, double tol) {
    out.max_error = std::max(out.max_error, err);
    if (!(err <= tol)) ++out.failures;
}

double rel(double err, double scale) { return err / std::max(1.0, scale); }

}  // namespace

SuiteResult embedding_homomorphism_suite(std::size_t instances, double tol, std::uint64_t seed) {
    SuiteResult out{"embedding homomorphism", 0, 0, 0.0};
    Random rng(seed);
    for (std::size_t t = 0; t < instances; ++t) {
        const Quaternion p = rng.quaternion(), q = rng.quaternion();
        const double pq = p.abs() * q.abs();
        double err = 0.0;
        err = std::max(err, rel((left_matrix(p * q) - left_matrix(p) * left_matrix(q)).norm(), pq));
        err = std::max(err, rel((right_matrix(p * q) - right_matrix(q) * right_matrix(p)).norm(), pq));
        err = std::max(err, rel((left_matrix(p) * right_matrix(q) - right_matrix(q) * left_matrix(p)).norm(), pq));
        const double p4 = std::pow(p.norm2(), 2);
        err = std::max(err, std::abs(left_matrix(p).determinant() - p4) / std::max(1.0, p4));
        record(out, err, tol);
        ++out.instances;
    }
    return out;
}

SuiteResult embedding_intertwining_suite(std::size_t instances, double tol, std::uint64_t seed) {
    SuiteResult out{"embedding intertwining", 0, 0, 0.0};
    Random rng(seed);
    for (std::size_t t = 0; t < instances; ++t) {
        const std::size_t n = 3 + t % 6;
        const QMatrix A = rng.matrix(n), B = rng.matrix(n);
        const QVector x = rng.vector(n);
        const RealMat rA = rho(A);
        const double sA = rA.norm(), sB = rho(B).norm(), sx = rvec(x).norm();
        double err = 0.0;
        err = std::max(err, rel((rvec(A * x) - rA * rvec(x)).norm(), sA * sx));
        err = std::max(err, rel((rho(A * B) - rA * rho(B)).norm(), sA * sB));
        const ComplexMat cA = chi(A);
        err = std::max(err, rel((phi(A * x) - cA * phi(x)).norm(), sA * sx));
        err = std::max(err, rel((chi(A * B) - cA * chi(B)).norm(), sA * sB));
        err = std::max(err, rel((chi(A.adjoint()) - cA.adjoint()).norm(), sA));
        record(out, err, tol);
        ++out.instances;
    }
    return out;
}

SuiteResult rank_factor_suite(std::size_t instances, double tol, std::uint64_t seed) {
    SuiteResult out{"rank factor 4", 0, 0, 0.0};
    Random rng(seed);
    for (std::size_t t = 0; t < instances; ++t) {
        const std::size_t n = 2 + t % 5;
        const std::size_t zeros = 1 + t % (n - 1);
        std::vector<Quaternion> d(n, Quaternion(1.0));
        for (std::size_t z = 0; z < zeros; ++z) d[n - 1 - z] = 0.0;
        const QMatrix A = rng.matrix(n) * QMatrix::diagonal(d);
        const RealVec sv = singular_values(rho(A));
        const double cut = tol * sv(0);
        std::size_t rank = 0;
        for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv(k) > cut;
        // Error: the largest singular value that should vanish, relative to sigma_max.
        const std::size_t expected = 4 * (n - zeros);
        double err = sv.size() > static_cast<Eigen::Index>(expected)
                         ? sv(static_cast<Eigen::Index>(expected)) / sv(0)
                         : 0.0;
        if (rank != expected || rank % 4 != 0) err = std::max(err, 1.0);
        record(out, err, tol);
        ++out.instances;
    }
    return out;
}

QuadraticRate diag_quadratic_rate() {
    const QMatrix A = QMatrix::diagonal({2.0, 5.0});
    const Quaternion lambda0 = 2.01;
    const QVector x0 = regauge(QVector{1.0, 0.01}, 0);
    const QVector target{1.0, 0.0};
    QuadraticRate out;
    auto error = [&](const Quaternion& l, const QVector& x) {
        double e = distance(l, 2.0);
        for (std::size_t k = 0; k < 2; ++k) e = std::max(e, distance(x[k], target[k]));
        return e;
    };
    out.errors.push_back(error(lambda0, x0));
    NewtonSettings s;
    s.abs_tol = 1e-300;
    s.rel_tol = 1e-300;
    s.stall_window = 0;
    for (int k = 1; k <= 6; ++k) {
        s.max_iter = k;
        const NewtonResult r = newton_solve(A, lambda0, x0, s);
        if (r.iterations < k) break;
        out.errors.push_back(error(r.lambda, r.x));
    }
    std::vector<double> ratios;
    for (std::size_t k = 0; k + 1 < out.errors.size(); ++k)
        if (out.errors[k] > 1e-14 && out.errors[k + 1] > 0.0)
            ratios.push_back(out.errors[k + 1] / (out.errors[k] * out.errors[k]));
    if (ratios.size() > 3) ratios.erase(ratios.begin(), ratios.end() - 3);
    out.ratios = ratios.size();
    for (double c : ratios) out.fitted_c = std::max(out.fitted_c, c);
    NewtonSettings def;
    out.converged = newton_solve(A, lambda0, x0, def).converged;
    return out;
}

double spherical_kernel_residual() {
    const QMatrix A{{0.0, 1.0}, {-1.0, 0.0}};
    const double h = 1.0 / std::sqrt(2.0);
    const QVector x{h, Quaternion(0, h, 0, 0)};
    const NewtonSystem sys = newton_system(A, Quaternion::i(), x, 0);
    RealVec z(12);
    z.head(8) = rvec(QVector{0.0, Quaternion(0, 0, h, 0)});
    z.tail(4) = rvec(Quaternion::j());
    return (sys.matrix * z).norm();
}

}  // namespace leigq::test
