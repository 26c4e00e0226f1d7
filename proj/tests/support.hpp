#pragma once
// Shared helpers for the unit tests and the acceptance binary: seeded random
// inputs, independent oracles, and the embedding property suites.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "leigq/certificate.hpp"
#include "leigq/embedding.hpp"
#include "leigq/quaternion.hpp"

namespace leigq::test {

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    double normal() { return normal_(gen_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    Quaternion quaternion() { return {normal(), normal(), normal(), normal()}; }
    Quaternion unit_quaternion();
    QVector vector(std::size_t n);
    QMatrix matrix(std::size_t n);
    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    std::normal_distribution<double> normal_;
};

/// Hamilton product through the 2x2 complex representation
/// q = z + w j  ->  [[z, w], [-conj(w), conj(z)]], independent of Quaternion::operator*.
Quaternion complex_oracle_product(const Quaternion& p, const Quaternion& q);

double max_abs_diff(const Quaternion& p, const Quaternion& q);
double max_abs_diff(const QVector& x, const QVector& y);

/// sigma_min of chi(A - lambda I); equals res_min(A, lambda) because the
/// singular values of rho are those of chi, each doubled.
double complex_res_min(const QMatrix& A, const Quaternion& lambda);

/// Outcome of a randomized property suite.
struct SuiteResult {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    double max_error = 0.0;
    bool passed() const { return instances > 0 && failures == 0; }
};

/// L(pq) = L(p)L(q), R(pq) = R(q)R(p), L(p)R(q) = R(q)L(p), det L(p) = |p|^4.
SuiteResult embedding_homomorphism_suite(std::size_t instances, double tol, std::uint64_t seed);
/// rvec(Ax) = rho(A) rvec(x), rho(AB) = rho(A) rho(B), phi(Ax) = chi(A) phi(x),
/// chi(AB) = chi(A) chi(B), chi(A^*) = chi(A)^*, on sizes 3..8.
SuiteResult embedding_intertwining_suite(std::size_t instances, double tol, std::uint64_t seed);
/// rank rho(A) = 4 rank(A) for A = B diag(1, .., 1, 0, .., 0) with random B.
SuiteResult rank_factor_suite(std::size_t instances, double tol, std::uint64_t seed);

/// Error ratios e_{k+1} / e_k^2 of Newton on diag(2,5) from lambda = 2.01,
/// x = regauge(e1 + 0.01 e2), over the last three steps with e_k > 1e-14.
struct QuadraticRate {
    std::vector<double> errors;
    double fitted_c = 0.0;
    bool converged = false;
    std::size_t ratios = 0;
};
QuadraticRate diag_quadratic_rate();

/// ||J (w, u)|| for the spherical kernel direction (j, (0, j)/sqrt2) of
/// [[0,1],[-1,0]] at (i, (1, i)/sqrt2).
double spherical_kernel_residual();

}  // namespace leigq::test
