#pragma once

/**
 * @file refine.hpp
 * @brief Two-stage polishing of eigenvalue candidates.
 *
 * Stage 1 minimizes phi(lambda) = sigma_min(rho(A - lambda I)) over R^4:
 * random perturbations on spheres of radius r (1 + |lambda0|) for each r in
 * `radii`, then a Nelder-Mead descent from the best sample. Stage 2 takes
 * a few gauged Newton steps and keeps the iterate with the smallest res_min.
 * Neither stage ever returns a worse certificate than it was given.
 */

#include <cstdint>
#include <functional>
#include <vector>

#include "leigq/eigenpair.hpp"

namespace leigq {

struct RefineConfig {
    std::vector<double> radii{1e-2, 1e-4, 1e-6};
    std::size_t samples_per_radius = 8;
    std::size_t simplex_max_evals = 200;
    double simplex_diameter_tol = 1e-14;
    int polish_max_steps = 10;
    std::uint64_t seed = 0;

    /// Throws DomainError unless radii are positive and decreasing and all
    /// counts are at least 1.
    void validate() const;
};

struct RefinedValue {
    Quaternion lambda;
    QVector vector;  // minimizing unit vector of res_min at lambda
    double phi = 0.0;
    std::size_t evaluations = 0;
};

/// Stage 1: certificate-driven search in lambda.
RefinedValue refine_certificate(const QMatrix& A, const Quaternion& lambda0,
                                const RefineConfig& cfg = {});

/// Stage 2: damped Newton polishing from (lambda, v); returns the best
/// iterate by res_min, with the res_min singular vector as eigenvector.
Eigenpair polish_pair(const QMatrix& A, const Quaternion& lambda, const QVector& v,
                      const RefineConfig& cfg = {}, std::optional<double> scale = std::nullopt);

/// Both stages; the result is never worse (by res_min) than lambda0.
Eigenpair refine(const QMatrix& A, const Quaternion& lambda0, const RefineConfig& cfg = {},
                 std::optional<double> scale = std::nullopt);

struct SimplexResult {
    Vec4 point;
    double value = 0.0;
    std::size_t evaluations = 0;
};

/// Nelder-Mead minimization in R^4 with reflection/expansion/contraction/
/// shrink coefficients (1, 2, 0.5, 0.5). The initial simplex is start plus
/// `step` along each coordinate. Stops once the simplex diameter falls below
/// diameter_tol or max_evals evaluations have been spent.
SimplexResult nelder_mead(const std::function<double(const Vec4&)>& f, const Vec4& start,
                          double step, std::size_t max_evals, double diameter_tol);

}  // namespace leigq
