#pragma once

#include <optional>
#include <vector>

#include "leigq/embedding.hpp"
#include "leigq/quaternion.hpp"

namespace leigq {

/// Residual certificates of a candidate left eigenpair.
///
/// res_pair = ||Av - lambda v||_2 for the unit vector v, res_min =
/// sigma_min(rho(A - lambda I)), and res_min_rel = res_min / scale with
/// scale = max{1, ||A||_2}. Always res_min <= res_pair.
struct Certificate {
    double res_pair = 0.0;
    double res_min = 0.0;
    double res_min_rel = 0.0;
    double scale = 1.0;
};

struct PairResidual {
    double value = 0.0;
    /// True when the input vector was off the unit sphere by more than 1e-12
    /// and had to be normalized first.
    bool normalized = false;
};

/// ||Av - lambda v||_2 with v normalized to unit length. Throws DomainError
/// for the zero vector.
PairResidual res_pair(const QMatrix& A, const Quaternion& lambda, const QVector& v);

struct MinResidual {
    double sigma = 0.0;
    /// Unit vector attaining the minimum (right singular vector of sigma_min).
    QVector vector;
};

/// sigma_min(rho(A - lambda I)), the smallest ||(A - lambda I)x|| over unit x.
MinResidual res_min(const QMatrix& A, const Quaternion& lambda);

/// Singular values of a real matrix in descending order.
RealVec singular_values(const RealMat& m);

/// ||A||_2, the largest singular value of rho(A).
double operator_norm(const QMatrix& A);
/// s(A) = max{1, ||A||_2}.
double matrix_scale(const QMatrix& A);

/// Full certificate; `scale` may be passed in when s(A) is already known.
Certificate certify(const QMatrix& A, const Quaternion& lambda, const QVector& v,
                    std::optional<double> scale = std::nullopt);

/// Default relative rank tolerance 4n * eps for an n x n quaternion matrix.
double default_rank_tol(std::size_t n);

/// Quaternionic nullity of A: the number of singular values of rho(A) at or
/// below tol * sigma_max, divided by 4. Throws EmbeddingInconsistencyError if
/// that count is not a multiple of 4.
std::size_t nullity(const QMatrix& A, std::optional<double> tol = std::nullopt);

/// Orthonormal (right inner product) quaternion basis of ker(A).
std::vector<QVector> kernel_basis(const QMatrix& A, std::optional<double> tol = std::nullopt);

/// det rho(A - lambda I) as sign and natural log magnitude. sign == 0 (and
/// log_magnitude == -inf) when an LU pivot vanishes or underflows.
struct DetResult {
    int sign = 0;
    double log_magnitude = 0.0;
};
DetResult det_poly(const QMatrix& A, const Quaternion& lambda);

}  // namespace leigq
