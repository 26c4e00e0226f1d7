#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "leigq/embedding.hpp"
#include "leigq/quaternion.hpp"

namespace leigq {

/// Pivot entries are 0-based throughout the library.
using PivotIndex = std::size_t;

/// Index of a maximal-modulus entry; ties go to the smallest index.
/// Throws DomainError for the zero vector.
PivotIndex select_pivot(const QVector& x);

/// Right-scale x so that ||x||_2 = 1 and x_pivot is real and positive:
/// x^g = x q1 q2 with q1 = x_pivot^{-1} |x_pivot|, q2 = 1/||x q1||.
/// Throws PivotDegenerateError when |x_pivot| <= 1e-14 ||x||.
QVector regauge(const QVector& x, PivotIndex pivot);

/// Gauge map g(x) = (||x||^2 - 1, Im x_pivot) in R^4.
Vec4 gauge_residual(const QVector& x, PivotIndex pivot);

/// Least-squares eigenvalue seed: argmin over lambda of ||Ax - lambda x||_2,
/// rvec(lambda) = B(x)^T rvec(Ax) / ||x||^2.
Quaternion init_lambda(const QMatrix& A, const QVector& x);

struct NewtonSystem {
    RealMat matrix;  // [[rho(A - lambda I), -B(x)], [C(x), 0]]
    RealVec rhs;     // -(rvec(Ax - lambda x), 0)
};

NewtonSystem newton_system(const QMatrix& A, const Quaternion& lambda, const QVector& x,
                           PivotIndex pivot);

struct NewtonSettings {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;  // relative to s(A)
    int max_iter = 50;
    int max_halvings = 20;
    /// Re-select the pivot when |x_pivot| drops below this after an update.
    double pivot_switch = 1e-2;
    /// LU pivots below this fraction of ||J||_inf mark the system singular.
    double singular_pivot_tol = 1e-13;
    /// Stop with insufficient_reduction after this many consecutive accepted
    /// steps each reducing the defect by less than stall_factor. 0 disables.
    int stall_window = 5;
    double stall_factor = 0.9;
};

enum class NewtonStatus {
    converged,
    max_iterations,
    singular_system,
    stalled,                 // damping exhausted without defect decrease
    insufficient_reduction,  // slow defect decrease, see NewtonSettings
    pivot_degenerate,
};

std::string_view to_string(NewtonStatus status);

struct NewtonResult {
    Quaternion lambda;
    QVector x;
    PivotIndex pivot = 0;
    int iterations = 0;
    bool converged = false;
    NewtonStatus status = NewtonStatus::max_iterations;
    double final_defect = 0.0;
    /// Defect norm ||Ax - lambda x|| of every iterate, starting with the
    /// regauged initial guess.
    std::vector<double> history;
};

/// Damped gauged Newton iteration for Ax = lambda x. The defect threshold is
/// abs_tol + rel_tol * scale, with scale = s(A) computed when not supplied.
/// Non-convergence is reported through the result, never thrown.
NewtonResult newton_solve(const QMatrix& A, const Quaternion& lambda0, const QVector& x0,
                          const NewtonSettings& settings = {},
                          std::optional<double> scale = std::nullopt);

struct JacobianRank {
    std::size_t rank = 0;
    std::size_t dimension = 0;
    double sigma_min = 0.0;
    double sigma_max = 0.0;
    bool full_rank() const { return rank == dimension; }
};

/// Numerical rank of the gauged Jacobian at (lambda, x). Singular values
/// at or below rel_tol * sigma_max count as zero. Full rank certifies a
/// simple gauged pair.
JacobianRank gauged_jacobian_rank(const QMatrix& A, const Quaternion& lambda, const QVector& x,
                                  PivotIndex pivot, double rel_tol = 1e-10);

struct PencilStep {
    Quaternion delta_lambda;
    QVector delta_z;
};

/// One Newton correction for the pencil problem Mz = lambda Ez with the gauge
/// on z: (M - lambda E) dz - (dl) Ez = -(M - lambda E) z plus C(z) dz = 0.
/// Throws DomainError when Ez is numerically zero.
PencilStep pencil_newton_step(const QMatrix& M, const QMatrix& E, const Quaternion& lambda,
                              const QVector& z, PivotIndex pivot);

}  // namespace leigq
