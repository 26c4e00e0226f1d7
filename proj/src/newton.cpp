#include "leigq/newton.hpp"

#include <cmath>
#include <limits>

#include "leigq/certificate.hpp"

namespace leigq {

PivotIndex select_pivot(const QVector& x) {
    PivotIndex best = 0;
    double best_mod = -1.0;
    for (std::size_t k = 0; k < x.size(); ++k) {
        const double m = x[k].norm2();
        if (m > best_mod) {
            best_mod = m;
            best = k;
        }
    }
    if (best_mod <= 0.0) throw DomainError("select_pivot: zero vector");
    return best;
}

QVector regauge(const QVector& x, PivotIndex pivot) {
    if (pivot >= x.size()) throw DimensionError("regauge: pivot out of range");
    const double nx = norm2(x);
    const double xj = x[pivot].abs();
    if (!(xj > 1e-14 * nx)) throw PivotDegenerateError("regauge: pivot entry is numerically zero");
    const Quaternion q1 = x[pivot].inv() * xj;
    QVector out = x * q1;
    out = out * (1.0 / norm2(out));
    // Remove the roundoff left in the pivot's imaginary part.
    out[pivot] = Quaternion{out[pivot].abs()};
    return out;
}

Vec4 gauge_residual(const QVector& x, PivotIndex pivot) {
    return Vec4{squared_norm(x) - 1.0, x[pivot].b, x[pivot].c, x[pivot].d};
}

Quaternion init_lambda(const QMatrix& A, const QVector& x) {
    const double n2 = squared_norm(x);
    if (n2 == 0.0) throw DomainError("init_lambda: zero vector");
    const Vec4 w = coupling_B(x).transpose() * rvec(mat_vec(A, x)) / n2;
    return from_rvec(w);
}

NewtonSystem newton_system(const QMatrix& A, const Quaternion& lambda, const QVector& x,
                           PivotIndex pivot) {
    const auto m = static_cast<Eigen::Index>(4 * x.size());
    NewtonSystem sys;
    sys.matrix = RealMat::Zero(m + 4, m + 4);
    sys.matrix.topLeftCorner(m, m) = rho(A.shifted(lambda));
    sys.matrix.topRightCorner(m, 4) = -coupling_B(x);
    sys.matrix.bottomLeftCorner(4, m) = constraint_C(x, pivot);
    sys.rhs = RealVec::Zero(m + 4);
    sys.rhs.head(m) = -rvec(mat_vec(A, x) - lambda * x);
    return sys;
}

std::string_view to_string(NewtonStatus status) {
    switch (status) {
        case NewtonStatus::converged: return "converged";
        case NewtonStatus::max_iterations: return "max_iterations";
        case NewtonStatus::singular_system: return "singular_system";
        case NewtonStatus::stalled: return "stalled";
        case NewtonStatus::insufficient_reduction: return "insufficient_reduction";
        case NewtonStatus::pivot_degenerate: return "pivot_degenerate";
    }
    return "unknown";
}

namespace {

double defect_norm(const QMatrix& A, const Quaternion& lambda, const QVector& x) {
    return norm2(mat_vec(A, x) - lambda * x);
}

// Solves the bordered system; empty optional when LU flags it singular.
std::optional<RealVec> solve_correction(const NewtonSystem& sys, double pivot_tol) {
    Eigen::PartialPivLU<RealMat> lu(sys.matrix);
    const double scale = sys.matrix.cwiseAbs().rowwise().sum().maxCoeff();
    const double min_pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
    if (scale == 0.0 || !(min_pivot >= pivot_tol * scale)) return std::nullopt;
    RealVec sol = lu.solve(sys.rhs);
    if (!sol.allFinite()) return std::nullopt;
    return sol;
}

// Regauge at `pivot`, switching to the largest entry when the pivot has
// become small or vanished.
QVector regauge_or_switch(const QVector& x, PivotIndex& pivot, double switch_tol) {
    const double nx = norm2(x);
    if (nx == 0.0) throw PivotDegenerateError("iterate collapsed to zero");
    if (x[pivot].abs() < switch_tol * nx) pivot = select_pivot(x);
    return regauge(x, pivot);
}

}  // namespace

NewtonResult newton_solve(const QMatrix& A, const Quaternion& lambda0, const QVector& x0,
                          const NewtonSettings& settings, std::optional<double> scale) {
    if (x0.size() != A.size()) throw DimensionError("newton_solve: start vector has wrong length");
    if (norm2(x0) == 0.0) throw DomainError("newton_solve: zero start vector");
    const double s = scale ? *scale : matrix_scale(A);
    const double threshold = settings.abs_tol + settings.rel_tol * s;
    const auto m = static_cast<Eigen::Index>(4 * A.size());

    NewtonResult res;
    res.lambda = lambda0;
    res.pivot = select_pivot(x0);
    res.x = regauge(x0, res.pivot);
    double defect = defect_norm(A, res.lambda, res.x);
    res.history.push_back(defect);
    res.final_defect = defect;
    if (settings.max_iter <= 0) return res;

    int slow_steps = 0;
    for (int k = 0;; ++k) {
        if (defect <= threshold) {
            res.converged = true;
            res.status = NewtonStatus::converged;
            break;
        }
        if (k == settings.max_iter) {
            res.status = NewtonStatus::max_iterations;
            break;
        }
        const auto sys = newton_system(A, res.lambda, res.x, res.pivot);
        const auto sol = solve_correction(sys, settings.singular_pivot_tol);
        if (!sol) {
            res.status = NewtonStatus::singular_system;
            break;
        }
        const QVector dx = rvec_inv(sol->head(m));
        const Quaternion dl = from_rvec(sol->tail<4>());

        bool accepted = false;
        double alpha = 1.0;
        for (int h = 0; h <= settings.max_halvings; ++h, alpha *= 0.5) {
            PivotIndex pivot = res.pivot;
            QVector x_try;
            try {
                x_try = regauge_or_switch(res.x + dx * alpha, pivot, settings.pivot_switch);
            } catch (const PivotDegenerateError&) {
                continue;
            }
            const Quaternion l_try = res.lambda + dl * alpha;
            const double d_try = defect_norm(A, l_try, x_try);
            if (d_try < defect) {
                slow_steps = d_try > settings.stall_factor * defect ? slow_steps + 1 : 0;
                res.x = std::move(x_try);
                res.lambda = l_try;
                res.pivot = pivot;
                defect = d_try;
                accepted = true;
                break;
            }
        }
        res.iterations = k + 1;
        if (!accepted) {
            res.status = NewtonStatus::stalled;
            break;
        }
        res.history.push_back(defect);
        if (settings.stall_window > 0 && slow_steps >= settings.stall_window && defect > threshold) {
            res.status = NewtonStatus::insufficient_reduction;
            break;
        }
    }
    res.final_defect = defect;
    return res;
}

JacobianRank gauged_jacobian_rank(const QMatrix& A, const Quaternion& lambda, const QVector& x,
                                  PivotIndex pivot, double rel_tol) {
    const auto sys = newton_system(A, lambda, x, pivot);
    const RealVec sv = singular_values(sys.matrix);
    JacobianRank out;
    out.dimension = static_cast<std::size_t>(sv.size());
    out.sigma_max = sv(0);
    out.sigma_min = sv(sv.size() - 1);
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) > rel_tol * out.sigma_max) ++out.rank;
    return out;
}

PencilStep pencil_newton_step(const QMatrix& M, const QMatrix& E, const Quaternion& lambda,
                              const QVector& z, PivotIndex pivot) {
    if (M.size() != E.size() || M.size() != z.size())
        throw DimensionError("pencil_newton_step: size mismatch");
    const QVector ez = mat_vec(E, z);
    if (!(norm2(ez) > 1e-14 * std::max(1.0, operator_norm(E)) * norm2(z)))
        throw DomainError("pencil_newton_step: Ez is numerically zero (degenerate pencil)");

    const QMatrix shifted = M - lambda * E;
    const auto m = static_cast<Eigen::Index>(4 * z.size());
    RealMat J = RealMat::Zero(m + 4, m + 4);
    J.topLeftCorner(m, m) = rho(shifted);
    J.topRightCorner(m, 4) = -coupling_B(ez);
    J.bottomLeftCorner(4, m) = constraint_C(z, pivot);
    RealVec rhs = RealVec::Zero(m + 4);
    rhs.head(m) = -rvec(mat_vec(shifted, z));

    const RealVec sol = Eigen::PartialPivLU<RealMat>(J).solve(rhs);
    return {from_rvec(sol.tail<4>()), rvec_inv(sol.head(m))};
}

}  // namespace leigq
