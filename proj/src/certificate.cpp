#include "leigq/certificate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace leigq {

PairResidual res_pair(const QMatrix& A, const Quaternion& lambda, const QVector& v) {
    const double nv = norm2(v);
    if (nv == 0.0) throw DomainError("res_pair: zero vector");
    PairResidual out;
    QVector unit = v;
    if (std::abs(nv - 1.0) > 1e-12) {
        unit = v * (1.0 / nv);
        out.normalized = true;
    }
    out.value = norm2(mat_vec(A, unit) - lambda * unit);
    return out;
}

RealVec singular_values(const RealMat& m) {
    if (m.size() == 0) return RealVec{};
    Eigen::JacobiSVD<RealMat> svd(m);
    return svd.singularValues();
}

MinResidual res_min(const QMatrix& A, const Quaternion& lambda) {
    Eigen::JacobiSVD<RealMat> svd(rho(A.shifted(lambda)), Eigen::ComputeFullV);
    const auto last = svd.singularValues().size() - 1;
    MinResidual out;
    out.sigma = svd.singularValues()(last);
    QVector v = rvec_inv(svd.matrixV().col(last));
    out.vector = v * (1.0 / norm2(v));
    return out;
}

double operator_norm(const QMatrix& A) {
    if (A.size() == 0) return 0.0;
    return singular_values(rho(A))(0);
}

double matrix_scale(const QMatrix& A) { return std::max(1.0, operator_norm(A)); }

Certificate certify(const QMatrix& A, const Quaternion& lambda, const QVector& v,
                    std::optional<double> scale) {
    Certificate c;
    c.scale = scale ? *scale : matrix_scale(A);
    c.res_pair = res_pair(A, lambda, v).value;
    c.res_min = res_min(A, lambda).sigma;
    c.res_min_rel = c.res_min / c.scale;
    return c;
}

double default_rank_tol(std::size_t n) {
    return 4.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
}

namespace {

std::size_t embedded_null_count(const RealVec& sv, double tol) {
    const double cutoff = tol * (sv.size() ? sv(0) : 0.0);
    std::size_t count = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k)
        if (sv(k) <= cutoff) ++count;
    return count;
}

std::size_t checked_nullity(std::size_t count) {
    if (count % 4 != 0) {
        throw EmbeddingInconsistencyError(
            "embedded kernel dimension " + std::to_string(count) +
            " is not a multiple of 4; the rank tolerance lies in a singular-value gap");
    }
    return count / 4;
}

}  // namespace

std::size_t nullity(const QMatrix& A, std::optional<double> tol) {
    const double t = tol ? *tol : default_rank_tol(A.size());
    if (t <= 0.0) throw DomainError("nullity: tolerance must be positive");
    return checked_nullity(embedded_null_count(singular_values(rho(A)), t));
}

std::vector<QVector> kernel_basis(const QMatrix& A, std::optional<double> tol) {
    const double t = tol ? *tol : default_rank_tol(A.size());
    if (t <= 0.0) throw DomainError("kernel_basis: tolerance must be positive");
    Eigen::JacobiSVD<RealMat> svd(rho(A), Eigen::ComputeFullV);
    const auto count = embedded_null_count(svd.singularValues(), t);
    const std::size_t m = checked_nullity(count);

    // The trailing right singular vectors span rvec(ker A); extract a
    // quaternion-orthonormal basis by Gram-Schmidt with quaternion coefficients.
    std::vector<QVector> basis;
    const auto cols = svd.matrixV().cols();
    for (Eigen::Index c = cols - 1; c >= cols - static_cast<Eigen::Index>(count) && basis.size() < m;
         --c) {
        QVector y = rvec_inv(svd.matrixV().col(c));
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& b : basis) y = y - b * inner(b, y);
        const double ny = norm2(y);
        if (ny < 0.5) continue;
        basis.push_back(y * (1.0 / ny));
    }
    return basis;
}

DetResult det_poly(const QMatrix& A, const Quaternion& lambda) {
    Eigen::PartialPivLU<RealMat> lu(rho(A.shifted(lambda)));
    const auto& U = lu.matrixLU();
    DetResult out;
    out.sign = static_cast<int>(lu.permutationP().determinant());
    for (Eigen::Index k = 0; k < U.rows(); ++k) {
        const double p = U(k, k);
        if (!(std::abs(p) >= std::numeric_limits<double>::min())) {
            return {0, -std::numeric_limits<double>::infinity()};
        }
        if (p < 0) out.sign = -out.sign;
        out.log_magnitude += std::log(std::abs(p));
    }
    return out;
}

}  // namespace leigq
