#include "leigq/embedding.hpp"

#include <complex>
#include <string>

namespace leigq {

Vec4 rvec(const Quaternion& q) { return Vec4{q.a, q.b, q.c, q.d}; }

Quaternion from_rvec(const Eigen::Ref<const Vec4>& v) { return {v(0), v(1), v(2), v(3)}; }

RealVec rvec(const QVector& x) {
    RealVec out(4 * x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out.segment<4>(4 * k) = rvec(x[k]);
    return out;
}

QVector rvec_inv(const Eigen::Ref<const RealVec>& v) {
    if (v.size() % 4 != 0) {
        throw DimensionError("rvec_inv: length " + std::to_string(v.size()) +
                             " is not divisible by 4");
    }
    QVector x(static_cast<std::size_t>(v.size() / 4));
    for (std::size_t k = 0; k < x.size(); ++k) {
        const auto base = static_cast<Eigen::Index>(4 * k);
        x[k] = {v(base), v(base + 1), v(base + 2), v(base + 3)};
    }
    return x;
}

Mat4 left_matrix(const Quaternion& q) {
    Mat4 m;
    // clang-format off
    m << q.a, -q.b, -q.c, -q.d,
         q.b,  q.a, -q.d,  q.c,
         q.c,  q.d,  q.a, -q.b,
         q.d, -q.c,  q.b,  q.a;
    // clang-format on
    return m;
}

Mat4 right_matrix(const Quaternion& q) {
    Mat4 m;
    // clang-format off
    m << q.a, -q.b, -q.c, -q.d,
         q.b,  q.a,  q.d, -q.c,
         q.c, -q.d,  q.a,  q.b,
         q.d,  q.c, -q.b,  q.a;
    // clang-format on
    return m;
}

RealMat rho(const QMatrix& A) {
    const auto n = static_cast<Eigen::Index>(A.size());
    RealMat out(4 * n, 4 * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s)
            out.block<4, 4>(4 * r, 4 * s) = left_matrix(A(r, s));
    return out;
}

RealMat coupling_B(const QVector& x) {
    const auto n = static_cast<Eigen::Index>(x.size());
    RealMat out(4 * n, 4);
    for (Eigen::Index k = 0; k < n; ++k) out.block<4, 4>(4 * k, 0) = right_matrix(x[k]);
    return out;
}

RealMat constraint_C(const QVector& x, std::size_t pivot) {
    if (pivot >= x.size()) throw DimensionError("constraint_C: pivot out of range");
    const auto n = static_cast<Eigen::Index>(x.size());
    RealMat out = RealMat::Zero(4, 4 * n);
    out.row(0) = rvec(x).transpose();
    const auto base = static_cast<Eigen::Index>(4 * pivot);
    out(1, base + 1) = 1.0;
    out(2, base + 2) = 1.0;
    out(3, base + 3) = 1.0;
    return out;
}

namespace {

// q = (a + b i) + (c + d i) j
std::complex<double> slice_x(const Quaternion& q) { return {q.a, q.b}; }
std::complex<double> slice_y(const Quaternion& q) { return {q.c, q.d}; }

}  // namespace

ComplexMat chi(const QMatrix& A) {
    const auto n = static_cast<Eigen::Index>(A.size());
    ComplexMat out(2 * n, 2 * n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index s = 0; s < n; ++s) {
            const auto x = slice_x(A(r, s));
            const auto y = slice_y(A(r, s));
            out(r, s) = x;
            out(r, n + s) = y;
            out(n + r, s) = -std::conj(y);
            out(n + r, n + s) = std::conj(x);
        }
    return out;
}

ComplexVec phi(const QVector& x) {
    const auto n = static_cast<Eigen::Index>(x.size());
    ComplexVec out(2 * n);
    for (Eigen::Index k = 0; k < n; ++k) {
        out(k) = slice_x(x[k]);
        out(n + k) = -std::conj(slice_y(x[k]));
    }
    return out;
}

}  // namespace leigq
