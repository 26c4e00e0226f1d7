#pragma once

// Real and complex matrix representations of quaternionic operators.
//
// rvec stacks coefficients entry by entry: (a1,b1,c1,d1, ..., an,bn,cn,dn).
// All embedded matrices are dense.

#include <Eigen/Dense>

#include "leigq/quaternion.hpp"

namespace leigq {

using RealVec = Eigen::VectorXd;
using RealMat = Eigen::MatrixXd;
using ComplexVec = Eigen::VectorXcd;
using ComplexMat = Eigen::MatrixXcd;
using Mat4 = Eigen::Matrix4d;
using Vec4 = Eigen::Vector4d;

enum class Side { left, right };

Vec4 rvec(const Quaternion& q);
Quaternion from_rvec(const Eigen::Ref<const Vec4>& v);

RealVec rvec(const QVector& x);
/// Inverse of rvec. Throws DimensionError when the length is not a multiple of 4.
QVector rvec_inv(const Eigen::Ref<const RealVec>& v);

/// rvec(q p) = L(q) rvec(p).
Mat4 left_matrix(const Quaternion& q);
/// rvec(p q) = R(q) rvec(p).
Mat4 right_matrix(const Quaternion& q);
inline Mat4 mul_matrix(const Quaternion& q, Side side) {
    return side == Side::left ? left_matrix(q) : right_matrix(q);
}

/// 4n x 4n block matrix whose (r,s) block is L(a_rs); rvec(Ax) = rho(A) rvec(x).
RealMat rho(const QMatrix& A);

/// Stacked blocks R(x_1), ..., R(x_n): rvec((dl) x) = B(x) rvec(dl).
RealMat coupling_B(const QVector& x);

/// Linearized gauge rows at pivot `pivot` (0-based): first row rvec(x)^T,
/// then selectors of the i, j, k coordinates of entry `pivot`.
RealMat constraint_C(const QVector& x, std::size_t pivot);

/// Complex adjoint with respect to the slice C_i: A = X + Y j maps to
/// [[X, Y], [-conj(Y), conj(X)]].
ComplexMat chi(const QMatrix& A);
/// x = u + v j maps to (u, -conj(v)); phi(Ax) = chi(A) phi(x).
ComplexVec phi(const QVector& x);

}  // namespace leigq
