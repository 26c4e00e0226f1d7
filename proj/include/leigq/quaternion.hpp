#pragma once

/**
 * @file quaternion.hpp
 * @brief Quaternion scalars, vectors and square matrices over H.
 *
 * Coefficients are stored in the order (1, i, j, k). Vectors form a right
 * H-module: scalars act as x*q, and matrices act as right-linear maps,
 * A(xq) = (Ax)q. Left scaling q*x is also provided (left eigenvalues need it).
 */

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include "leigq/errors.hpp"

namespace leigq {

struct Quaternion {
    double a = 0.0;  // real part
    double b = 0.0;  // i
    double c = 0.0;  // j
    double d = 0.0;  // k

    constexpr Quaternion() = default;
    constexpr Quaternion(double re) : a{re} {}  // NOLINT: reals embed implicitly
    constexpr Quaternion(double a_, double b_, double c_, double d_)
        : a{a_}, b{b_}, c{c_}, d{d_} {}

    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    constexpr bool operator==(const Quaternion&) const = default;

    friend constexpr Quaternion operator+(const Quaternion& p, const Quaternion& q) {
        return {p.a + q.a, p.b + q.b, p.c + q.c, p.d + q.d};
    }
    friend constexpr Quaternion operator-(const Quaternion& p, const Quaternion& q) {
        return {p.a - q.a, p.b - q.b, p.c - q.c, p.d - q.d};
    }
    constexpr Quaternion operator-() const { return {-a, -b, -c, -d}; }

    // Hamilton product, i^2 = j^2 = k^2 = ijk = -1.
    constexpr Quaternion operator*(const Quaternion& o) const {
        return {a * o.a - b * o.b - c * o.c - d * o.d,
                a * o.b + b * o.a + c * o.d - d * o.c,
                a * o.c - b * o.d + c * o.a + d * o.b,
                a * o.d + b * o.c - c * o.b + d * o.a};
    }
    constexpr Quaternion operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
    constexpr Quaternion operator/(double s) const { return {a / s, b / s, c / s, d / s}; }

    Quaternion& operator+=(const Quaternion& o) { return *this = *this + o; }
    Quaternion& operator-=(const Quaternion& o) { return *this = *this - o; }

    constexpr Quaternion conj() const { return {a, -b, -c, -d}; }
    constexpr double norm2() const { return a * a + b * b + c * c + d * d; }
    double abs() const { return std::sqrt(norm2()); }
    constexpr double real() const { return a; }
    constexpr Quaternion imag() const { return {0, b, c, d}; }

    /// q^{-1} = conj(q)/|q|^2. Throws DomainError for q = 0.
    Quaternion inv() const;
};

constexpr Quaternion operator*(double s, const Quaternion& q) { return q * s; }

inline Quaternion qmul(const Quaternion& p, const Quaternion& q) { return p * q; }
inline Quaternion qinv(const Quaternion& q) { return q.inv(); }

/// Euclidean distance of two quaternions viewed as points of R^4.
inline double distance(const Quaternion& p, const Quaternion& q) { return (p - q).abs(); }

class QVector {
public:
    QVector() = default;
    explicit QVector(std::size_t n) : entries_(n) {}
    QVector(std::initializer_list<Quaternion> init) : entries_(init) {}
    explicit QVector(std::vector<Quaternion> entries) : entries_(std::move(entries)) {}

    static QVector unit(std::size_t n, std::size_t index);

    std::size_t size() const { return entries_.size(); }
    Quaternion& operator[](std::size_t k) { return entries_[k]; }
    const Quaternion& operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<Quaternion>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    QVector operator+(const QVector& o) const;
    QVector operator-(const QVector& o) const;
    /// Right scalar multiplication x*q.
    QVector operator*(const Quaternion& q) const;
    /// Left scalar multiplication q*x (componentwise).
    friend QVector operator*(const Quaternion& q, const QVector& x);

    bool operator==(const QVector&) const = default;

private:
    std::vector<Quaternion> entries_;
};

/// <x, y> = x^* y.
Quaternion inner(const QVector& x, const QVector& y);
double norm2(const QVector& x);
double squared_norm(const QVector& x);

class QMatrix {
public:
    QMatrix() = default;
    explicit QMatrix(std::size_t n) : n_{n}, entries_(n * n) {}
    QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

    static QMatrix identity(std::size_t n);
    static QMatrix diagonal(const std::vector<Quaternion>& diag);

    std::size_t size() const { return n_; }
    Quaternion& operator()(std::size_t r, std::size_t s) { return entries_[r * n_ + s]; }
    const Quaternion& operator()(std::size_t r, std::size_t s) const { return entries_[r * n_ + s]; }

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    QMatrix operator*(double s) const;
    /// Left scalar multiple q*A (entrywise q*a_rs).
    friend QMatrix operator*(const Quaternion& q, const QMatrix& m);

    /// A - lambda*I.
    QMatrix shifted(const Quaternion& lambda) const;
    /// Conjugate transpose.
    QMatrix adjoint() const;

    bool operator==(const QMatrix&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<Quaternion> entries_;
};

/// y_r = sum_s a_rs x_s. Throws DimensionError on size mismatch.
QVector mat_vec(const QMatrix& A, const QVector& x);
inline QVector operator*(const QMatrix& A, const QVector& x) { return mat_vec(A, x); }

}  // namespace leigq
