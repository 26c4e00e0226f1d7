#include "leigq/quaternion.hpp"

#include <algorithm>
#include <string>

namespace leigq {

Quaternion Quaternion::inv() const {
    const double n2 = norm2();
    if (n2 == 0.0) throw DomainError("inverse of the zero quaternion");
    return conj() / n2;
}

QVector QVector::unit(std::size_t n, std::size_t index) {
    QVector e(n);
    e[index] = 1.0;
    return e;
}

QVector QVector::operator+(const QVector& o) const {
    if (size() != o.size()) throw DimensionError("vector sizes differ");
    QVector out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = entries_[k] + o[k];
    return out;
}

QVector QVector::operator-(const QVector& o) const {
    if (size() != o.size()) throw DimensionError("vector sizes differ");
    QVector out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = entries_[k] - o[k];
    return out;
}

QVector QVector::operator*(const Quaternion& q) const {
    QVector out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = entries_[k] * q;
    return out;
}

QVector operator*(const Quaternion& q, const QVector& x) {
    QVector out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out[k] = q * x[k];
    return out;
}

Quaternion inner(const QVector& x, const QVector& y) {
    if (x.size() != y.size()) throw DimensionError("vector sizes differ");
    Quaternion acc;
    for (std::size_t k = 0; k < x.size(); ++k) acc += x[k].conj() * y[k];
    return acc;
}

double squared_norm(const QVector& x) {
    double acc = 0.0;
    for (const auto& q : x) acc += q.norm2();
    return acc;
}

double norm2(const QVector& x) {
    // Scaled accumulation keeps tiny and huge vectors finite.
    double scale = 0.0;
    for (const auto& q : x) {
        scale = std::max({scale, std::abs(q.a), std::abs(q.b), std::abs(q.c), std::abs(q.d)});
    }
    if (scale == 0.0) return 0.0;
    double acc = 0.0;
    for (const auto& q : x) acc += (q / scale).norm2();
    return scale * std::sqrt(acc);
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : n_{rows.size()}, entries_{} {
    entries_.reserve(n_ * n_);
    for (const auto& row : rows) {
        if (row.size() != n_) throw DimensionError("quaternion matrix must be square");
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

QMatrix QMatrix::identity(std::size_t n) {
    QMatrix m(n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = 1.0;
    return m;
}

QMatrix QMatrix::diagonal(const std::vector<Quaternion>& diag) {
    QMatrix m(diag.size());
    for (std::size_t k = 0; k < diag.size(); ++k) m(k, k) = diag[k];
    return m;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("matrix sizes differ");
    QMatrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("matrix sizes differ");
    QMatrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - o.entries_[k];
    return out;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (n_ != o.n_) throw DimensionError("matrix sizes differ");
    QMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) {
            Quaternion acc;
            for (std::size_t t = 0; t < n_; ++t) acc += (*this)(r, t) * o(t, s);
            out(r, s) = acc;
        }
    return out;
}

QMatrix QMatrix::operator*(double s) const {
    QMatrix out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * s;
    return out;
}

QMatrix operator*(const Quaternion& q, const QMatrix& m) {
    QMatrix out(m.n_);
    for (std::size_t k = 0; k < m.entries_.size(); ++k) out.entries_[k] = q * m.entries_[k];
    return out;
}

QMatrix QMatrix::shifted(const Quaternion& lambda) const {
    QMatrix out = *this;
    for (std::size_t k = 0; k < n_; ++k) out(k, k) -= lambda;
    return out;
}

QMatrix QMatrix::adjoint() const {
    QMatrix out(n_);
    for (std::size_t r = 0; r < n_; ++r)
        for (std::size_t s = 0; s < n_; ++s) out(s, r) = (*this)(r, s).conj();
    return out;
}

QVector mat_vec(const QMatrix& A, const QVector& x) {
    if (A.size() != x.size()) {
        throw DimensionError("mat_vec: matrix is " + std::to_string(A.size()) + "x" +
                             std::to_string(A.size()) + " but vector has length " +
                             std::to_string(x.size()));
    }
    QVector y(x.size());
    for (std::size_t r = 0; r < A.size(); ++r) {
        Quaternion acc;
        for (std::size_t s = 0; s < A.size(); ++s) acc += A(r, s) * x[s];
        y[r] = acc;
    }
    return y;
}

}  // namespace leigq
