#include "leigq/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "leigq/multistart.hpp"

namespace leigq {

namespace {

Vec4 in_plane(const SphereModel& m, const Quaternion& p) {
    const Vec4 w = rvec(p - m.center);
    return w - m.normal * m.normal.dot(w);
}

// Plane by total least squares, then the algebraic fit
// |y|^2 = 2 c.y + e in plane coordinates. Exact for 4 points in general
// position.
std::optional<SphereModel> fit_core(const std::vector<Vec4>& pts) {
    const auto m = static_cast<Eigen::Index>(pts.size());
    if (m < 4) return std::nullopt;
    Vec4 centroid = Vec4::Zero();
    for (const auto& p : pts) centroid += p;
    centroid /= static_cast<double>(m);

    Eigen::Matrix<double, Eigen::Dynamic, 4> X(m, 4);
    for (Eigen::Index r = 0; r < m; ++r) X.row(r) = (pts[r] - centroid).transpose();
    Eigen::JacobiSVD<Eigen::Matrix<double, Eigen::Dynamic, 4>> svd(X, Eigen::ComputeFullV);
    const Vec4 sv = svd.singularValues();
    if (!(sv(0) > 0.0) || !(sv(2) > 1e-10 * sv(0))) return std::nullopt;
    const Eigen::Matrix<double, 4, 3> U = svd.matrixV().leftCols<3>();

    RealMat M(m, 4);
    RealVec rhs(m);
    for (Eigen::Index r = 0; r < m; ++r) {
        const Eigen::Vector3d y = U.transpose() * (pts[r] - centroid);
        M.row(r) << 2.0 * y.transpose(), 1.0;
        rhs(r) = y.squaredNorm();
    }
    Eigen::ColPivHouseholderQR<RealMat> qr(M);
    qr.setThreshold(1e-12);
    if (qr.rank() < 4) return std::nullopt;
    const RealVec sol = qr.solve(rhs);
    const Eigen::Vector3d c = sol.head<3>();
    const double r2 = sol(3) + c.squaredNorm();
    if (!(r2 > 0.0) || !std::isfinite(r2)) return std::nullopt;

    SphereModel model;
    model.radius = std::sqrt(r2);
    if (!(model.radius > 1e-12 * sv(0))) return std::nullopt;
    model.center = from_rvec(centroid + U * c);
    model.normal = svd.matrixV().col(3);
    model.offset = model.normal.dot(centroid);
    return model;
}

double median(std::vector<double> v) {
    const std::size_t h = v.size() / 2;
    std::nth_element(v.begin(), v.begin() + static_cast<long>(h), v.end());
    double hi = v[h];
    if (v.size() % 2 == 1) return hi;
    return 0.5 * (hi + *std::max_element(v.begin(), v.begin() + static_cast<long>(h)));
}

bool within(const SphereModel& m, const Quaternion& p, double tol) {
    return m.plane_distance(p) <= tol && m.radial_distance(p) <= tol;
}

std::vector<std::size_t> classify(const SphereModel& m, const std::vector<Quaternion>& points,
                                  double tol) {
    std::vector<std::size_t> out;
    for (std::size_t t = 0; t < points.size(); ++t)
        if (within(m, points[t], tol)) out.push_back(t);
    return out;
}

std::optional<SphereModel> fit_subset(const std::vector<Quaternion>& points,
                                      const std::vector<std::size_t>& idx) {
    std::vector<Vec4> pts;
    pts.reserve(idx.size());
    for (std::size_t t : idx) pts.push_back(rvec(points[t]));
    return fit_core(pts);
}

double binomial4(std::size_t m) {
    const double x = static_cast<double>(m);
    return x * (x - 1) * (x - 2) * (x - 3) / 24.0;
}

}  // namespace

double SphereModel::plane_distance(const Quaternion& p) const {
    return std::abs(normal.dot(rvec(p)) - offset);
}

double SphereModel::radial_distance(const Quaternion& p) const {
    return std::abs(in_plane(*this, p).norm() - radius);
}

double SphereModel::deviation(const Quaternion& p) const {
    return std::hypot(plane_distance(p), radial_distance(p));
}

Quaternion SphereModel::project(const Quaternion& p) const {
    Vec4 w = in_plane(*this, p);
    double len = w.norm();
    if (len == 0.0) {
        // p sits on the axis; any in-plane direction is closest.
        for (int t = 0; t < 4 && len == 0.0; ++t) {
            w = Vec4::Unit(t) - normal * normal(t);
            len = w.norm() > 1e-3 ? w.norm() : 0.0;
        }
    }
    return center + from_rvec(w * (radius / len));
}

std::optional<SphereModel> fit_sphere(const std::vector<Quaternion>& points,
                                      const SphereFitConfig& cfg) {
    const std::size_t m = points.size();
    if (m < 5) return std::nullopt;

    // Consensus over minimal subsets.
    std::vector<std::size_t> best;
    auto consider = [&](const std::vector<std::size_t>& subset) {
        auto model = fit_subset(points, subset);
        if (!model) return;
        auto in = classify(*model, points, cfg.inlier_tol_rel * (1.0 + model->radius));
        if (in.size() > best.size()) best = std::move(in);
    };
    if (binomial4(m) <= static_cast<double>(cfg.consensus_subsets)) {
        for (std::size_t a = 0; a < m && best.size() < m; ++a)
            for (std::size_t b = a + 1; b < m; ++b)
                for (std::size_t c = b + 1; c < m; ++c)
                    for (std::size_t d = c + 1; d < m; ++d) consider({a, b, c, d});
    } else {
        std::mt19937_64 rng(cfg.seed);
        std::vector<std::size_t> all(m);
        for (std::size_t t = 0; t < m; ++t) all[t] = t;
        for (std::size_t s = 0; s < cfg.consensus_subsets && best.size() < m; ++s) {
            for (std::size_t t = 0; t < 4; ++t) {
                std::uniform_int_distribution<std::size_t> pick(t, m - 1);
                std::swap(all[t], all[pick(rng)]);
            }
            std::vector<std::size_t> subset(all.begin(), all.begin() + 4);
            std::sort(subset.begin(), subset.end());
            consider(subset);
        }
    }
    if (best.size() < 5) return std::nullopt;

    // Refit and trim.
    std::vector<std::size_t> set = best;
    std::optional<SphereModel> model = fit_subset(points, set);
    for (int round = 0; model && round < cfg.max_trim_rounds; ++round) {
        std::vector<double> dev;
        for (std::size_t t : set) dev.push_back(model->deviation(points[t]));
        const double med = median(dev);
        std::vector<double> abs_dev;
        for (double v : dev) abs_dev.push_back(std::abs(v - med));
        const double mad =
            std::max(median(abs_dev), cfg.mad_floor_rel * (1.0 + model->radius));
        std::vector<std::size_t> kept;
        for (std::size_t t = 0; t < set.size(); ++t)
            if (dev[t] <= med + cfg.trim_mads * mad) kept.push_back(set[t]);
        if (kept.size() == set.size() || kept.size() < 5) break;
        set = std::move(kept);
        model = fit_subset(points, set);
    }
    if (!model) return std::nullopt;

    model->inliers = classify(*model, points, cfg.inlier_tol_rel * (1.0 + model->radius));
    if (model->inliers.size() < 5) return std::nullopt;
    for (std::size_t t : model->inliers) {
        model->on_sphere_dev.push_back(model->deviation(points[t]));
        model->max_deviation = std::max(model->max_deviation, model->on_sphere_dev.back());
    }
    model->inlier_fraction =
        static_cast<double>(model->inliers.size()) / static_cast<double>(m);
    return model;
}

Components detect_components(const QMatrix& A, const std::vector<Eigenpair>& candidates,
                             const DetectConfig& cfg) {
    const double scale = matrix_scale(A);
    std::vector<Eigenpair> polished;
    polished.reserve(candidates.size());
    for (const auto& c : candidates) {
        Eigenpair p = c;
        if (cfg.polish) {
            try {
                Eigenpair q = polish_pair(A, c.lambda, c.vector, cfg.refine, scale);
                if (q.cert.res_min <= c.cert.res_min || c.cert.res_min == 0.0) {
                    q.trial = c.trial;
                    q.source = c.source;
                    p = std::move(q);
                }
            } catch (const Error&) {
                // Keep the candidate as given.
            }
        }
        polished.push_back(std::move(p));
    }

    std::vector<Quaternion> values;
    std::vector<double> certs;
    for (const auto& p : polished) {
        values.push_back(p.lambda);
        certs.push_back(p.cert.res_min);
    }
    Components out;
    for (std::size_t idx : cluster(values, cfg.coarse_tol, DedupMetric::absolute, certs).representatives)
        out.points.push_back(polished[idx]);

    std::vector<std::size_t> remaining(out.points.size());
    for (std::size_t t = 0; t < remaining.size(); ++t) remaining[t] = t;

    while (remaining.size() >= cfg.min_inliers) {
        std::vector<Quaternion> pts;
        for (std::size_t t : remaining) pts.push_back(out.points[t].lambda);
        auto model = fit_sphere(pts, cfg.fit);
        if (!model) break;

        SphereModel sphere = *model;
        sphere.inliers.clear();
        sphere.on_sphere_dev.clear();
        sphere.max_deviation = 0.0;
        for (std::size_t local : model->inliers) {
            const Quaternion& l = pts[local];
            if (res_min(A, sphere.project(l)).sigma > cfg.validation_tol * scale) continue;
            sphere.inliers.push_back(remaining[local]);
            sphere.on_sphere_dev.push_back(sphere.deviation(l));
            sphere.max_deviation = std::max(sphere.max_deviation, sphere.on_sphere_dev.back());
        }
        if (sphere.inliers.size() < cfg.min_inliers) break;
        sphere.inlier_fraction = static_cast<double>(sphere.inliers.size()) /
                                 static_cast<double>(out.points.size());

        std::vector<std::size_t> rest;
        for (std::size_t t : remaining)
            if (!std::binary_search(sphere.inliers.begin(), sphere.inliers.end(), t))
                rest.push_back(t);
        remaining = std::move(rest);
        out.spheres.push_back(std::move(sphere));
    }
    for (std::size_t t : remaining) out.isolated.push_back(out.points[t]);
    return out;
}

}  // namespace leigq
