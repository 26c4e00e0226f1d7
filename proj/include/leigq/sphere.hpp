#pragma once

/**
 * @file sphere.hpp
 * @brief Detection of spherical components in sampled left spectra.
 *
 * A spherical component is a 2-sphere inside an affine 3-space of R^4. The
 * fit proceeds in three steps: a consensus search over minimal 4-point
 * subsets picks the largest mutually consistent group; a total-least-squares
 * plane plus an algebraic sphere fit in the projected 3-space is computed on
 * that group; points deviating by more than 3 MADs are trimmed until the set
 * is stable.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "leigq/eigenpair.hpp"
#include "leigq/refine.hpp"

namespace leigq {

struct SphereModel {
    Quaternion center;
    double radius = 0.0;
    Vec4 normal = Vec4::Zero();  // unit; plane is normal . p = offset
    double offset = 0.0;
    std::vector<std::size_t> inliers;  // indices into the fitted point list
    std::vector<double> on_sphere_dev;  // per inlier, distance to the sphere in R^4
    double max_deviation = 0.0;
    double inlier_fraction = 0.0;

    /// Closest point of the sphere to p.
    Quaternion project(const Quaternion& p) const;
    /// Euclidean distance from p to the sphere in R^4.
    double deviation(const Quaternion& p) const;
    double plane_distance(const Quaternion& p) const;
    double radial_distance(const Quaternion& p) const;
};

struct SphereFitConfig {
    /// Inlier tolerance for plane and radial distance, times (1 + radius).
    double inlier_tol_rel = 1e-6;
    double trim_mads = 3.0;
    /// Lower bound on the MAD, times (1 + radius), so that exact data is not
    /// trimmed at roundoff level.
    double mad_floor_rel = 1e-12;
    int max_trim_rounds = 50;
    /// Minimal subsets tried; all of them when C(m,4) does not exceed this.
    std::size_t consensus_subsets = 5000;
    std::uint64_t seed = 0;
};

/// Fits a sphere to the points. Returns nullopt for fewer than 5 points,
/// coincident or degenerate configurations, or a non-positive radius.
std::optional<SphereModel> fit_sphere(const std::vector<Quaternion>& points,
                                      const SphereFitConfig& cfg = {});

struct DetectConfig {
    double coarse_tol = 1e-2;
    std::size_t min_inliers = 8;
    double validation_tol = 1e-8;  // res_min at projections, times s(A)
    bool polish = true;
    SphereFitConfig fit;
    RefineConfig refine;
};

struct Components {
    std::vector<SphereModel> spheres;  // inlier indices refer to `points`
    std::vector<Eigenpair> isolated;
    /// Candidates after optional polishing and coarse de-duplication.
    std::vector<Eigenpair> points;
};

/// Splits certified candidates into sphere inliers and isolated values.
Components detect_components(const QMatrix& A, const std::vector<Eigenpair>& candidates,
                             const DetectConfig& cfg = {});

}  // namespace leigq
