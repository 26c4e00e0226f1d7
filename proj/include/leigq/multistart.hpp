#pragma once

/**
 * @file multistart.hpp
 * @brief Multi-start driver for left eigenpairs.
 *
 * Each trial draws a start vector (by default warmed by two shifted inverse
 * iteration steps) from its own RNG stream
 * (derived from the seed and the trial index), seeds lambda by least squares,
 * runs gauged Newton, polishes the result and accepts it when
 * res_pair <= accept_tol_rel * s(A). Accepted pairs are de-duplicated in
 * trial order, so the outcome does not depend on the thread count.
 */

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "leigq/eigenpair.hpp"
#include "leigq/refine.hpp"

namespace leigq {

enum class DedupMetric {
    absolute,  // |p - q| <= tol
    scaled,    // |p - q| <= tol * (1 + max(|p|, |q|))
};

/// How much polishing an accepted Newton candidate receives.
enum class RefineMode {
    off,       // raw Newton output
    polish,    // Newton polishing only
    adaptive,  // polishing, plus the certificate search when the gauged
               // Jacobian is ill-conditioned (multiple or defective roots)
    full,      // both stages for every candidate
};

/// Start-vector generation for each trial.
enum class StartMode {
    random,           // standard normal x0
    shifted_inverse,  // a few inverse-iteration steps on A - sigma I from a
                      // standard normal x0, with a random quaternion shift
                      // sigma at the scale of the entries of A
};

struct SolveConfig {
    std::size_t k = 1;
    std::uint64_t seed = 0;
    double accept_tol_rel = 1e-10;
    double dedup_tol = 1e-5;
    DedupMetric dedup_metric = DedupMetric::absolute;
    /// 0 means 20 * k.
    std::size_t max_trials = 0;
    NewtonSettings newton;

    StartMode start = StartMode::shifted_inverse;
    int inverse_steps = 2;
    /// sigma is standard normal times shift_scale * sqrt(||A||_F^2 / n).
    double shift_scale = 1.0;

    bool triangular_shortcut = true;
    bool singular_prefill = true;
    /// Relative rank tolerance for the prefill; default_rank_tol(n) if unset.
    std::optional<double> rank_tol;
    /// Flag possible continua once more than sphere_trigger * n distinct
    /// certified values have been accepted.
    double sphere_trigger = 3.0;

    RefineMode refine = RefineMode::adaptive;
    RefineConfig refine_config;
    /// The certificate search runs in adaptive mode when the gauged Jacobian
    /// has sigma_min <= ill_conditioned_tol * sigma_max. It runs during the
    /// merge, and only for candidates that are not already duplicates.
    double ill_conditioned_tol = 1e-6;

    /// Worker threads for trials; 0 reads LEIGQ_THREADS (0 or unset = auto).
    std::size_t threads = 0;

    std::size_t trial_budget() const { return max_trials == 0 ? 20 * k : max_trials; }

    /// Throws DomainError on k == 0, non-positive tolerances or a trial
    /// budget below k.
    void validate() const;

    /// Library defaults with the triangular shortcut switched off. The
    /// singular prefill stays on: it only adds the exactly known value 0.
    static SolveConfig benchmark(std::size_t k, std::uint64_t seed);
};

struct TrialStats {
    std::size_t trials = 0;
    std::size_t restarts = 0;  // duplicates + nonconverged
    std::size_t accepted = 0;
    std::size_t duplicates = 0;
    std::size_t nonconverged = 0;
    // Subcounts of nonconverged.
    std::size_t insufficient_reduction = 0;
    std::size_t singular = 0;
    std::vector<int> iterations;  // per trial, in trial order
    /// res_pair of every certified candidate, duplicates included.
    std::vector<double> candidate_res_pair;
    long total_iterations = 0;
    double wall_seconds = 0.0;
    double seconds_per_accepted = 0.0;  // 0 when nothing was accepted
};

struct SolveResult {
    std::vector<Eigenpair> pairs;
    TrialStats stats;
    std::size_t requested = 0;
    bool possible_continuum = false;
    bool used_triangular_shortcut = false;
    std::size_t prefilled = 0;

    std::size_t found() const { return pairs.size(); }
    bool shortfall() const { return pairs.size() < requested; }
};

SolveResult solve_left(const QMatrix& A, const SolveConfig& cfg);

bool within_tol(const Quaternion& p, const Quaternion& q, double tol,
                DedupMetric metric = DedupMetric::absolute);

struct Clustering {
    std::vector<std::size_t> representatives;  // indices into the input
    std::vector<std::size_t> assignment;       // cluster id of every input
};

/// Greedy clustering in arrival order. With `certificates` (one per input,
/// smaller is better) each representative moves to the best-certified member
/// of its cluster as long as it stays more than tol from the others and every
/// input stays within tol of some representative.
Clustering cluster(const std::vector<Quaternion>& values, double tol,
                   DedupMetric metric = DedupMetric::absolute,
                   std::span<const double> certificates = {});

std::vector<Quaternion> dedup(const std::vector<Quaternion>& values, double tol,
                              DedupMetric metric = DedupMetric::absolute);

/// Diagonal of A when A is exactly upper or lower triangular.
std::optional<std::vector<Quaternion>> triangular_diagonal(const QMatrix& A);

/// nu_0 pairs (0, kernel basis vector) when A is singular, else empty.
std::vector<Eigenpair> singular_prefill(const QMatrix& A, const SolveConfig& cfg);

/// Start vector of trial `t`.
/// Deterministic in (A, cfg.seed, t).
QVector trial_start(const QMatrix& A, const SolveConfig& cfg, std::size_t t);

/// Thread count used for `requested` (0 = LEIGQ_THREADS, then hardware).
std::size_t resolve_threads(std::size_t requested);

}  // namespace leigq
