#include "leigq/multistart.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <random>
#include <string>
#include <thread>

namespace leigq {

void SolveConfig::validate() const {
    if (k == 0) throw DomainError("solve: k must be >= 1");
    if (!(accept_tol_rel > 0.0)) throw DomainError("solve: accept_tol_rel must be positive");
    if (!(dedup_tol > 0.0)) throw DomainError("solve: dedup_tol must be positive");
    if (!(sphere_trigger > 0.0)) throw DomainError("solve: sphere_trigger must be positive");
    if (!(ill_conditioned_tol > 0.0)) throw DomainError("solve: ill_conditioned_tol must be positive");
    if (!(shift_scale > 0.0)) throw DomainError("solve: shift_scale must be positive");
    if (inverse_steps < 0) throw DomainError("solve: inverse_steps must be >= 0");
    if (rank_tol && !(*rank_tol > 0.0)) throw DomainError("solve: rank_tol must be positive");
    if (!(newton.abs_tol >= 0.0) || !(newton.rel_tol >= 0.0) ||
        newton.abs_tol + newton.rel_tol <= 0.0)
        throw DomainError("solve: Newton tolerances must be positive");
    if (trial_budget() < k) throw DomainError("solve: max_trials must be >= k");
    refine_config.validate();
}

SolveConfig SolveConfig::benchmark(std::size_t k, std::uint64_t seed) {
    SolveConfig cfg;
    cfg.k = k;
    cfg.seed = seed;
    cfg.triangular_shortcut = false;
    return cfg;
}

bool within_tol(const Quaternion& p, const Quaternion& q, double tol, DedupMetric metric) {
    const double d = distance(p, q);
    if (metric == DedupMetric::absolute) return d <= tol;
    return d <= tol * (1.0 + std::max(p.abs(), q.abs()));
}

Clustering cluster(const std::vector<Quaternion>& values, double tol, DedupMetric metric,
                   std::span<const double> certificates) {
    if (!certificates.empty() && certificates.size() != values.size())
        throw DimensionError("cluster: one certificate per value required");
    Clustering out;
    out.assignment.resize(values.size());
    std::vector<std::size_t> first;  // founding member of each cluster
    for (std::size_t t = 0; t < values.size(); ++t) {
        std::size_t c = 0;
        while (c < first.size() && !within_tol(values[t], values[first[c]], tol, metric)) ++c;
        if (c == first.size()) first.push_back(t);
        out.assignment[t] = c;
    }
    out.representatives = first;
    if (certificates.empty()) return out;

    for (std::size_t c = 0; c < first.size(); ++c) {
        for (std::size_t t = 0; t < values.size(); ++t) {
            if (out.assignment[t] != c || !(certificates[t] < certificates[out.representatives[c]]))
                continue;
            bool ok = true;
            for (std::size_t o = 0; o < first.size() && ok; ++o)
                if (o != c && within_tol(values[t], values[out.representatives[o]], tol, metric))
                    ok = false;
            // Every input must stay within tol of some representative.
            for (std::size_t m = 0; m < values.size() && ok; ++m) {
                if (within_tol(values[m], values[t], tol, metric)) continue;
                bool covered = false;
                for (std::size_t o = 0; o < first.size() && !covered; ++o)
                    covered = o != c && within_tol(values[m], values[out.representatives[o]], tol, metric);
                ok = covered;
            }
            if (ok) out.representatives[c] = t;
        }
    }
    return out;
}

std::vector<Quaternion> dedup(const std::vector<Quaternion>& values, double tol,
                              DedupMetric metric) {
    if (!(tol > 0.0)) throw DomainError("dedup: tol must be positive");
    std::vector<Quaternion> out;
    for (std::size_t idx : cluster(values, tol, metric).representatives) out.push_back(values[idx]);
    return out;
}

std::optional<std::vector<Quaternion>> triangular_diagonal(const QMatrix& A) {
    const std::size_t n = A.size();
    bool upper = true, lower = true;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            if (A(r, s) == Quaternion{}) continue;
            if (r > s) upper = false;
            if (r < s) lower = false;
        }
    if (!upper && !lower) return std::nullopt;
    std::vector<Quaternion> diag;
    for (std::size_t r = 0; r < n; ++r) diag.push_back(A(r, r));
    return diag;
}

namespace {

Eigenpair pair_from_kernel(const QMatrix& A, const Quaternion& lambda, const QVector& v,
                           PairSource source, double scale) {
    Eigenpair p;
    p.lambda = lambda;
    p.pivot = select_pivot(v);
    p.vector = regauge(v, p.pivot);
    p.source = source;
    p.cert = certify(A, lambda, p.vector, scale);
    return p;
}

std::seed_seq trial_seed(std::uint64_t seed, std::uint64_t trial, std::uint32_t stream) {
    return std::seed_seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                         static_cast<std::uint32_t>(trial),
                         static_cast<std::uint32_t>(trial >> 32), stream};
}

enum class Outcome { candidate, nonconverged, insufficient, singular };

struct TrialResult {
    Outcome outcome = Outcome::nonconverged;
    int iterations = 0;
    bool ill_conditioned = false;
    Eigenpair pair;
};

RefineConfig trial_refine_config(const SolveConfig& cfg, std::size_t t) {
    RefineConfig rc = cfg.refine_config;
    auto seq = trial_seed(cfg.seed, t, 1);
    rc.seed = std::mt19937_64(seq)();
    return rc;
}

TrialResult run_trial(const QMatrix& A, const SolveConfig& cfg, double scale, std::size_t t) {
    TrialResult res;
    NewtonResult nr;
    try {
        const QVector x0 = trial_start(A, cfg, t);
        nr = newton_solve(A, init_lambda(A, x0), x0, cfg.newton, scale);
    } catch (const Error&) {
        return res;
    }
    res.iterations = nr.iterations;
    if (!nr.converged) {
        switch (nr.status) {
            case NewtonStatus::singular_system: res.outcome = Outcome::singular; break;
            case NewtonStatus::stalled:
            case NewtonStatus::insufficient_reduction: res.outcome = Outcome::insufficient; break;
            default: res.outcome = Outcome::nonconverged; break;
        }
        return res;
    }

    Eigenpair pair;
    pair.lambda = nr.lambda;
    pair.vector = nr.x;
    pair.pivot = nr.pivot;
    pair.cert = certify(A, nr.lambda, nr.x, scale);
    try {
        if (cfg.refine == RefineMode::adaptive)
            res.ill_conditioned =
                !gauged_jacobian_rank(A, nr.lambda, nr.x, nr.pivot, cfg.ill_conditioned_tol)
                     .full_rank();
        if (cfg.refine != RefineMode::off)
            pair = polish_pair(A, nr.lambda, nr.x, trial_refine_config(cfg, t), scale);
    } catch (const Error&) {
        // Keep the unpolished Newton pair.
    }
    pair.source = PairSource::newton;
    pair.trial = t;
    pair.iterations = nr.iterations;

    if (!(pair.cert.res_pair <= cfg.accept_tol_rel * scale)) {
        res.outcome = Outcome::insufficient;
        return res;
    }
    res.outcome = Outcome::candidate;
    res.pair = std::move(pair);
    return res;
}

std::vector<TrialResult> run_batch(const QMatrix& A, const SolveConfig& cfg, double scale,
                                   std::size_t first, std::size_t count, std::size_t threads) {
    std::vector<TrialResult> out(count);
    if (threads <= 1 || count <= 1) {
        for (std::size_t t = 0; t < count; ++t) out[t] = run_trial(A, cfg, scale, first + t);
        return out;
    }
    std::vector<std::exception_ptr> errors(count);
    std::vector<std::thread> pool;
    const std::size_t workers = std::min(threads, count);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t t = w; t < count; t += workers) {
                try {
                    out[t] = run_trial(A, cfg, scale, first + t);
                } catch (...) {
                    errors[t] = std::current_exception();
                }
            }
        });
    }
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

}  // namespace

std::vector<Eigenpair> singular_prefill(const QMatrix& A, const SolveConfig& cfg) {
    const double tol = cfg.rank_tol ? *cfg.rank_tol : default_rank_tol(A.size());
    if (nullity(A, tol) == 0) return {};
    const double scale = matrix_scale(A);
    std::vector<Eigenpair> out;
    for (const QVector& v : kernel_basis(A, tol))
        out.push_back(pair_from_kernel(A, Quaternion{}, v, PairSource::singular_prefill, scale));
    return out;
}

QVector trial_start(const QMatrix& A, const SolveConfig& cfg, std::size_t t) {
    const std::size_t n = A.size();
    auto seq = trial_seed(cfg.seed, t, 0);
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss;
    QVector x(n);
    for (std::size_t r = 0; r < n; ++r) x[r] = {gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
    if (cfg.start == StartMode::random || cfg.inverse_steps <= 0) return x;

    double fro2 = 0.0;
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) fro2 += A(r, s).norm2();
    const double unit = cfg.shift_scale * std::sqrt(fro2 / static_cast<double>(n));
    const Quaternion sigma = Quaternion{gauss(rng), gauss(rng), gauss(rng), gauss(rng)} * unit;

    Eigen::PartialPivLU<RealMat> lu(rho(A.shifted(sigma)));
    RealVec y = rvec(x);
    for (int step = 0; step < cfg.inverse_steps; ++step) {
        RealVec z = lu.solve(y);
        const double nz = z.norm();
        if (!z.allFinite() || nz == 0.0) break;
        y = z / nz;
    }
    return rvec_inv(y);
}

std::size_t resolve_threads(std::size_t requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("LEIGQ_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
            // Unparsable values fall back to auto.
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

SolveResult solve_left(const QMatrix& A, const SolveConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    const double scale = matrix_scale(A);
    const std::size_t n = A.size();

    SolveResult result;
    result.requested = cfg.k;
    auto finish = [&] {
        auto& st = result.stats;
        st.restarts = st.duplicates + st.nonconverged;
        st.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        st.seconds_per_accepted = result.pairs.empty() ? 0.0 : st.wall_seconds / result.pairs.size();
        result.possible_continuum =
            static_cast<double>(result.pairs.size()) > cfg.sphere_trigger * static_cast<double>(n);
        return result;
    };
    if (n == 0) return finish();

    if (cfg.triangular_shortcut) {
        if (auto diag = triangular_diagonal(A)) {
            result.used_triangular_shortcut = true;
            for (const Quaternion& q : *diag) {
                if (result.pairs.size() == cfg.k) break;
                bool seen = std::any_of(result.pairs.begin(), result.pairs.end(), [&](const auto& p) {
                    return within_tol(p.lambda, q, cfg.dedup_tol, cfg.dedup_metric);
                });
                if (seen) continue;
                MinResidual mr = res_min(A, q);
                if (!(mr.sigma <= cfg.accept_tol_rel * scale)) continue;
                result.pairs.push_back(
                    pair_from_kernel(A, q, mr.vector, PairSource::triangular_shortcut, scale));
            }
            return finish();
        }
    }

    if (cfg.singular_prefill) {
        for (auto& p : singular_prefill(A, cfg)) {
            if (result.pairs.size() == cfg.k) break;
            result.pairs.push_back(std::move(p));
            ++result.prefilled;
        }
    }

    auto& st = result.stats;
    const std::size_t budget = cfg.trial_budget();
    const std::size_t threads = resolve_threads(cfg.threads);
    std::size_t next = 0;
    while (result.pairs.size() < cfg.k && next < budget) {
        const std::size_t count = std::min(threads, budget - next);
        auto batch = run_batch(A, cfg, scale, next, count, threads);
        for (auto& tr : batch) {
            if (result.pairs.size() >= cfg.k) break;
            ++st.trials;
            ++next;
            st.iterations.push_back(tr.iterations);
            st.total_iterations += tr.iterations;
            switch (tr.outcome) {
                case Outcome::singular:
                    ++st.singular;
                    ++st.nonconverged;
                    continue;
                case Outcome::insufficient:
                    ++st.insufficient_reduction;
                    ++st.nonconverged;
                    continue;
                case Outcome::nonconverged:
                    ++st.nonconverged;
                    continue;
                case Outcome::candidate: break;
            }
            auto& pairs = result.pairs;
            auto find_hit = [&](const Quaternion& l) {
                return std::find_if(pairs.begin(), pairs.end(), [&](const Eigenpair& p) {
                    return within_tol(p.lambda, l, cfg.dedup_tol, cfg.dedup_metric);
                });
            };
            auto hit = find_hit(tr.pair.lambda);
            const bool search = cfg.refine == RefineMode::full ||
                                (cfg.refine == RefineMode::adaptive && tr.ill_conditioned);
            if (hit == pairs.end() && search) {
                try {
                    Eigenpair r = refine(A, tr.pair.lambda, trial_refine_config(cfg, tr.pair.trial), scale);
                    if (r.cert.res_min <= tr.pair.cert.res_min &&
                        r.cert.res_pair <= cfg.accept_tol_rel * scale) {
                        r.source = PairSource::newton;
                        r.trial = tr.pair.trial;
                        r.iterations = tr.pair.iterations;
                        tr.pair = std::move(r);
                    }
                } catch (const Error&) {
                    // Keep the polished pair.
                }
                hit = find_hit(tr.pair.lambda);
            }
            st.candidate_res_pair.push_back(tr.pair.cert.res_pair);
            if (hit == pairs.end()) {
                pairs.push_back(std::move(tr.pair));
                ++st.accepted;
                continue;
            }
            ++st.duplicates;
            // A better-certified duplicate replaces its representative when
            // that keeps the accepted set separated.
            if (hit->source == PairSource::newton && tr.pair.cert.res_min < hit->cert.res_min) {
                bool separated = std::none_of(pairs.begin(), pairs.end(), [&](const Eigenpair& p) {
                    return &p != &*hit &&
                           within_tol(p.lambda, tr.pair.lambda, cfg.dedup_tol, cfg.dedup_metric);
                });
                if (separated) *hit = std::move(tr.pair);
            }
        }
    }
    return finish();
}

}  // namespace leigq
