#include "leigq/refine.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

namespace leigq {

std::string_view to_string(PairSource source) {
    switch (source) {
        case PairSource::newton: return "newton";
        case PairSource::triangular_shortcut: return "triangular_shortcut";
        case PairSource::singular_prefill: return "singular_prefill";
        case PairSource::refinement: return "refinement";
    }
    return "unknown";
}

void RefineConfig::validate() const {
    if (radii.empty()) throw DomainError("refine: radii must not be empty");
    for (std::size_t t = 0; t < radii.size(); ++t) {
        if (!(radii[t] > 0.0)) throw DomainError("refine: radii must be positive");
        if (t > 0 && !(radii[t] < radii[t - 1]))
            throw DomainError("refine: radii must be strictly decreasing");
    }
    if (samples_per_radius == 0) throw DomainError("refine: samples_per_radius must be >= 1");
    if (simplex_max_evals == 0) throw DomainError("refine: simplex_max_evals must be >= 1");
    if (polish_max_steps < 0) throw DomainError("refine: polish_max_steps must be >= 0");
}

SimplexResult nelder_mead(const std::function<double(const Vec4&)>& f, const Vec4& start,
                          double step, std::size_t max_evals, double diameter_tol) {
    constexpr double alpha = 1.0, gamma = 2.0, rho_c = 0.5, sigma = 0.5;
    std::array<Vec4, 5> p;
    std::array<double, 5> v{};
    std::size_t evals = 0;
    auto eval = [&](const Vec4& x) {
        ++evals;
        return f(x);
    };

    p[0] = start;
    v[0] = eval(start);
    for (int t = 0; t < 4; ++t) {
        p[t + 1] = start;
        p[t + 1][t] += step;
        v[t + 1] = eval(p[t + 1]);
    }

    std::array<int, 5> order{};
    auto sort_simplex = [&] {
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int l, int r) { return v[l] < v[r]; });
        std::array<Vec4, 5> ps;
        std::array<double, 5> vs{};
        for (int t = 0; t < 5; ++t) {
            ps[t] = p[order[t]];
            vs[t] = v[order[t]];
        }
        p = ps;
        v = vs;
    };
    auto diameter = [&] {
        double d = 0.0;
        for (int t = 1; t < 5; ++t) d = std::max(d, (p[t] - p[0]).norm());
        return d;
    };

    sort_simplex();
    while (evals < max_evals && diameter() > diameter_tol && v[0] > 0.0) {
        Vec4 centroid = (p[0] + p[1] + p[2] + p[3]) / 4.0;
        Vec4 xr = centroid + alpha * (centroid - p[4]);
        double fr = eval(xr);
        if (fr < v[0]) {
            Vec4 xe = centroid + gamma * (xr - centroid);
            double fe = eval(xe);
            if (fe < fr) {
                p[4] = xe;
                v[4] = fe;
            } else {
                p[4] = xr;
                v[4] = fr;
            }
        } else if (fr < v[3]) {
            p[4] = xr;
            v[4] = fr;
        } else {
            bool outside = fr < v[4];
            Vec4 xc = outside ? Vec4(centroid + rho_c * (xr - centroid))
                              : Vec4(centroid + rho_c * (p[4] - centroid));
            double fc = eval(xc);
            if (fc < (outside ? fr : v[4])) {
                p[4] = xc;
                v[4] = fc;
            } else {
                for (int t = 1; t < 5; ++t) {
                    p[t] = p[0] + sigma * (p[t] - p[0]);
                    v[t] = eval(p[t]);
                }
            }
        }
        sort_simplex();
    }
    return {p[0], v[0], evals};
}

RefinedValue refine_certificate(const QMatrix& A, const Quaternion& lambda0,
                                const RefineConfig& cfg) {
    cfg.validate();
    std::size_t evals = 0;
    auto phi = [&](const Quaternion& l) {
        ++evals;
        return res_min(A, l).sigma;
    };

    const double unit = 1.0 + lambda0.abs();
    Quaternion best = lambda0;
    double best_val = phi(lambda0);

    std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed),
                      static_cast<std::uint32_t>(cfg.seed >> 32), 0x5eedu};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> gauss;
    for (double r : cfg.radii) {
        for (std::size_t s = 0; s < cfg.samples_per_radius; ++s) {
            Vec4 dir(gauss(rng), gauss(rng), gauss(rng), gauss(rng));
            double len = dir.norm();
            if (len == 0.0) continue;
            Quaternion cand = lambda0 + from_rvec(dir * (r * unit / len));
            double val = phi(cand);
            if (val < best_val) {
                best = cand;
                best_val = val;
            }
        }
    }

    // phi is 1-Lipschitz in lambda, so phi(best) bounds the distance to the
    // nearest zero from below; use it as the simplex scale within the radii.
    const double step = std::clamp(best_val, 1e3 * cfg.simplex_diameter_tol * unit,
                                   cfg.radii.front() * unit);
    auto f = [&](const Vec4& x) { return res_min(A, from_rvec(x)).sigma; };
    SimplexResult nm = nelder_mead(f, rvec(best), step, cfg.simplex_max_evals,
                                   cfg.simplex_diameter_tol * unit);
    evals += nm.evaluations;
    if (nm.value < best_val) {
        best = from_rvec(nm.point);
        best_val = nm.value;
    }

    MinResidual mr = res_min(A, best);
    return {best, mr.vector, mr.sigma, evals};
}

namespace {

Eigenpair make_pair(const QMatrix& A, const Quaternion& lambda, const MinResidual& mr,
                    double scale) {
    Eigenpair out;
    out.lambda = lambda;
    out.pivot = select_pivot(mr.vector);
    out.vector = regauge(mr.vector, out.pivot);
    out.source = PairSource::refinement;
    out.cert = certify(A, lambda, out.vector, scale);
    return out;
}

}  // namespace

Eigenpair polish_pair(const QMatrix& A, const Quaternion& lambda, const QVector& v,
                      const RefineConfig& cfg, std::optional<double> scale) {
    cfg.validate();
    const double s = scale ? *scale : matrix_scale(A);

    Quaternion best = lambda;
    MinResidual best_mr = res_min(A, lambda);

    NewtonSettings one_step;
    one_step.abs_tol = 0.0;
    one_step.rel_tol = 1e-15;
    one_step.max_iter = 1;
    one_step.stall_window = 0;

    Quaternion l = lambda;
    QVector x = v;
    int steps = 0;
    for (; steps < cfg.polish_max_steps; ++steps) {
        NewtonResult r;
        try {
            r = newton_solve(A, l, x, one_step, s);
        } catch (const Error&) {
            break;
        }
        if (r.iterations == 0) break;
        l = r.lambda;
        x = r.x;
        MinResidual mr = res_min(A, l);
        if (mr.sigma < best_mr.sigma) {
            best = l;
            best_mr = std::move(mr);
        }
        if (r.converged || r.status == NewtonStatus::singular_system ||
            r.status == NewtonStatus::stalled)
            break;
    }

    Eigenpair out = make_pair(A, best, best_mr, s);
    out.iterations = steps;
    return out;
}

Eigenpair refine(const QMatrix& A, const Quaternion& lambda0, const RefineConfig& cfg,
                 std::optional<double> scale) {
    RefinedValue stage1 = refine_certificate(A, lambda0, cfg);
    return polish_pair(A, stage1.lambda, stage1.vector, cfg, scale);
}

}  // namespace leigq
