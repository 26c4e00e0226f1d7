#include "leigq/bench.hpp"

#include <algorithm>
#include <chrono>

namespace leigq {

std::size_t BenchConfig::nmat_for(std::size_t size_index) const {
    if (nmat.size() == 1) return nmat.front();
    return nmat.at(size_index);
}

void BenchConfig::validate() const {
    if (families.empty() || sizes.empty()) throw DomainError("bench: families and sizes required");
    if (nmat.size() != 1 && nmat.size() != sizes.size())
        throw DomainError("bench: nmat needs one entry or one per size");
    for (std::size_t n : sizes)
        if (n == 0) throw DomainError("bench: sizes must be >= 1");
    if (!(density > 0.0 && density <= 1.0)) throw DomainError("bench: density must be in (0, 1]");
}

std::uint64_t bench_matrix_seed(std::uint64_t base, Family f, std::size_t n, std::size_t sample) {
    std::uint64_t h = mix_seed(base);
    h = mix_seed(h ^ static_cast<std::uint64_t>(f));
    h = mix_seed(h ^ static_cast<std::uint64_t>(n));
    return mix_seed(h ^ static_cast<std::uint64_t>(sample));
}

std::uint64_t bench_solve_seed(std::uint64_t matrix_seed) { return mix_seed(~matrix_seed); }

double acceptance_percent(std::size_t k_found, std::size_t k) {
    return k == 0 ? 0.0 : 100.0 * static_cast<double>(std::min(k_found, k)) / static_cast<double>(k);
}

namespace {

SolveConfig solve_config(const BenchConfig& cfg, std::size_t n, std::uint64_t solve_seed) {
    SolveConfig sc = cfg.solve;
    sc.k = n;
    sc.seed = solve_seed;
    sc.max_trials = 0;
    sc.triangular_shortcut = false;
    return sc;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

SolveResult rerun_capture(const FailureCapture& capture, const BenchConfig& cfg) {
    return solve_left(capture.matrix, solve_config(cfg, capture.n, capture.solve_seed));
}

BenchReport run_bench(const BenchConfig& cfg) {
    cfg.validate();
    const auto start = std::chrono::steady_clock::now();
    BenchReport report;
    for (Family family : cfg.families) {
        for (std::size_t si = 0; si < cfg.sizes.size(); ++si) {
            const std::size_t n = cfg.sizes[si];
            BenchRow row;
            row.family = family;
            row.n = n;
            row.nmat = cfg.nmat_for(si);
            std::vector<double> max_res, max_res_rel;
            double acc_sum = 0.0, time_sum = 0.0;
            std::size_t timed = 0;
            const auto cell_start = std::chrono::steady_clock::now();
            for (std::size_t sample = 0; sample < row.nmat; ++sample) {
                FamilySpec spec{family, n, bench_matrix_seed(cfg.seed, family, n, sample),
                                cfg.density};
                const QMatrix A = gen_matrix(spec);
                const std::uint64_t solve_seed = bench_solve_seed(spec.seed);
                const SolveResult res = solve_left(A, solve_config(cfg, n, solve_seed));

                double mr = 0.0;
                for (const auto& p : res.pairs) mr = std::max(mr, p.cert.res_pair);
                max_res.push_back(mr);
                max_res_rel.push_back(mr / matrix_scale(A));
                acc_sum += acceptance_percent(res.found(), n);
                if (res.found() > 0) {
                    time_sum += res.stats.seconds_per_accepted;
                    ++timed;
                }
                row.trials += res.stats.trials;
                row.restarts += res.stats.restarts;
                row.duplicates += res.stats.duplicates;
                row.nonconverged += res.stats.nonconverged;
                row.iterations += res.stats.total_iterations;
                if (res.found() == n) {
                    ++row.successes;
                } else {
                    report.failures.push_back(
                        {family, n, sample, spec.seed, solve_seed, spec.density, A, res.found()});
                }
            }
            row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                        cell_start).count();
            if (row.nmat > 0) {
                row.success_rate = 100.0 * static_cast<double>(row.successes) / row.nmat;
                row.mean_acc = acc_sum / row.nmat;
            }
            row.med_max_res = median(max_res);
            row.max_max_res = max_res.empty() ? 0.0 : *std::max_element(max_res.begin(), max_res.end());
            row.med_max_res_rel = median(max_res_rel);
            row.mean_time_per_pair = timed ? time_sum / timed : 0.0;
            report.rows.push_back(row);
        }
    }
    report.total_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace leigq
