#pragma once

/**
 * @file bench.hpp
 * @brief Benchmark runner over random matrix families.
 *
 * Every matrix asks for K = n distinct left eigenpairs with the triangular
 * shortcut disabled. A matrix counts as a success only if all n are found.
 * Per matrix, maxRes is the largest res_pair over the accepted pairs and
 * acc = 100 K_found / K.
 */

#include <cstdint>
#include <vector>

#include "leigq/families.hpp"
#include "leigq/multistart.hpp"

namespace leigq {

struct BenchConfig {
    std::vector<Family> families{Family::triangular, Family::dense, Family::hermitian,
                                 Family::sparse};
    std::vector<std::size_t> sizes{2, 3, 4, 8, 16, 32};
    /// Matrices per size; one entry applies to all sizes.
    std::vector<std::size_t> nmat{200, 200, 100, 50, 25, 10};
    std::uint64_t seed = 0;
    double density = 0.1;
    /// Template for the per-matrix solve; k and seed are overwritten and the
    /// triangular shortcut is forced off.
    SolveConfig solve = SolveConfig::benchmark(1, 0);

    std::size_t nmat_for(std::size_t size_index) const;
    void validate() const;
};

/// Everything needed to rerun one failed benchmark solve.
struct FailureCapture {
    Family family = Family::dense;
    std::size_t n = 0;
    std::size_t sample = 0;
    std::uint64_t matrix_seed = 0;
    std::uint64_t solve_seed = 0;
    double density = 0.1;
    QMatrix matrix;
    std::size_t k_found = 0;
};

struct BenchRow {
    Family family = Family::dense;
    std::size_t n = 0;
    std::size_t nmat = 0;
    std::size_t successes = 0;
    double success_rate = 0.0;  // percent
    double mean_acc = 0.0;      // percent
    double med_max_res = 0.0;
    double max_max_res = 0.0;
    double med_max_res_rel = 0.0;  // maxRes / s(A)
    double mean_time_per_pair = 0.0;
    std::size_t trials = 0;
    std::size_t restarts = 0;
    std::size_t duplicates = 0;
    std::size_t nonconverged = 0;
    long iterations = 0;
    double seconds = 0.0;
};

struct BenchReport {
    std::vector<BenchRow> rows;
    std::vector<FailureCapture> failures;
    double total_seconds = 0.0;
};

/// Seeds of sample `sample` in the (family, n) cell.
std::uint64_t bench_matrix_seed(std::uint64_t base, Family f, std::size_t n, std::size_t sample);
std::uint64_t bench_solve_seed(std::uint64_t matrix_seed);

BenchReport run_bench(const BenchConfig& cfg);

/// Re-solves a capture with the configuration it was produced under.
SolveResult rerun_capture(const FailureCapture& capture, const BenchConfig& cfg);

/// acc(A) in percent.
double acceptance_percent(std::size_t k_found, std::size_t k);

}  // namespace leigq
