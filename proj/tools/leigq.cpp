// leigq: left eigenvalues of quaternion matrices from the command line.
//
// Exit codes: 0 success, 2 fewer eigenpairs than requested, 1 on errors.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "leigq/bench.hpp"
#include "leigq/catalog.hpp"
#include "leigq/io.hpp"
#include "leigq/multistart.hpp"
#include "leigq/refine.hpp"
#include "leigq/sphere.hpp"

using namespace leigq;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_shortfall = 2;

Quaternion parse_lambda(const std::string& text) {
    std::vector<double> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end == item.c_str() || *end != '\0') throw ParseError("--lambda: bad number '" + item + "'");
        c.push_back(v);
    }
    if (c.size() != 4) throw ParseError("--lambda expects four comma-separated numbers a,b,c,d");
    return {c[0], c[1], c[2], c[3]};
}

template <typename T>
std::vector<T> parse_list(const std::string& text, T (*conv)(const std::string&)) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(conv(item));
    return out;
}

std::size_t to_size(const std::string& s) { return static_cast<std::size_t>(std::stoul(s)); }

Family to_family(const std::string& s) {
    auto f = parse_family(s);
    if (!f) throw ParseError("unknown family '" + s + "'");
    return *f;
}

QMatrix load(const std::string& arg) {
    // "@name" selects a built-in example matrix.
    if (!arg.empty() && arg[0] == '@') {
        auto m = catalog::by_name(arg.substr(1));
        if (!m) throw ParseError("unknown example '" + arg.substr(1) + "'");
        return *m;
    }
    return parse_matrix_file(arg);
}

std::string fmt_q(const Quaternion& q) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "%+.12g %+.12gi %+.12gj %+.12gk", q.a, q.b, q.c, q.d);
    return buf;
}

void print_pairs(const std::vector<Eigenpair>& pairs) {
    std::printf("%-4s %-62s %-10s %-10s %5s %6s\n", "#", "lambda", "res_pair", "res_min", "iters",
                "trial");
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        const auto& p = pairs[t];
        std::printf("%-4zu %-62s %-10.3e %-10.3e %5d %6zu\n", t + 1, fmt_q(p.lambda).c_str(),
                    p.cert.res_pair, p.cert.res_min, p.iterations, p.trial);
    }
}

void maybe_write_json(const std::string& path, const nlohmann::json& j) {
    if (path.empty()) return;
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Left eigenvalues of quaternion matrices by gauged Newton iteration"};
    app.require_subcommand(1);

    // solve
    std::string solve_file, solve_json;
    SolveConfig solve_cfg;
    bool no_shortcuts = false;
    auto* solve = app.add_subcommand("solve", "Compute up to K distinct left eigenpairs");
    solve->add_option("file", solve_file, "Matrix file (quatmat-v1) or @example")->required();
    solve->add_option("--k", solve_cfg.k, "Requested number of eigenpairs")->default_val(1);
    solve->add_option("--seed", solve_cfg.seed, "RNG seed")->default_val(0);
    solve->add_option("--accept-tol", solve_cfg.accept_tol_rel, "Acceptance tolerance relative to s(A)")
        ->default_val(1e-10);
    solve->add_option("--dedup-tol", solve_cfg.dedup_tol, "De-duplication distance in R^4")
        ->default_val(1e-5);
    solve->add_option("--max-trials", solve_cfg.max_trials, "Trial budget (0 = 20 K)")->default_val(0);
    solve->add_option("--threads", solve_cfg.threads, "Worker threads (0 = LEIGQ_THREADS or auto)")
        ->default_val(0);
    solve->add_flag("--no-shortcuts", no_shortcuts, "Disable triangular shortcut and singular prefill");
    solve->add_option("--json", solve_json, "Write results JSON here");

    // certify
    std::string cert_file, cert_lambda;
    auto* certify_cmd = app.add_subcommand("certify", "Vector-free certificate res_min at lambda");
    certify_cmd->add_option("file", cert_file, "Matrix file or @example")->required();
    certify_cmd->add_option("--lambda", cert_lambda, "a,b,c,d")->required();

    // refine
    std::string ref_file, ref_lambda, ref_json;
    std::uint64_t ref_seed = 0;
    auto* refine_cmd = app.add_subcommand("refine", "Polish an eigenvalue candidate");
    refine_cmd->add_option("file", ref_file, "Matrix file or @example")->required();
    refine_cmd->add_option("--lambda", ref_lambda, "a,b,c,d")->required();
    refine_cmd->add_option("--seed", ref_seed, "RNG seed for the sampling stage")->default_val(0);
    refine_cmd->add_option("--json", ref_json, "Write the refined pair as JSON");

    // spheres
    std::string sph_file, sph_json;
    std::size_t sph_samples = 20;
    std::uint64_t sph_seed = 0;
    auto* spheres = app.add_subcommand("spheres", "Sample the left spectrum and detect spherical components");
    spheres->add_option("file", sph_file, "Matrix file or @example")->required();
    spheres->add_option("--samples", sph_samples, "Number of distinct samples requested")->default_val(20);
    spheres->add_option("--seed", sph_seed, "RNG seed")->default_val(0);
    spheres->add_option("--json", sph_json, "Write components JSON here");

    // gen
    std::string gen_family = "dense", gen_out;
    FamilySpec gen_spec;
    auto* gen = app.add_subcommand("gen", "Generate a random matrix");
    gen->add_option("--family", gen_family, "dense|hermitian|triangular|sparse")->default_val("dense");
    gen->add_option("--n", gen_spec.n, "Size")->required();
    gen->add_option("--seed", gen_spec.seed, "Seed")->default_val(0);
    gen->add_option("--density", gen_spec.density, "Keep probability (sparse)")->default_val(0.1);
    gen->add_option("-o,--out", gen_out, "Output file (stdout if omitted)");

    // example
    std::string ex_name, ex_out;
    auto* example = app.add_subcommand("example", "Write a built-in example matrix");
    example->add_option("name", ex_name, "Example name; 'list' prints all")->required();
    example->add_option("-o,--out", ex_out, "Output file (stdout if omitted)");

    // bench
    std::string bench_sizes = "2,3,4,8,16,32", bench_families = "triangular,dense,hermitian,sparse",
                bench_nmat = "200,200,100,50,25,10", bench_out;
    std::uint64_t bench_seed = 0;
    double bench_density = 0.1;
    auto* bench = app.add_subcommand("bench", "Benchmark over random matrix families");
    bench->add_option("--sizes", bench_sizes, "Comma-separated sizes")->default_val(bench_sizes);
    bench->add_option("--families", bench_families, "Comma-separated families")
        ->default_val(bench_families);
    bench->add_option("--nmat", bench_nmat, "Matrices per size (one value or one per size)")
        ->default_val(bench_nmat);
    bench->add_option("--seed", bench_seed, "Base seed")->default_val(0);
    bench->add_option("--density", bench_density, "Sparse keep probability")->default_val(0.1);
    bench->add_option("--out", bench_out, "Write report JSON here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_error;
    }

    try {
        if (*solve) {
            const QMatrix A = load(solve_file);
            if (no_shortcuts) {
                solve_cfg.triangular_shortcut = false;
                solve_cfg.singular_prefill = false;
            }
            const SolveResult res = solve_left(A, solve_cfg);
            print_pairs(res.pairs);
            const auto& st = res.stats;
            std::printf("found %zu of %zu; trials %zu, duplicates %zu, nonconverged %zu, %.3f s\n",
                        res.found(), res.requested, st.trials, st.duplicates, st.nonconverged,
                        st.wall_seconds);
            if (res.possible_continuum)
                std::printf("note: many distinct values; run 'spheres' to check for continua\n");
            maybe_write_json(solve_json, {{"pairs", to_json(res.pairs)},
                                          {"stats", to_json(st)},
                                          {"requested", res.requested},
                                          {"possible_continuum", res.possible_continuum}});
            return res.shortfall() ? exit_shortfall : exit_ok;
        }
        if (*certify_cmd) {
            const QMatrix A = load(cert_file);
            const Quaternion l = parse_lambda(cert_lambda);
            const MinResidual mr = res_min(A, l);
            const double s = matrix_scale(A);
            const DetResult det = det_poly(A, l);
            std::printf("lambda       %s\n", fmt_q(l).c_str());
            std::printf("res_min      %.6e\n", mr.sigma);
            std::printf("res_min/s(A) %.6e\n", mr.sigma / s);
            std::printf("s(A)         %.6e\n", s);
            std::printf("log|det|     %.6e (sign %d)\n", det.log_magnitude, det.sign);
            return exit_ok;
        }
        if (*refine_cmd) {
            const QMatrix A = load(ref_file);
            RefineConfig rc;
            rc.seed = ref_seed;
            const Quaternion l0 = parse_lambda(ref_lambda);
            const double before = res_min(A, l0).sigma;
            const Eigenpair p = refine(A, l0, rc);
            std::printf("input   %s  res_min %.3e\n", fmt_q(l0).c_str(), before);
            std::printf("refined %s  res_min %.3e  res_pair %.3e\n", fmt_q(p.lambda).c_str(),
                        p.cert.res_min, p.cert.res_pair);
            maybe_write_json(ref_json, to_json(p));
            return exit_ok;
        }
        if (*spheres) {
            const QMatrix A = load(sph_file);
            SolveConfig cfg;
            cfg.k = sph_samples;
            cfg.seed = sph_seed;
            const SolveResult res = solve_left(A, cfg);
            DetectConfig dc;
            dc.fit.seed = sph_seed;
            const Components comp = detect_components(A, res.pairs, dc);
            std::printf("%zu samples, %zu spheres, %zu isolated\n", comp.points.size(),
                        comp.spheres.size(), comp.isolated.size());
            for (const auto& s : comp.spheres)
                std::printf("sphere center %s radius %.12g inliers %zu max dev %.2e normal "
                            "(%.6f, %.6f, %.6f, %.6f) offset %.12g\n",
                            fmt_q(s.center).c_str(), s.radius, s.inliers.size(), s.max_deviation,
                            s.normal(0), s.normal(1), s.normal(2), s.normal(3), s.offset);
            for (const auto& p : comp.isolated)
                std::printf("isolated %s res_min %.3e\n", fmt_q(p.lambda).c_str(), p.cert.res_min);
            maybe_write_json(sph_json, to_json(comp));
            return exit_ok;
        }
        if (*gen) {
            gen_spec.family = to_family(gen_family);
            const std::string text = serialize_matrix(gen_matrix(gen_spec));
            if (gen_out.empty())
                std::cout << text;
            else
                write_text_file(gen_out, text);
            return exit_ok;
        }
        if (*example) {
            if (ex_name == "list") {
                for (auto name : catalog::names()) std::cout << name << "\n";
                return exit_ok;
            }
            const std::string text = serialize_matrix(load("@" + ex_name));
            if (ex_out.empty())
                std::cout << text;
            else
                write_text_file(ex_out, text);
            return exit_ok;
        }
        if (*bench) {
            BenchConfig cfg;
            cfg.sizes = parse_list<std::size_t>(bench_sizes, to_size);
            cfg.families = parse_list<Family>(bench_families, to_family);
            cfg.nmat = parse_list<std::size_t>(bench_nmat, to_size);
            cfg.seed = bench_seed;
            cfg.density = bench_density;
            const BenchReport r = run_bench(cfg);
            std::printf("%-10s %4s %5s %8s %10s %10s %12s\n", "family", "n", "nMat", "success%",
                        "med maxRes", "max maxRes", "s/pair");
            for (const auto& row : r.rows)
                std::printf("%-10s %4zu %5zu %8.1f %10.2e %10.2e %12.3e\n",
                            std::string(to_string(row.family)).c_str(), row.n, row.nmat,
                            row.success_rate, row.med_max_res, row.max_max_res,
                            row.mean_time_per_pair);
            std::printf("%zu failures captured, %.1f s total\n", r.failures.size(), r.total_seconds);
            maybe_write_json(bench_out, to_json(r));
            return exit_ok;
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "leigq: %s\n", e.what());
        return exit_error;
    }
    return exit_error;
}
