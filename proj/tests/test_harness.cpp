#include <doctest.h>

#include <filesystem>
#include <string>

#include "leigq/bench.hpp"
#include "leigq/catalog.hpp"
#include "leigq/families.hpp"
#include "leigq/io.hpp"
#include "support.hpp"

using namespace leigq;

namespace {

const std::filesystem::path data_dir{LEIGQ_TEST_DATA_DIR};

std::string error_of(std::string_view text) {
    try {
        parse_matrix(text);
    } catch (const ParseError& e) {
        return e.what();
    }
    return {};
}

}  // namespace

TEST_CASE("gen_matrix: hermitian family is exactly self-adjoint") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const QMatrix A = gen_matrix({Family::hermitian, 1 + seed % 9, seed});
        CHECK(A == A.adjoint());
    }
}

TEST_CASE("gen_matrix: triangular family has zeros below the diagonal") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const std::size_t n = 1 + seed % 8;
        const QMatrix A = gen_matrix({Family::triangular, n, seed});
        for (std::size_t r = 0; r < n; ++r) {
            CHECK(A(r, r) != Quaternion{});
            for (std::size_t s = 0; s < r; ++s) CHECK(A(r, s) == Quaternion{});
        }
        CHECK(triangular_diagonal(A).has_value());
    }
}

TEST_CASE("gen_matrix: sparse n=20 p=0.1 nonzero count is frozen") {
    const QMatrix A = gen_matrix({Family::sparse, 20, 12345, 0.1});
    std::size_t nonzero = 0;
    for (std::size_t r = 0; r < 20; ++r)
        for (std::size_t s = 0; s < 20; ++s) nonzero += A(r, s) != Quaternion{};
    CHECK(nonzero == 35);
    const double fraction = nonzero / 400.0;
    CHECK(fraction >= 0.05);
    CHECK(fraction <= 0.15);
}

TEST_CASE("gen_matrix: deterministic and seed-sensitive") {
    for (Family f : {Family::dense, Family::hermitian, Family::triangular, Family::sparse}) {
        const FamilySpec spec{f, 6, 99, 0.3};
        CHECK(gen_matrix(spec) == gen_matrix(spec));
        CHECK_FALSE(gen_matrix(spec) == gen_matrix({f, 6, 100, 0.3}));
    }
}

TEST_CASE("FamilySpec: validation and names") {
    CHECK_THROWS_AS((FamilySpec{Family::dense, 0, 1}.validate()), DomainError);
    CHECK_THROWS_AS((FamilySpec{Family::sparse, 3, 1, 0.0}.validate()), DomainError);
    CHECK_THROWS_AS((FamilySpec{Family::sparse, 3, 1, 1.5}.validate()), DomainError);
    for (Family f : {Family::dense, Family::hermitian, Family::triangular, Family::sparse})
        CHECK(parse_family(to_string(f)) == f);
    CHECK_FALSE(parse_family("banded").has_value());
}

TEST_CASE("parse_matrix_file: HS2.5 file") {
    const QMatrix A = parse_matrix_file(data_dir / "hs2_5.json");
    REQUIRE(A.size() == 2);
    CHECK(A(0, 0) == Quaternion{});
    CHECK(A(0, 1) == Quaternion(1, 1, 0, 0));
    CHECK(A(1, 0) == Quaternion(1, -1, 0, 0));
    CHECK(A(1, 1) == Quaternion{});
    CHECK(A == catalog::huang_so_2_5());
}

TEST_CASE("serialize_matrix: canonical files round-trip byte-identically") {
    const std::string text = read_text_file(data_dir / "hs2_5.json");
    CHECK(serialize_matrix(parse_matrix(text)) == text);

    test::Random rng(81);
    for (int t = 0; t < 50; ++t) {
        QMatrix A = rng.matrix(1 + t % 6);
        A(0, 0).b = -0.0;
        const std::string s = serialize_matrix(A);
        const QMatrix B = parse_matrix(s);
        CHECK(B == A);
        CHECK(std::signbit(B(0, 0).b));
        CHECK(serialize_matrix(B) == s);
    }
}

TEST_CASE("parse_matrix: errors carry a location") {
    const std::string nonsquare =
        R"({"format": "quatmat-v1", "rows": [[[1,0,0,0],[0,0,0,0]], [[0,0,0,0],[1,0,0,0]], [[0,0,0,0],[0,0,0,0]]]})";
    const std::string e1 = error_of(nonsquare);
    CHECK(e1.find("non-square") != std::string::npos);
    CHECK(e1.find("/rows/0") != std::string::npos);

    const std::string e2 = error_of(R"({"format": "quatmat-v1", "rows": [[[1,0,0]]]})");
    CHECK(e2.find("/rows/0/0") != std::string::npos);

    const std::string e3 = error_of(R"({"format": "quatmat-v1", "rows": [[[1,0,0,0]]] )");
    CHECK(e3.find("at byte") != std::string::npos);

    const std::string e4 = error_of(R"({"format": "quatmat-v2", "rows": [[[1,0,0,0]]]})");
    CHECK(e4.find("/format") != std::string::npos);

    const std::string e5 = error_of(R"({"format": "quatmat-v1", "n": 2, "rows": [[[1,0,0,0]]]})");
    CHECK(e5.find("/n") != std::string::npos);

    const std::string e6 = error_of(R"({"format": "quatmat-v1", "rows": [[[1,"x",0,0]]]})");
    CHECK(e6.find("/rows/0/0/1") != std::string::npos);

    CHECK_THROWS_AS(parse_matrix_file(data_dir / "missing.json"), Error);
}

TEST_CASE("format_double: 17 significant digits and negative zero") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(-0.0) == "-0.0");
    CHECK(format_double(0.0) == "0");
    CHECK_THROWS_AS(format_double(INFINITY), DomainError);
}

TEST_CASE("acceptance_percent: formula") {
    CHECK(acceptance_percent(4, 4) == 100.0);
    CHECK(acceptance_percent(1, 4) == 25.0);
    CHECK(acceptance_percent(0, 3) == 0.0);
}

TEST_CASE("run_bench: report consistency and captures re-fail identically") {
    BenchConfig cfg;
    cfg.families = {Family::triangular, Family::sparse};
    cfg.sizes = {2, 4};
    cfg.nmat = {6};
    cfg.seed = 5;
    const BenchReport report = run_bench(cfg);
    REQUIRE(report.rows.size() == 4);
    std::size_t failures = 0;
    for (const auto& row : report.rows) {
        CHECK(row.nmat == 6);
        CHECK(row.success_rate >= 0.0);
        CHECK(row.success_rate <= 100.0);
        CHECK(row.mean_acc >= 0.0);
        CHECK(row.mean_acc <= 100.0);
        CHECK(row.success_rate == doctest::Approx(100.0 * row.successes / row.nmat));
        CHECK(row.med_max_res >= 0.0);
        CHECK(row.max_max_res >= row.med_max_res);
        CHECK(row.restarts == row.duplicates + row.nonconverged);
        failures += row.nmat - row.successes;
        if (row.family == Family::triangular) {
            CHECK(row.success_rate == 100.0);
            CHECK(row.med_max_res_rel <= 1e-12);
        }
    }
    CHECK(report.failures.size() == failures);
    for (const auto& f : report.failures) {
        const FailureCapture back = capture_from_json(to_json(f));
        CHECK(back.matrix == f.matrix);
        CHECK(back.solve_seed == f.solve_seed);
        const SolveResult again = rerun_capture(back, cfg);
        CHECK(again.found() == f.k_found);
        CHECK(again.found() < f.n);
        CHECK(gen_matrix({f.family, f.n, f.matrix_seed, f.density}) == f.matrix);
    }
}

TEST_CASE("BenchConfig: validation") {
    BenchConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.nmat = {1, 2};
    CHECK_THROWS_AS(cfg.validate(), DomainError);
    cfg = BenchConfig{};
    cfg.sizes = {0};
    cfg.nmat = {1};
    CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("to_json: eigenpair fields") {
    SolveConfig sc;
    sc.k = 2;
    const SolveResult r = solve_left(catalog::huang_so_2_5(), sc);
    const auto j = to_json(r.pairs);
    REQUIRE(j.size() == 2);
    for (const char* key : {"lambda", "vector", "res_pair", "res_min", "iters", "trial"})
        CHECK(j[0].contains(key));
    CHECK(j[0]["vector"].size() == 2);
}
