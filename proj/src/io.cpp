#include "leigq/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace leigq {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError("quatmat-v1 " + where + ": " + what);
}

Quaternion parse_quaternion(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 4) fail(where, "expected an array of 4 numbers");
    double c[4];
    for (std::size_t t = 0; t < 4; ++t) {
        if (!j[t].is_number()) fail(where + "/" + std::to_string(t), "expected a number");
        c[t] = j[t].get<double>();
    }
    return {c[0], c[1], c[2], c[3]};
}

QMatrix parse_document(const json& doc) {
    if (!doc.is_object()) fail("at /", "expected an object");
    if (!doc.contains("format") || doc["format"] != "quatmat-v1")
        fail("at /format", "expected \"quatmat-v1\"");
    if (!doc.contains("rows") || !doc["rows"].is_array()) fail("at /rows", "expected an array");
    const json& rows = doc["rows"];
    const std::size_t n = rows.size();
    if (n == 0) fail("at /rows", "matrix must have at least one row");
    if (doc.contains("n")) {
        if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != n)
            fail("at /n", "does not match the number of rows (" + std::to_string(n) + ")");
    }
    QMatrix A(n);
    for (std::size_t r = 0; r < n; ++r) {
        const std::string where = "at /rows/" + std::to_string(r);
        if (!rows[r].is_array()) fail(where, "expected an array");
        if (rows[r].size() != n)
            fail(where, "non-square matrix: row has " + std::to_string(rows[r].size()) +
                            " entries, expected " + std::to_string(n));
        for (std::size_t s = 0; s < n; ++s)
            A(r, s) = parse_quaternion(rows[r][s], where + "/" + std::to_string(s));
    }
    return A;
}

}  // namespace

QMatrix parse_matrix(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError("quatmat-v1 at byte " + std::to_string(e.byte) + ": malformed JSON (" +
                         e.what() + ")");
    }
    return parse_document(doc);
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write " + path.string());
    out << text;
    if (!out) throw Error("write failed: " + path.string());
}

QMatrix parse_matrix_file(const std::filesystem::path& path) {
    try {
        return parse_matrix(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string format_double(double x) {
    if (!std::isfinite(x)) throw DomainError("cannot serialize non-finite value");
    if (x == 0.0 && std::signbit(x)) return "-0.0";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string serialize_matrix(const QMatrix& A) {
    std::string out = "{\n  \"format\": \"quatmat-v1\",\n  \"n\": " + std::to_string(A.size()) +
                      ",\n  \"rows\": [\n";
    for (std::size_t r = 0; r < A.size(); ++r) {
        out += "    [";
        for (std::size_t s = 0; s < A.size(); ++s) {
            const Quaternion& q = A(r, s);
            out += (s ? ", [" : "[") + format_double(q.a) + ", " + format_double(q.b) + ", " +
                   format_double(q.c) + ", " + format_double(q.d) + "]";
        }
        out += r + 1 < A.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

json to_json(const Quaternion& q) { return json::array({q.a, q.b, q.c, q.d}); }

json to_json(const Eigenpair& p) {
    json v = json::array();
    for (const auto& q : p.vector) v.push_back(to_json(q));
    return {{"lambda", to_json(p.lambda)},
            {"vector", v},
            {"res_pair", p.cert.res_pair},
            {"res_min", p.cert.res_min},
            {"res_min_rel", p.cert.res_min_rel},
            {"iters", p.iterations},
            {"trial", p.trial},
            {"pivot", p.pivot},
            {"source", std::string(to_string(p.source))}};
}

json to_json(const std::vector<Eigenpair>& pairs) {
    json out = json::array();
    for (const auto& p : pairs) out.push_back(to_json(p));
    return out;
}

json to_json(const TrialStats& st) {
    return {{"trials", st.trials},
            {"restarts", st.restarts},
            {"accepted", st.accepted},
            {"duplicates", st.duplicates},
            {"nonconverged", st.nonconverged},
            {"insufficient_reduction", st.insufficient_reduction},
            {"singular", st.singular},
            {"iterations", st.iterations},
            {"candidate_res_pair", st.candidate_res_pair},
            {"total_iterations", st.total_iterations},
            {"wall_seconds", st.wall_seconds},
            {"seconds_per_accepted", st.seconds_per_accepted}};
}

json to_json(const SphereModel& s) {
    return {{"center", to_json(s.center)},
            {"radius", s.radius},
            {"normal", json::array({s.normal(0), s.normal(1), s.normal(2), s.normal(3)})},
            {"offset", s.offset},
            {"inliers", s.inliers},
            {"on_sphere_dev", s.on_sphere_dev},
            {"max_deviation", s.max_deviation},
            {"inlier_fraction", s.inlier_fraction}};
}

json to_json(const Components& c) {
    json spheres = json::array();
    for (const auto& s : c.spheres) spheres.push_back(to_json(s));
    return {{"spheres", spheres}, {"isolated", to_json(c.isolated)}, {"points", to_json(c.points)}};
}

json to_json(const FailureCapture& f) {
    return {{"family", std::string(to_string(f.family))},
            {"n", f.n},
            {"sample", f.sample},
            {"matrix_seed", f.matrix_seed},
            {"solve_seed", f.solve_seed},
            {"density", f.density},
            {"k_found", f.k_found},
            {"matrix", json::parse(serialize_matrix(f.matrix))}};
}

FailureCapture capture_from_json(const json& j) {
    try {
        FailureCapture f;
        auto fam = parse_family(j.at("family").get<std::string>());
        if (!fam) throw ParseError("capture: unknown family");
        f.family = *fam;
        f.n = j.at("n").get<std::size_t>();
        f.sample = j.at("sample").get<std::size_t>();
        f.matrix_seed = j.at("matrix_seed").get<std::uint64_t>();
        f.solve_seed = j.at("solve_seed").get<std::uint64_t>();
        f.density = j.at("density").get<double>();
        f.k_found = j.at("k_found").get<std::size_t>();
        f.matrix = parse_document(j.at("matrix"));
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("capture: ") + e.what());
    }
}

json to_json(const BenchReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"family", std::string(to_string(row.family))},
                        {"n", row.n},
                        {"nMat", row.nmat},
                        {"successes", row.successes},
                        {"success_rate", row.success_rate},
                        {"mean_acc", row.mean_acc},
                        {"med_maxRes", row.med_max_res},
                        {"max_maxRes", row.max_max_res},
                        {"med_maxRes_rel", row.med_max_res_rel},
                        {"mean_time_per_pair", row.mean_time_per_pair},
                        {"trials", row.trials},
                        {"restarts", row.restarts},
                        {"duplicates", row.duplicates},
                        {"nonconverged", row.nonconverged},
                        {"iterations", row.iterations},
                        {"seconds", row.seconds}});
    json failures = json::array();
    for (const auto& f : r.failures) failures.push_back(to_json(f));
    return {{"rows", rows}, {"failures", failures}, {"total_seconds", r.total_seconds}};
}

}  // namespace leigq
