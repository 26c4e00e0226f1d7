#pragma once

/**
 * @file io.hpp
 * @brief JSON file formats.
 *
 * Matrices use the quatmat-v1 schema
 *   {"format": "quatmat-v1", "n": N, "rows": [[[a, b, c, d], ...], ...]}
 * with quaternions in (1, i, j, k) order. serialize_matrix writes one row per
 * line with 17 significant digits, so parse/serialize round-trips bit-exactly.
 */

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leigq/bench.hpp"
#include "leigq/eigenpair.hpp"
#include "leigq/sphere.hpp"

namespace leigq {

/// Throws ParseError naming the offending location (byte offset for syntax
/// errors, JSON pointer for schema errors).
QMatrix parse_matrix(std::string_view text);
QMatrix parse_matrix_file(const std::filesystem::path& path);

/// Canonical text; throws DomainError for non-finite entries.
std::string serialize_matrix(const QMatrix& A);

/// Shortest-form %.17g rendering of a finite double; "-0.0" for negative zero.
std::string format_double(double x);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

nlohmann::json to_json(const Quaternion& q);
nlohmann::json to_json(const Eigenpair& p);
nlohmann::json to_json(const std::vector<Eigenpair>& pairs);
nlohmann::json to_json(const TrialStats& stats);
nlohmann::json to_json(const SphereModel& s);
nlohmann::json to_json(const Components& c);
nlohmann::json to_json(const FailureCapture& f);
nlohmann::json to_json(const BenchReport& r);

/// Inverse of to_json(FailureCapture); throws ParseError.
FailureCapture capture_from_json(const nlohmann::json& j);

}  // namespace leigq
