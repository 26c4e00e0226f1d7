#pragma once

// Random matrix families used by the benchmark runner.

#include <cstdint>
#include <optional>
#include <string_view>

#include "leigq/quaternion.hpp"

namespace leigq {

enum class Family { dense, hermitian, triangular, sparse };

std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
    Family family = Family::dense;
    std::size_t n = 1;
    std::uint64_t seed = 0;
    double density = 0.1;  // sparse only

    /// Throws DomainError unless n >= 1 and 0 < density <= 1.
    void validate() const;
};

/// dense: i.i.d. standard normal coefficients; hermitian: (R + R^*)/2 of a
/// dense R; triangular: the upper triangle (diagonal included) of a dense
/// draw; sparse: a dense draw with each entry kept with probability density.
/// Bit-exact for a given spec.
QMatrix gen_matrix(const FamilySpec& spec);

/// SplitMix64 mixing step, used to derive independent seeds.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace leigq
