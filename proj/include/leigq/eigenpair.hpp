#pragma once

#include <cstddef>
#include <string_view>

#include "leigq/certificate.hpp"
#include "leigq/newton.hpp"

namespace leigq {

/// Where an accepted eigenpair came from.
enum class PairSource { newton, triangular_shortcut, singular_prefill, refinement };

std::string_view to_string(PairSource source);

/// Accepted left eigenpair. `vector` has unit norm and satisfies the gauge at
/// `pivot` (real, positive entry).
struct Eigenpair {
    Quaternion lambda;
    QVector vector;
    PivotIndex pivot = 0;
    int iterations = 0;
    std::size_t trial = 0;
    PairSource source = PairSource::newton;
    Certificate cert;
};

}  // namespace leigq
