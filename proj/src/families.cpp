#include "leigq/families.hpp"

#include <random>

namespace leigq {

std::string_view to_string(Family f) {
    switch (f) {
        case Family::dense: return "dense";
        case Family::hermitian: return "hermitian";
        case Family::triangular: return "triangular";
        case Family::sparse: return "sparse";
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (Family f : {Family::dense, Family::hermitian, Family::triangular, Family::sparse})
        if (to_string(f) == name) return f;
    return std::nullopt;
}

void FamilySpec::validate() const {
    if (n == 0) throw DomainError("family: n must be >= 1");
    if (!(density > 0.0 && density <= 1.0)) throw DomainError("family: density must be in (0, 1]");
}

std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

namespace {

QMatrix dense(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(mix_seed(seed));
    std::normal_distribution<double> gauss;
    QMatrix A(n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
            const double a = gauss(rng), b = gauss(rng), c = gauss(rng), d = gauss(rng);
            A(r, s) = {a, b, c, d};
        }
    return A;
}

}  // namespace

QMatrix gen_matrix(const FamilySpec& spec) {
    spec.validate();
    const std::size_t n = spec.n;
    QMatrix R = dense(n, spec.seed);
    switch (spec.family) {
        case Family::dense: return R;
        case Family::hermitian: {
            QMatrix A(n);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s) A(r, s) = (R(r, s) + R(s, r).conj()) * 0.5;
            return A;
        }
        case Family::triangular:
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < r; ++s) R(r, s) = Quaternion{};
            return R;
        case Family::sparse: {
            std::mt19937_64 mask(mix_seed(spec.seed ^ 0x5a5a5a5a5a5a5a5aull));
            std::bernoulli_distribution keep(spec.density);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t s = 0; s < n; ++s)
                    if (!keep(mask)) R(r, s) = Quaternion{};
            return R;
        }
    }
    return R;
}

}  // namespace leigq
