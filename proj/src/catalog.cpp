#include "leigq/catalog.hpp"

#include <functional>
#include <utility>

namespace leigq::catalog {

namespace {

constexpr Quaternion I = Quaternion::i();
constexpr Quaternion J = Quaternion::j();
constexpr Quaternion K = Quaternion::k();

constexpr Quaternion q(double a, double b, double c, double d) { return {a, b, c, d}; }

}  // namespace

QMatrix huang_so_2_5() { return {{0, 1.0 + I}, {1.0 - I, 0}}; }
QMatrix huang_so_2_6() { return {{0, I}, {J, 1}}; }
QMatrix huang_so_2_7() { return {{2, I}, {-I, 2}}; }
QMatrix rotation_2x2() { return {{0, 1}, {-1, 0}}; }

QMatrix mvps_19() {
    return {{I, 0, 0},
            {K, J, 0},
            {-3.0 * I, 2.0 * K, K}};
}

QMatrix mvps_38() {
    return {{0, I, 1},
            {3.0 * I - K, 0, 1},
            {K, q(-1, 0, 1, 1), 0}};
}

QMatrix mvps_52() {
    return {{J, 1, 0},
            {2.0 * I, -K, 1},
            {q(2, -1, -2, 0), q(-1, 0, -1, 1), q(0, -1, 0, -1)}};
}

QMatrix mvps_55() {
    return {{K, 0, 0},
            {3.0 * I - J, -I, I},
            {q(1, 0, 0, -2), J, -J}};
}

QMatrix mvps_56() {
    return {{q(0, -1, -1, 0), 0, 0},
            {K, -I, I},
            {q(1, -1, 0, 0), J, -J}};
}

QMatrix circulant_4x4() {
    const Quaternion c0 = q(-2, 1, 1, 4);
    const Quaternion c1 = q(2, 4, 1, 1);
    const Quaternion c2 = q(1, 3, 2, 2);
    const Quaternion c3 = q(-1, 2, 2, 3);
    return {{c0, c1, c2, c3},
            {c3, c0, c1, c2},
            {c2, c3, c0, c1},
            {c1, c2, c3, c0}};
}

std::vector<Quaternion> circulant_4x4_reference() {
    return {q(-1.5, -0.43, 1.5, 4.6), q(-2, -2, 0, 2), q(-2.9, 0.85, -1.2, 5.1),
            q(-5.2, 1.5, -0.25, 1.9)};
}

QMatrix five_eigenvalues_3x3() {
    return {{q(-7, 6, -6, -7), q(3, -7, 11, -2), q(11, -9, 0, 0)},
            {q(6, 1, -5, 3), q(9, 7, -6, -10), q(-5, 15, 14, -1)},
            {q(16, 6, 14, 11), q(20, -3, 4, 6), q(-5, 19, 1, -3)}};
}

std::vector<Quaternion> five_eigenvalues_3x3_reference() {
    return {q(-22.877487, 15.850469, -17.069787, -11.791606),
            q(11.833188, 9.698189, -13.382634, -19.325731),
            q(13.399540, 15.934883, -12.000914, -0.414566),
            q(14.897483, 16.835221, -11.965564, -2.863713),
            q(21.109974, 21.579378, 5.435201, -2.138868)};
}

QMatrix deficient_4x4() {
    return {{q(1, 3, 0, 1), q(8, 1, 1, -4), q(-8, 0, 0, 4), q(-7, -2, 4, 1)},
            {q(0, -1, -1, 0), q(1, 1, -2, 1), 0, q(0, 1, 1, 0)},
            {q(0, -1, -1, 0), q(-1, 0, -6, 3), q(2, 1, 4, -2), q(2, 1, 1, -1)},
            {0, q(8, 0, 0, -4), q(-8, 0, 0, 4), q(-6, 1, 4, 2)}};
}

QMatrix sphere_plus_isolated_4x4() {
    return {{q(2, 5, -5, 6), q(12, -3, -5, 4), q(8, -1, -1, -2), q(20, -4, 2, 2)},
            {q(0, 0, 4, 0), q(10, 4, -2, 4), q(0, 0, 4, 0), q(0, 0, 8, 0)},
            {q(8, -1, 3, -2), q(28, -5, -3, 0), q(2, 5, -1, 6), q(20, -4, 10, 2)},
            {q(0, 0, -4, 0), q(-20, 4, -6, -2), q(0, 0, -4, 0), q(-10, 8, -16, 2)}};
}

namespace {

const std::vector<std::pair<std::string_view, std::function<QMatrix()>>>& registry() {
    static const std::vector<std::pair<std::string_view, std::function<QMatrix()>>> table = {
        {"hs2.5", huang_so_2_5},
        {"hs2.6", huang_so_2_6},
        {"hs2.7", huang_so_2_7},
        {"rotation2", rotation_2x2},
        {"mvps19", mvps_19},
        {"mvps38", mvps_38},
        {"mvps52", mvps_52},
        {"mvps55", mvps_55},
        {"mvps56", mvps_56},
        {"circulant4", circulant_4x4},
        {"five3", five_eigenvalues_3x3},
        {"deficient4", deficient_4x4},
        {"sphere4", sphere_plus_isolated_4x4},
    };
    return table;
}

}  // namespace

std::vector<std::string_view> names() {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
}

std::optional<QMatrix> by_name(std::string_view name) {
    for (const auto& [key, fn] : registry())
        if (key == name) return fn();
    return std::nullopt;
}

}  // namespace leigq::catalog
