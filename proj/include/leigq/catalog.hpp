#pragma once

// Named test matrices from the literature on left eigenvalues, used as
// regression inputs by the tests and the CLI.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leigq/quaternion.hpp"

namespace leigq::catalog {

/// Huang-So 2x2 with two real left eigenvalues {+sqrt2, -sqrt2}.
QMatrix huang_so_2_5();
/// Huang-So 2x2 with left spectrum {(1+i+j-k)/2, (1-i-j-k)/2}.
QMatrix huang_so_2_6();
/// Huang-So 2x2 whose left spectrum is the sphere {2 - b - d j + c k : b^2+c^2+d^2 = 1}.
QMatrix huang_so_2_7();
/// Real 2x2 rotation generator [[0,1],[-1,0]]; its left spectrum is a 2-sphere.
QMatrix rotation_2x2();

/// Macias-Virgos / Pereira-Saez 3x3 examples.
QMatrix mvps_19();  // {i, j, k}, lower triangular
QMatrix mvps_38();  // pole -i is not a left eigenvalue
QMatrix mvps_52();  // 0 plus two other eigenvalues
QMatrix mvps_55();  // {k, 0, -i-j}
QMatrix mvps_56();  // {0, -i-j}, left-spectrum deficient

/// Dense 4x4 quaternion circulant matrix (Pan-Ng).
QMatrix circulant_4x4();
/// 3x3 integer matrix with five isolated left eigenvalues.
QMatrix five_eigenvalues_3x3();
/// 4x4 matrix with only two isolated left eigenvalues.
QMatrix deficient_4x4();
/// 4x4 matrix with a spherical component plus two isolated eigenvalues.
QMatrix sphere_plus_isolated_4x4();

/// Reference values quoted alongside the matrices above.
std::vector<Quaternion> circulant_4x4_reference();
std::vector<Quaternion> five_eigenvalues_3x3_reference();

std::vector<std::string_view> names();
std::optional<QMatrix> by_name(std::string_view name);

}  // namespace leigq::catalog
