#pragma once

#include <string>
#include <vector>

#include "cxc/complex.hpp"

namespace cxc {

struct NamedComplex {
  std::string name;
  CubeComplex complex;
};

/// The built-in instance family used by `verify --suite standard` and
/// the acceptance suite: grids up to 6x6 (plus two small 3d grids),
/// paths, trees up to 60 vertices, RAAG hulls of radius <= 2 for the
/// free group, Z^2 and Z^2 * Z, and five seeded random median graphs
/// of at most 40 vertices.
std::vector<NamedComplex> standard_suite();

}  // namespace cxc
