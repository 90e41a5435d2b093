#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cxc/complex.hpp"

namespace cxc {

/// Product of paths; vertex id is row-major with the first coordinate
/// fastest.
CubeComplex gen_grid(const std::vector<int>& widths);

CubeComplex gen_tree_balanced(int arity, int depth);

/// Random tree: vertex i attaches to a uniform earlier vertex.
CubeComplex gen_tree_random(std::uint64_t seed, int size);

/// Box product of skeletons.
CubeComplex gen_product(const CubeComplex& a, const CubeComplex& b);

/// A right-angled Artin presentation: generator names plus the
/// commutation graph on them.
struct RaagPresentation {
  std::vector<std::string> names;
  std::vector<std::pair<int, int>> commuting;  // simple, loop-free

  /// graph: comma-separated "a-b" pairs; extra: comma-separated lone
  /// generator names. Example: graph "a-b", extra "c".
  static RaagPresentation parse(const std::string& graph, const std::string& extra);
  int generator_count() const { return static_cast<int>(names.size()); }
  bool commute(int a, int b) const;
  /// Clique number of the commutation graph = cube dimension.
  int dimension() const;
};

struct RaagHullResult {
  CubeComplex complex;
  std::vector<std::size_t> ball_sizes;  // |B_0| .. |B_radius| in the Cayley graph
  std::size_t hull_size = 0;
  int ambient_radius = 0;
};

/// Convex hull (interval closure) of the radius-r ball in the Cayley
/// graph of the presentation, computed inside the ball of radius
/// dimension*r + 1. Throws EnlargementError if the closure reaches the
/// ambient shell. Elements are canonicalized by their Foata normal
/// form, so enumeration and vertex ids are deterministic.
RaagHullResult raag_hull(const RaagPresentation& pres, int radius);

/// Sphere-by-sphere ball sizes of the Cayley graph up to max_radius.
std::vector<std::size_t> raag_ball_sizes(const RaagPresentation& pres, int max_radius);

/// Random median graph grown from a point by peripheral convex
/// expansions (each step doubles a convex interval). Result has at
/// least target_size vertices and is re-validated.
CubeComplex gen_random_median(std::uint64_t seed, int target_size);

}  // namespace cxc
