#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cxc/complex.hpp"
#include "cxc/separation.hpp"

namespace cxc {

/// Certificate for one d_k value: a maximum chain of pairwise
/// k-well-separated walls separating the endpoints, listed in crossing
/// order, with the degrees of consecutive pairs.
struct WellSepCertificate {
  int k = 0;
  Vertex u = -1;
  Vertex v = -1;
  std::vector<WallId> chain;
  std::vector<int> pair_degrees;  // size chain.size()-1 (empty for <= 1)
};

struct DkResult {
  int distance = 0;
  WellSepCertificate certificate;
};

/// d_k(u,v): size of a maximum collection of pairwise k-well-separated
/// walls separating u from v. Longest-path DP over the crossing order;
/// consecutive-pair degrees bound all pairs by crosser nesting.
DkResult dk(const CubeComplex& cc, Vertex u, Vertex v, int k, WsepCache* cache = nullptr);

struct DkMatrix {
  Vertex n = 0;
  int k = 0;
  std::vector<std::int32_t> d;
  int at(Vertex u, Vertex v) const { return d[static_cast<std::size_t>(u) * n + v]; }
};

DkMatrix dk_matrix(const CubeComplex& cc, int k);

/// Max over ordered triples x,y,z along the path of
/// d_k(x,y) + d_k(y,z) - d_k(x,z).
int geodesic_projection_defect(const CubeComplex& cc, const GeodesicPath& path, int k,
                               WsepCache* cache = nullptr);

/// How the four-point defect is sampled.
struct QuadrupleSampling {
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t count = 0;

  static QuadrupleSampling all() { return {true, 0, 0}; }
  static QuadrupleSampling seeded(std::uint64_t seed, std::uint64_t count) {
    return {false, seed, count};
  }
  /// Exhaustive below 30 vertices, otherwise seeded.
  static QuadrupleSampling pick(Vertex n, std::uint64_t seed, std::uint64_t count) {
    return n < 30 ? all() : seeded(seed, count);
  }
};

/// Four-point hyperbolicity estimate for (Y_k, d_k): half the largest
/// gap between the two biggest of the three pair sums, against the
/// 9(k+2) bound.
struct DeltaReport {
  int k = 0;
  std::uint64_t sampled_quadruples = 0;
  int doubled_max_defect = 0;  // 2 * defect, exact integer
  double max_defect = 0.0;
  int bound = 0;  // 9(k+2)
  bool violated = false;
  std::array<Vertex, 4> witness{-1, -1, -1, -1};
};

DeltaReport four_point_delta(const CubeComplex& cc, int k, const QuadrupleSampling& sampling,
                             WsepCache* cache = nullptr);
DeltaReport four_point_delta(const DkMatrix& m, const QuadrupleSampling& sampling);

}  // namespace cxc
