#pragma once

#include <vector>

#include "cxc/complex.hpp"
#include "cxc/gauge.hpp"
#include "cxc/separation.hpp"

namespace cxc {

/// One consecutive pair of the excursion sequence: the step to this
/// wall, its well-separation degree with the previous wall, and the
/// budget c * kappa(t) both must respect.
struct ExcursionStep {
  WallId wall = -1;
  int time = 0;
  long long gap = 0;        // time - previous time (first row: time from start)
  int wsep_with_prev = -1;  // -1 on the first row
  Fraction budget{0, 1};
};

/// Result of the minimal-constant excursion search along a geodesic
/// segment. The sequence must also cover the segment: the first
/// crossing within c * kappa(max(t_1, 1)) of the start and the last
/// within c * kappa(T) of the end.
struct ExcursionReport {
  Vertex from = -1;
  Vertex to = -1;
  int path_length = 0;
  std::string gauge;
  Fraction best_constant{0, 1};
  std::vector<WallId> sequence;
  std::vector<int> times;
  std::vector<ExcursionStep> per_step;
  long long start_slack = 0;  // t_1
  long long end_slack = 0;    // T - t_last
};

/// Minimal feasible excursion constant over all admissible wall
/// subsequences: binary search over the finite set of constraint
/// ratios, reachability DP per candidate.
ExcursionReport excursion_scan(const CubeComplex& cc, const GeodesicPath& path,
                               const SublinearGauge& gauge, WsepCache* cache = nullptr);

/// Number of walls separating o from both x and y.
int gromov_product(const CubeComplex& cc, Vertex o, Vertex x, Vertex y);

/// True iff every listed wall separates o from x, so every geodesic
/// from o to x crosses all of them.
bool hyp_basis_member(const CubeComplex& cc, Vertex o, const std::vector<WallId>& targets,
                      Vertex x);

/// Nearest-point diagnostics for one sample against a geodesic.
struct ContractionSample {
  Vertex sample = -1;
  int dist_to_path = 0;
  std::vector<Vertex> nearest_set;
  int nearest_diameter = 0;
  Fraction kappa{1, 1};  // kappa(dist(path start, sample))
  double ratio = 0.0;    // nearest_diameter / kappa
};

std::vector<ContractionSample> contraction_profile(const CubeComplex& cc,
                                                   const GeodesicPath& path,
                                                   const SublinearGauge& gauge,
                                                   const std::vector<Vertex>& samples);

}  // namespace cxc
