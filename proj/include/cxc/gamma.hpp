#pragma once

#include <string>
#include <vector>

#include "cxc/rational.hpp"
#include "cxc/wellsep.hpp"

namespace cxc {

/// The well-separation graph: same vertices as the complex, an edge
/// whenever d_k is at most 10k+4. Bilipschitz to (Y_k, d_k).
struct GammaGraph {
  int k = 0;
  int threshold = 4;  // 10k+4
  Vertex n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
  DkMatrix dk;
  std::vector<std::int32_t> dist;  // BFS metric, -1 unreachable

  int at(Vertex u, Vertex v) const { return dist[static_cast<std::size_t>(u) * n + v]; }
};

GammaGraph build_gamma(const CubeComplex& cc, int k);

struct BilipschitzReport {
  bool pass = true;
  Vertex u = -1;
  Vertex v = -1;
  std::string detail;
};

/// Exact integer sandwich d_gamma <= d_k <= (10k+4) d_gamma over all pairs.
BilipschitzReport bilipschitz_check(const CubeComplex& cc, const GammaGraph& g);

/// Image of a vertex path under the (identity) projection into gamma,
/// with its monotone reparameterization diagnostics.
struct PathProjection {
  std::vector<int> prefix_progress;  // d_gamma(path[0], path[i])
  int additivity_defect = 0;         // max over ordered triples along the path
  Fraction multiplicative{1, 1};     // best-fit constants against the monotone
  int additive = 0;                  // hull of the prefix progress
};

PathProjection project_path(const GammaGraph& g, const std::vector<Vertex>& path);

/// Undirected DOT text, deterministic node and edge order.
std::string export_dot(const GammaGraph& g);
std::string export_dot(const CubeComplex& cc);

}  // namespace cxc
