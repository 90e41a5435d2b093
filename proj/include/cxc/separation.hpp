#pragma once

#include <cstdint>
#include <vector>

#include "cxc/complex.hpp"

namespace cxc {

/// Analysis of one wall pair: crossing relation, the crosser set, the
/// separation degree (how many walls cross both) and, for disjoint
/// pairs, the well-separation degree with a maximum facing-triple-free
/// witness.
struct WallPairReport {
  WallId h1 = -1;
  WallId h2 = -1;
  WallRelation relation = WallRelation::disjoint;
  std::vector<WallId> crossers;
  int sep_degree = 0;
  int wsep_degree = -1;           // -1 when relation == crossing
  std::vector<WallId> witness;    // empty when relation == crossing
};

/// True iff all four halfspace quadrants are nonempty.
bool crosses(const CubeComplex& cc, WallId h1, WallId h2);

/// True iff `mid` is disjoint from both and they lie on opposite sides.
bool wall_separates_walls(const CubeComplex& cc, WallId mid, WallId a, WallId b);

/// Three pairwise disjoint walls, none between the other two.
bool is_facing_triple(const CubeComplex& cc, WallId a, WallId b, WallId c);

/// Walls crossing both h1 and h2.
std::vector<WallId> crossers(const CubeComplex& cc, WallId h1, WallId h2);

/// Exact maximum cardinality of a facing-triple-free subset of the
/// crossers of a disjoint pair, with witness. Branch and bound over the
/// facing-triple hypergraph.
WallPairReport wsep_degree(const CubeComplex& cc, WallId h1, WallId h2);

/// Full report for any distinct pair (wsep fields only when disjoint).
WallPairReport analyze_pair(const CubeComplex& cc, WallId h1, WallId h2);

/// Longest nested sequence among the given walls, as a longest path in
/// the halfspace-inclusion DAG.
std::vector<WallId> longest_chain(const CubeComplex& cc, const std::vector<WallId>& walls);

/// Memoized pairwise well-separation degrees for one complex.
class WsepCache {
 public:
  explicit WsepCache(const CubeComplex& cc);
  /// Degree of a disjoint pair (PreconditionError if the walls cross).
  int degree(WallId a, WallId b);
  const CubeComplex& complex() const { return *cc_; }

 private:
  const CubeComplex* cc_;
  std::vector<std::int32_t> deg_;  // -1 unknown
};

}  // namespace cxc
