#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cxc/bits.hpp"
#include "cxc/errors.hpp"

namespace cxc {

using Vertex = std::int32_t;
using WallId = std::int32_t;

enum class WallSide : std::uint8_t { minus = 0, plus = 1 };

inline WallSide opposite(WallSide s) {
  return s == WallSide::minus ? WallSide::plus : WallSide::minus;
}

enum class WallRelation : std::uint8_t { crossing = 0, disjoint = 1 };

/// A wall: an equivalence class of parallel edges (transitive closure of
/// "opposite sides of a square") together with the two halfspaces its
/// removal leaves behind.
struct Hyperplane {
  WallId id = -1;
  std::vector<std::pair<Vertex, Vertex>> edge_class;
  Bits side_minus;  // halfspace containing the smaller endpoint of the first class edge
  Bits side_plus;
  Bits support;  // endpoints of edge_class
};

/// A combinatorial geodesic: vertex sequence plus its ordered wall
/// crossings. crossings[i].step == t means the wall separates
/// vertices[t] from vertices[t+1].
struct GeodesicPath {
  struct Crossing {
    WallId wall;
    int step;
  };
  std::vector<Vertex> vertices;
  std::vector<Crossing> crossings;

  int length() const { return static_cast<int>(vertices.size()) - 1; }
  Vertex source() const { return vertices.front(); }
  Vertex target() const { return vertices.back(); }
};

struct MedianReport {
  bool ok = false;
  std::array<Vertex, 3> witness{-1, -1, -1};
  std::size_t median_count = 0;  // medians of the witness triple (1 means unused)
  std::string detail;
};

/// One halfspace choice per wall.
struct VertexOrientation {
  std::vector<WallSide> side;
};

struct HellyReport {
  bool pass = false;
  bool vacuous = false;  // some pair already disjoint
  std::string detail;
};

/// Checks the median-graph axiom: every vertex triple has exactly one
/// median. Throws InputError for non-simple or disconnected input; a
/// failing triple is reported, not thrown.
MedianReport validate_median(Vertex vertex_count,
                             const std::vector<std::pair<Vertex, Vertex>>& edges);

/// Derives the wall structure of a graph. Throws StructureError when an
/// edge class does not split the graph into exactly two components.
std::vector<Hyperplane> derive_walls(Vertex vertex_count,
                                     const std::vector<std::pair<Vertex, Vertex>>& edges);

/// A finite CAT(0) cube complex, stored as its 1-skeleton. Construction
/// validates the median axiom and derives walls, halfspaces, the
/// all-pairs distance table, wall relations and the dimension; after
/// that the object is immutable and safe for concurrent reads.
class CubeComplex {
 public:
  static CubeComplex build(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

  Vertex vertex_count() const { return n_; }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  const std::vector<Hyperplane>& walls() const { return walls_; }
  int wall_count() const { return static_cast<int>(walls_.size()); }

  /// Max size of a pairwise-crossing wall family (exact branch and bound).
  int dimension() const { return dimension_; }
  int diameter() const { return diameter_; }

  int dist(Vertex u, Vertex v) const;

  WallSide side_of_vertex(WallId w, Vertex v) const;
  bool wall_separates(WallId w, Vertex u, Vertex v) const;
  const Bits& side_bits(WallId w, WallSide s) const;
  WallId wall_of_edge(Vertex u, Vertex v) const;

  /// Relation between two distinct walls.
  WallRelation wall_relation(WallId a, WallId b) const;
  /// For disjoint walls: which side of `a` contains wall `b`.
  WallSide side_of_wall(WallId a, WallId b) const;

  /// Walls separating u from v, as a wall-indexed bitset.
  Bits separating_set(Vertex u, Vertex v) const;

  Vertex median(Vertex x, Vertex y, Vertex z) const;

  /// { w : dist(u,w) + dist(w,v) = dist(u,v) } as a vertex bitset.
  Bits interval(Vertex u, Vertex v) const;

  /// Deterministic geodesic: walk from u towards v picking the smallest
  /// neighbor id that still decreases the distance.
  GeodesicPath geodesic(Vertex u, Vertex v) const;

  /// Smallest interval-closed superset (fixpoint of interval closure).
  Bits hull(const Bits& seed) const;

  bool is_convex(const Bits& set) const;

  /// Nearest-point projection onto a convex set.
  Vertex gate(Vertex x, const Bits& convex_set) const;

  VertexOrientation orientation_of(Vertex v) const;
  bool orientation_consistent(const VertexOrientation& o) const;
  /// The unique vertex realizing a consistent orientation, if any.
  std::optional<Vertex> realize_orientation(const VertexOrientation& o) const;

  void check_vertex(Vertex v) const;
  /// Validates the GeodesicPath invariants (adjacency, length, crossings).
  void check_path(const GeodesicPath& path) const;

 private:
  CubeComplex() = default;

  Vertex n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;          // normalized u < v, sorted
  std::vector<std::vector<Vertex>> adj_;                  // sorted neighbor lists
  std::vector<std::vector<std::pair<Vertex, int>>> adj_edge_;  // (neighbor, edge index)
  std::vector<Hyperplane> walls_;
  std::vector<WallId> edge_wall_;     // edge index -> wall id
  std::vector<std::int32_t> dist_;    // n * n
  std::vector<std::uint8_t> wall_rel_;  // W * W: 0 cross, 1 other in minus, 2 other in plus
  int dimension_ = 0;
  int diameter_ = 0;
};

/// Helly property check over convex vertex sets: pairwise intersection
/// must imply a common point. Test utility; valid complexes always pass.
HellyReport helly_check(const CubeComplex& cc, const std::vector<Bits>& convex_sets);

}  // namespace cxc
