#include "cxc/complex.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace cxc {

namespace {

void check_edge_list(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n < 1) throw InputError("complex must have at least one vertex");
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw InputError("edge endpoint out of range: " + std::to_string(u) + " " +
                       std::to_string(v));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second)
      throw InputError("duplicate edge " + std::to_string(key.first) + " " +
                       std::to_string(key.second));
  }
}

std::vector<std::vector<Vertex>> build_adjacency(Vertex n,
                                                 const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());
  return adj;
}

// BFS distances from src; -1 marks unreachable.
std::vector<std::int32_t> bfs_from(Vertex src, const std::vector<std::vector<Vertex>>& adj) {
  std::vector<std::int32_t> d(adj.size(), -1);
  std::queue<Vertex> q;
  d[src] = 0;
  q.push(src);
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    for (Vertex w : adj[v]) {
      if (d[w] < 0) {
        d[w] = d[v] + 1;
        q.push(w);
      }
    }
  }
  return d;
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

MedianReport validate_median(Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  check_edge_list(n, edges);
  auto adj = build_adjacency(n, edges);

  auto d0 = bfs_from(0, adj);
  for (Vertex v = 0; v < n; ++v)
    if (d0[v] < 0) throw InputError("graph is disconnected (vertex " + std::to_string(v) + ")");

  // All-pairs distances, then every interval as a packed bitset row.
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n) * n);
  for (Vertex s = 0; s < n; ++s) {
    auto d = bfs_from(s, adj);
    std::copy(d.begin(), d.end(), dist.begin() + static_cast<std::size_t>(s) * n);
  }
  auto d = [&](Vertex a, Vertex b) { return dist[static_cast<std::size_t>(a) * n + b]; };

  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  std::vector<std::uint64_t> ivl(static_cast<std::size_t>(n) * n * words, 0);
  auto row = [&](Vertex a, Vertex b) {
    return ivl.data() + (static_cast<std::size_t>(a) * n + b) * words;
  };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a; b < n; ++b) {
      std::uint64_t* r = row(a, b);
      for (Vertex w = 0; w < n; ++w)
        if (d(a, w) + d(w, b) == d(a, b)) r[w >> 6] |= std::uint64_t{1} << (w & 63);
      if (a != b) std::copy(r, r + words, row(b, a));
    }

  MedianReport rep;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      const std::uint64_t* rxy = row(x, y);
      for (Vertex z = y + 1; z < n; ++z) {
        const std::uint64_t* ryz = row(y, z);
        const std::uint64_t* rxz = row(x, z);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words; ++i) c += std::popcount(rxy[i] & ryz[i] & rxz[i]);
        if (c != 1) {
          rep.ok = false;
          rep.witness = {x, y, z};
          rep.median_count = c;
          rep.detail = "triple (" + std::to_string(x) + "," + std::to_string(y) + "," +
                       std::to_string(z) + ") has " + std::to_string(c) + " medians";
          return rep;
        }
      }
    }
  rep.ok = true;
  rep.detail = "median axiom holds";
  return rep;
}

std::vector<Hyperplane> derive_walls(Vertex n,
                                     const std::vector<std::pair<Vertex, Vertex>>& edges_in) {
  check_edge_list(n, edges_in);
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(edges_in.size());
  for (auto [u, v] : edges_in) edges.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(edges.begin(), edges.end());

  const int m = static_cast<int>(edges.size());
  std::vector<std::vector<std::pair<Vertex, int>>> inc(n);  // (neighbor, edge index)
  for (int e = 0; e < m; ++e) {
    inc[edges[e].first].emplace_back(edges[e].second, e);
    inc[edges[e].second].emplace_back(edges[e].first, e);
  }
  for (auto& lst : inc) std::sort(lst.begin(), lst.end());
  auto edge_index = [&](Vertex u, Vertex v) -> int {
    auto it = std::lower_bound(inc[u].begin(), inc[u].end(), std::make_pair(v, -1));
    if (it != inc[u].end() && it->first == v) return it->second;
    return -1;
  };

  // Opposite edges of every square fall in one parallelism class.
  Dsu dsu(m);
  for (int e = 0; e < m; ++e) {
    auto [u, v] = edges[e];
    for (auto [w, eu] : inc[u]) {
      if (w == v) continue;
      for (auto [x, ev] : inc[v]) {
        if (x == u || x == w) continue;
        int wx = edge_index(w, x);
        if (wx >= 0) {
          dsu.unite(e, wx);   // (u,v) opposite (w,x)
          dsu.unite(eu, ev);  // (u,w) opposite (v,x)
        }
      }
    }
  }

  // Wall ids in order of the first member edge.
  std::vector<WallId> edge_wall(m, -1);
  std::vector<Hyperplane> walls;
  for (int e = 0; e < m; ++e) {
    int r = dsu.find(e);
    if (edge_wall[r] < 0) {
      edge_wall[r] = static_cast<WallId>(walls.size());
      walls.push_back(Hyperplane{});
      walls.back().id = edge_wall[r];
    }
    edge_wall[e] = edge_wall[r];
    walls[edge_wall[e]].edge_class.push_back(edges[e]);
  }

  // Removing a wall's edge class must leave exactly the two halfspaces.
  std::vector<char> in_class(m, 0);
  for (auto& wall : walls) {
    std::fill(in_class.begin(), in_class.end(), 0);
    for (const auto& ce : wall.edge_class) in_class[edge_index(ce.first, ce.second)] = 1;

    auto component_from = [&](Vertex start, Bits& out) {
      std::queue<Vertex> q;
      q.push(start);
      out.set(start);
      while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (auto [w, e] : inc[v]) {
          if (in_class[e] || out.test(w)) continue;
          out.set(w);
          q.push(w);
        }
      }
    };

    Vertex a = wall.edge_class.front().first;
    Vertex b = wall.edge_class.front().second;
    Bits side_a(n), side_b(n);
    component_from(a, side_a);
    component_from(b, side_b);
    if (side_a.intersects(side_b) || side_a.count() + side_b.count() != static_cast<std::size_t>(n))
      throw StructureError("wall " + std::to_string(wall.id) +
                           " does not split the graph into two components");
    for (const auto& ce : wall.edge_class)
      if (side_a.test(ce.first) == side_a.test(ce.second))
        throw StructureError("wall " + std::to_string(wall.id) +
                             " has a class edge inside one halfspace");
    wall.side_minus = std::move(side_a);  // side of the smaller endpoint of the first edge
    wall.side_plus = std::move(side_b);
    wall.support = Bits(n);
    for (const auto& ce : wall.edge_class) {
      wall.support.set(ce.first);
      wall.support.set(ce.second);
    }
  }
  return walls;
}

CubeComplex CubeComplex::build(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges_in) {
  MedianReport rep = validate_median(n, edges_in);
  if (!rep.ok) throw StructureError("not a median graph: " + rep.detail);

  CubeComplex cc;
  cc.n_ = n;
  cc.edges_.reserve(edges_in.size());
  for (auto [u, v] : edges_in) cc.edges_.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(cc.edges_.begin(), cc.edges_.end());

  cc.adj_ = build_adjacency(n, cc.edges_);
  cc.adj_edge_.assign(n, {});
  for (int e = 0; e < static_cast<int>(cc.edges_.size()); ++e) {
    cc.adj_edge_[cc.edges_[e].first].emplace_back(cc.edges_[e].second, e);
    cc.adj_edge_[cc.edges_[e].second].emplace_back(cc.edges_[e].first, e);
  }
  for (auto& lst : cc.adj_edge_) std::sort(lst.begin(), lst.end());

  cc.dist_.resize(static_cast<std::size_t>(n) * n);
  cc.diameter_ = 0;
  for (Vertex s = 0; s < n; ++s) {
    auto d = bfs_from(s, cc.adj_);
    for (Vertex v = 0; v < n; ++v) {
      cc.dist_[static_cast<std::size_t>(s) * n + v] = d[v];
      cc.diameter_ = std::max(cc.diameter_, d[v]);
    }
  }

  cc.walls_ = derive_walls(n, cc.edges_);
  cc.edge_wall_.assign(cc.edges_.size(), -1);
  for (const auto& wall : cc.walls_)
    for (const auto& ce : wall.edge_class) {
      auto it = std::lower_bound(cc.adj_edge_[ce.first].begin(), cc.adj_edge_[ce.first].end(),
                                 std::make_pair(ce.second, -1));
      cc.edge_wall_[it->second] = wall.id;
    }

  // Pairwise wall relations: crossing, or which side of a holds b.
  const int W = cc.wall_count();
  cc.wall_rel_.assign(static_cast<std::size_t>(W) * W, 255);
  for (int a = 0; a < W; ++a)
    for (int b = 0; b < W; ++b) {
      if (a == b) continue;
      const Bits& am = cc.walls_[a].side_minus;
      const Bits& ap = cc.walls_[a].side_plus;
      const Bits& bm = cc.walls_[b].side_minus;
      const Bits& bp = cc.walls_[b].side_plus;
      std::uint8_t rel;
      if (am.intersects(bm) && am.intersects(bp) && ap.intersects(bm) && ap.intersects(bp)) {
        rel = 0;
      } else if (cc.walls_[b].support.is_subset_of(am)) {
        rel = 1;
      } else if (cc.walls_[b].support.is_subset_of(ap)) {
        rel = 2;
      } else {
        throw StructureError("walls " + std::to_string(a) + "," + std::to_string(b) +
                             " are neither crossing nor nested");
      }
      cc.wall_rel_[static_cast<std::size_t>(a) * W + b] = rel;
    }

  // Dimension: maximum clique in the crossing graph, exact branch and bound.
  if (W == 0) {
    cc.dimension_ = 0;
  } else {
    std::vector<Bits> cross(W, Bits(W));
    for (int a = 0; a < W; ++a)
      for (int b = 0; b < W; ++b)
        if (a != b && cc.wall_rel_[static_cast<std::size_t>(a) * W + b] == 0) cross[a].set(b);
    int best = 1;
    // Candidates are scanned in id order; popcount bound prunes.
    auto expand = [&](auto&& self, int size, Bits cand) -> void {
      if (size + static_cast<int>(cand.count()) <= best) return;
      int v = cand.first();
      while (v >= 0) {
        cand.reset(v);
        if (size + 1 + static_cast<int>((cand & cross[v]).count()) > best)
          self(self, size + 1, cand & cross[v]);
        best = std::max(best, size + 1);
        if (size + static_cast<int>(cand.count()) <= best) return;
        v = cand.first();
      }
    };
    Bits all(W);
    for (int i = 0; i < W; ++i) all.set(i);
    expand(expand, 0, all);
    cc.dimension_ = best;
  }
  return cc;
}

const std::vector<Vertex>& CubeComplex::neighbors(Vertex v) const {
  check_vertex(v);
  return adj_[v];
}

int CubeComplex::dist(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return dist_[static_cast<std::size_t>(u) * n_ + v];
}

WallSide CubeComplex::side_of_vertex(WallId w, Vertex v) const {
  check_vertex(v);
  return walls_.at(w).side_plus.test(v) ? WallSide::plus : WallSide::minus;
}

bool CubeComplex::wall_separates(WallId w, Vertex u, Vertex v) const {
  return side_of_vertex(w, u) != side_of_vertex(w, v);
}

const Bits& CubeComplex::side_bits(WallId w, WallSide s) const {
  const Hyperplane& h = walls_.at(w);
  return s == WallSide::minus ? h.side_minus : h.side_plus;
}

WallId CubeComplex::wall_of_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  auto it = std::lower_bound(adj_edge_[u].begin(), adj_edge_[u].end(), std::make_pair(v, -1));
  if (it == adj_edge_[u].end() || it->first != v)
    throw InputError("no edge " + std::to_string(u) + "-" + std::to_string(v));
  return edge_wall_[it->second];
}

WallRelation CubeComplex::wall_relation(WallId a, WallId b) const {
  if (a == b) throw InputError("wall relation needs two distinct walls");
  std::uint8_t rel = wall_rel_.at(static_cast<std::size_t>(a) * wall_count() + b);
  return rel == 0 ? WallRelation::crossing : WallRelation::disjoint;
}

WallSide CubeComplex::side_of_wall(WallId a, WallId b) const {
  if (a == b) throw InputError("side_of_wall needs two distinct walls");
  std::uint8_t rel = wall_rel_.at(static_cast<std::size_t>(a) * wall_count() + b);
  if (rel == 0) throw PreconditionError("walls cross; no containing side");
  return rel == 1 ? WallSide::minus : WallSide::plus;
}

Bits CubeComplex::separating_set(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Bits out(wall_count());
  for (const auto& wall : walls_)
    if (wall.side_plus.test(u) != wall.side_plus.test(v)) out.set(wall.id);
  return out;
}

Vertex CubeComplex::median(Vertex x, Vertex y, Vertex z) const {
  check_vertex(x);
  check_vertex(y);
  check_vertex(z);
  for (Vertex w = 0; w < n_; ++w)
    if (dist(x, w) + dist(w, y) == dist(x, y) && dist(y, w) + dist(w, z) == dist(y, z) &&
        dist(x, w) + dist(w, z) == dist(x, z))
      return w;
  throw StructureError("no median found; complex invalid");
}

Bits CubeComplex::interval(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  Bits out(n_);
  int duv = dist(u, v);
  for (Vertex w = 0; w < n_; ++w)
    if (dist(u, w) + dist(w, v) == duv) out.set(w);
  return out;
}

GeodesicPath CubeComplex::geodesic(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  GeodesicPath path;
  path.vertices.push_back(u);
  Vertex cur = u;
  int step = 0;
  while (cur != v) {
    Vertex next = -1;
    for (Vertex w : adj_[cur]) {  // ascending, so the lowest id wins
      if (dist(w, v) == dist(cur, v) - 1) {
        next = w;
        break;
      }
    }
    path.crossings.push_back({wall_of_edge(cur, next), step});
    path.vertices.push_back(next);
    cur = next;
    ++step;
  }
  return path;
}

Bits CubeComplex::hull(const Bits& seed) const {
  if (seed.none()) throw PreconditionError("hull of an empty set");
  Bits cur = seed;
  std::vector<Vertex> members = cur.to_vector();
  std::vector<Vertex> fresh = members;
  while (!fresh.empty()) {
    Bits added(n_);
    for (Vertex a : fresh)
      for (Vertex b : members) {
        int dab = dist(a, b);
        for (Vertex w = 0; w < n_; ++w)
          if (!cur.test(w) && dist(a, w) + dist(w, b) == dab) {
            cur.set(w);
            added.set(w);
          }
      }
    fresh = added.to_vector();
    for (Vertex w : fresh) members.push_back(w);
  }
  return cur;
}

bool CubeComplex::is_convex(const Bits& set) const {
  auto members = set.to_vector();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int dab = dist(members[i], members[j]);
      for (Vertex w = 0; w < n_; ++w)
        if (!set.test(w) && dist(members[i], w) + dist(w, members[j]) == dab) return false;
    }
  return true;
}

Vertex CubeComplex::gate(Vertex x, const Bits& convex_set) const {
  check_vertex(x);
  if (convex_set.none()) throw PreconditionError("gate onto an empty set");
  if (!is_convex(convex_set)) throw PreconditionError("gate target is not convex");
  if (convex_set.test(x)) return x;
  Vertex best = -1;
  int bestd = -1;
  int ties = 0;
  convex_set.for_each([&](int s) {
    int d = dist(x, s);
    if (best < 0 || d < bestd) {
      best = s;
      bestd = d;
      ties = 1;
    } else if (d == bestd) {
      ++ties;
    }
  });
  if (ties != 1) throw StructureError("gate is not unique; set not gate-convex");
  return best;
}

VertexOrientation CubeComplex::orientation_of(Vertex v) const {
  check_vertex(v);
  VertexOrientation o;
  o.side.reserve(walls_.size());
  for (const auto& wall : walls_)
    o.side.push_back(wall.side_plus.test(v) ? WallSide::plus : WallSide::minus);
  return o;
}

bool CubeComplex::orientation_consistent(const VertexOrientation& o) const {
  if (o.side.size() != walls_.size()) throw InputError("orientation has wrong wall count");
  for (std::size_t a = 0; a < walls_.size(); ++a)
    for (std::size_t b = a + 1; b < walls_.size(); ++b)
      if (!side_bits(static_cast<WallId>(a), o.side[a])
               .intersects(side_bits(static_cast<WallId>(b), o.side[b])))
        return false;
  return true;
}

std::optional<Vertex> CubeComplex::realize_orientation(const VertexOrientation& o) const {
  if (o.side.size() != walls_.size()) throw InputError("orientation has wrong wall count");
  Bits cur(n_);
  for (Vertex v = 0; v < n_; ++v) cur.set(v);
  for (std::size_t w = 0; w < walls_.size(); ++w)
    cur &= side_bits(static_cast<WallId>(w), o.side[w]);
  if (cur.count() == 1) return static_cast<Vertex>(cur.first());
  return std::nullopt;
}

void CubeComplex::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + std::to_string(v));
}

void CubeComplex::check_path(const GeodesicPath& path) const {
  if (path.vertices.empty()) throw InputError("empty path");
  for (Vertex v : path.vertices) check_vertex(v);
  for (std::size_t i = 0; i + 1 < path.vertices.size(); ++i)
    if (dist(path.vertices[i], path.vertices[i + 1]) != 1)
      throw PreconditionError("path vertices not adjacent at step " + std::to_string(i));
  if (path.length() != dist(path.source(), path.target()))
    throw PreconditionError("path is not geodesic");
  if (path.crossings.size() != static_cast<std::size_t>(path.length()))
    throw PreconditionError("path crossing list incomplete");
}

HellyReport helly_check(const CubeComplex& cc, const std::vector<Bits>& sets) {
  HellyReport rep;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].none()) throw PreconditionError("helly input set " + std::to_string(i) + " empty");
    if (!cc.is_convex(sets[i]))
      throw PreconditionError("helly input set " + std::to_string(i) + " not convex");
  }
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (!sets[i].intersects(sets[j])) {
        rep.pass = true;
        rep.vacuous = true;
        rep.detail = "sets " + std::to_string(i) + "," + std::to_string(j) + " disjoint";
        return rep;
      }
  if (sets.empty()) {
    rep.pass = true;
    rep.vacuous = true;
    rep.detail = "no sets";
    return rep;
  }
  Bits total = sets.front();
  for (std::size_t i = 1; i < sets.size(); ++i) total &= sets[i];
  rep.pass = total.any();
  rep.detail = rep.pass ? "common point " + std::to_string(total.first())
                        : "pairwise intersecting but no common point";
  return rep;
}

}  // namespace cxc
