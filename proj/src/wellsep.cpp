#include "cxc/wellsep.hpp"

#include <algorithm>
#include <random>

namespace cxc {

DkResult dk(const CubeComplex& cc, Vertex u, Vertex v, int k, WsepCache* cache) {
  cc.check_vertex(u);
  cc.check_vertex(v);
  if (k < 0) throw InputError("level k must be nonnegative");
  DkResult res;
  res.certificate.k = k;
  res.certificate.u = u;
  res.certificate.v = v;
  if (u == v) return res;

  WsepCache local(cc);
  WsepCache& ws = cache ? *cache : local;

  // Separating walls in crossing order; any admissible collection is a
  // chain and appears as a subsequence of this order.
  GeodesicPath geo = cc.geodesic(u, v);
  const int L = static_cast<int>(geo.crossings.size());
  std::vector<WallId> w(L);
  for (int i = 0; i < L; ++i) w[i] = geo.crossings[i].wall;

  std::vector<int> best(L, 1), parent(L, -1);
  int top = 0;
  for (int i = 0; i < L; ++i) {
    for (int j = 0; j < i; ++j) {
      if (best[j] + 1 <= best[i]) continue;
      if (cc.wall_relation(w[j], w[i]) != WallRelation::disjoint) continue;
      if (ws.degree(w[j], w[i]) > k) continue;
      best[i] = best[j] + 1;
      parent[i] = j;
    }
    if (best[i] > best[top]) top = i;
  }

  res.distance = best[top];
  std::vector<WallId>& chain = res.certificate.chain;
  for (int i = top; i >= 0; i = parent[i]) chain.push_back(w[i]);
  std::reverse(chain.begin(), chain.end());
  for (std::size_t i = 0; i + 1 < chain.size(); ++i)
    res.certificate.pair_degrees.push_back(ws.degree(chain[i], chain[i + 1]));
  return res;
}

DkMatrix dk_matrix(const CubeComplex& cc, int k) {
  if (k < 0) throw InputError("level k must be nonnegative");
  DkMatrix m;
  m.n = cc.vertex_count();
  m.k = k;
  m.d.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  WsepCache cache(cc);
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v = u + 1; v < m.n; ++v) {
      int d = dk(cc, u, v, k, &cache).distance;
      m.d[static_cast<std::size_t>(u) * m.n + v] = d;
      m.d[static_cast<std::size_t>(v) * m.n + u] = d;
    }
  return m;
}

int geodesic_projection_defect(const CubeComplex& cc, const GeodesicPath& path, int k,
                               WsepCache* cache) {
  cc.check_path(path);
  WsepCache local(cc);
  WsepCache& ws = cache ? *cache : local;

  const int P = static_cast<int>(path.vertices.size());
  std::vector<std::vector<int>> d(P, std::vector<int>(P, 0));
  for (int i = 0; i < P; ++i)
    for (int j = i + 1; j < P; ++j)
      d[i][j] = d[j][i] = dk(cc, path.vertices[i], path.vertices[j], k, &ws).distance;

  int defect = 0;
  for (int i = 0; i < P; ++i)
    for (int j = i; j < P; ++j)
      for (int l = j; l < P; ++l) defect = std::max(defect, d[i][j] + d[j][l] - d[i][l]);
  return defect;
}

namespace {

DeltaReport delta_from(const DkMatrix& m, const QuadrupleSampling& sampling) {
  DeltaReport rep;
  rep.k = m.k;
  rep.bound = 9 * (m.k + 2);

  auto consider = [&](Vertex a, Vertex b, Vertex c, Vertex e) {
    int s1 = m.at(a, b) + m.at(c, e);
    int s2 = m.at(a, c) + m.at(b, e);
    int s3 = m.at(a, e) + m.at(b, c);
    int hi = std::max({s1, s2, s3});
    int lo = std::min({s1, s2, s3});
    int mid = s1 + s2 + s3 - hi - lo;
    if (hi - mid > rep.doubled_max_defect) {
      rep.doubled_max_defect = hi - mid;
      rep.witness = {a, b, c, e};
    }
    ++rep.sampled_quadruples;
  };

  if (sampling.exhaustive) {
    for (Vertex a = 0; a < m.n; ++a)
      for (Vertex b = a + 1; b < m.n; ++b)
        for (Vertex c = b + 1; c < m.n; ++c)
          for (Vertex e = c + 1; e < m.n; ++e) consider(a, b, c, e);
  } else {
    std::mt19937_64 rng(sampling.seed);
    for (std::uint64_t i = 0; i < sampling.count; ++i) {
      Vertex a = static_cast<Vertex>(rng() % m.n);
      Vertex b = static_cast<Vertex>(rng() % m.n);
      Vertex c = static_cast<Vertex>(rng() % m.n);
      Vertex e = static_cast<Vertex>(rng() % m.n);
      consider(a, b, c, e);
    }
  }
  rep.max_defect = rep.doubled_max_defect / 2.0;
  rep.violated = rep.doubled_max_defect > 2 * rep.bound;
  return rep;
}

}  // namespace

DeltaReport four_point_delta(const DkMatrix& m, const QuadrupleSampling& sampling) {
  return delta_from(m, sampling);
}

DeltaReport four_point_delta(const CubeComplex& cc, int k, const QuadrupleSampling& sampling,
                             WsepCache* cache) {
  if (k < 0) throw InputError("level k must be nonnegative");
  DkMatrix m;
  m.n = cc.vertex_count();
  m.k = k;
  m.d.assign(static_cast<std::size_t>(m.n) * m.n, 0);
  WsepCache local(cc);
  WsepCache& ws = cache ? *cache : local;
  for (Vertex u = 0; u < m.n; ++u)
    for (Vertex v = u + 1; v < m.n; ++v) {
      int d = dk(cc, u, v, k, &ws).distance;
      m.d[static_cast<std::size_t>(u) * m.n + v] = d;
      m.d[static_cast<std::size_t>(v) * m.n + u] = d;
    }
  return delta_from(m, sampling);
}

}  // namespace cxc
