#include "cxc/gamma.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace cxc {

namespace {

std::vector<std::int32_t> all_pairs_bfs(Vertex n,
                                        const std::vector<std::pair<Vertex, Vertex>>& edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<std::int32_t> dist(static_cast<std::size_t>(n) * n, -1);
  for (Vertex s = 0; s < n; ++s) {
    auto* row = dist.data() + static_cast<std::size_t>(s) * n;
    std::queue<Vertex> q;
    row[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : adj[v])
        if (row[w] < 0) {
          row[w] = row[v] + 1;
          q.push(w);
        }
    }
  }
  return dist;
}

std::string render_dot(Vertex n, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "graph {\n";
  for (Vertex v = 0; v < n; ++v) out << "  " << v << ";\n";
  for (auto [u, v] : edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace

GammaGraph build_gamma(const CubeComplex& cc, int k) {
  if (k < 0) throw InputError("level k must be nonnegative");
  GammaGraph g;
  g.k = k;
  g.threshold = 10 * k + 4;
  g.n = cc.vertex_count();
  g.dk = dk_matrix(cc, k);
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v)
      if (g.dk.at(u, v) <= g.threshold) g.edges.emplace_back(u, v);
  g.dist = all_pairs_bfs(g.n, g.edges);
  return g;
}

BilipschitzReport bilipschitz_check(const CubeComplex& cc, const GammaGraph& g) {
  BilipschitzReport rep;
  if (g.n != cc.vertex_count()) throw InputError("gamma graph does not match complex");
  for (Vertex u = 0; u < g.n; ++u)
    for (Vertex v = u + 1; v < g.n; ++v) {
      int dg = g.at(u, v);
      int dkv = g.dk.at(u, v);
      if (dg < 0 || dg > dkv || dkv > g.threshold * dg) {
        rep.pass = false;
        rep.u = u;
        rep.v = v;
        rep.detail = "pair (" + std::to_string(u) + "," + std::to_string(v) +
                     "): d_gamma=" + std::to_string(dg) + " d_k=" + std::to_string(dkv) +
                     " threshold=" + std::to_string(g.threshold);
        return rep;
      }
    }
  rep.detail = "sandwich holds on all pairs";
  return rep;
}

PathProjection project_path(const GammaGraph& g, const std::vector<Vertex>& path) {
  PathProjection pr;
  if (path.empty()) throw InputError("empty path");
  for (Vertex v : path)
    if (v < 0 || v >= g.n) throw InputError("path vertex out of range");

  const int P = static_cast<int>(path.size());
  pr.prefix_progress.resize(P);
  for (int i = 0; i < P; ++i) pr.prefix_progress[i] = g.at(path[0], path[i]);

  for (int i = 0; i < P; ++i)
    for (int j = i; j < P; ++j)
      for (int l = j; l < P; ++l)
        pr.additivity_defect =
            std::max(pr.additivity_defect,
                     g.at(path[i], path[j]) + g.at(path[j], path[l]) - g.at(path[i], path[l]));

  // Monotone time: running max of the prefix progress. The reported
  // constants satisfy s_j - s_i <= mult * d and d <= (s_j - s_i) + add.
  std::vector<int> s(P);
  int run = 0;
  for (int i = 0; i < P; ++i) {
    run = std::max(run, pr.prefix_progress[i]);
    s[i] = run;
  }
  for (int i = 0; i < P; ++i)
    for (int j = i + 1; j < P; ++j) {
      int d = g.at(path[i], path[j]);
      if (d > 0 && Fraction(s[j] - s[i], d) > pr.multiplicative)
        pr.multiplicative = Fraction(s[j] - s[i], d);
      pr.additive = std::max(pr.additive, d - (s[j] - s[i]));
    }
  return pr;
}

std::string export_dot(const GammaGraph& g) { return render_dot(g.n, g.edges); }

std::string export_dot(const CubeComplex& cc) {
  return render_dot(cc.vertex_count(), cc.edges());
}

}  // namespace cxc
