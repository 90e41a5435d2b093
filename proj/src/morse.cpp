#include "cxc/morse.hpp"

#include <algorithm>

namespace cxc {

namespace {

struct Feasibility {
  std::vector<int> reachable;  // parent index, -2 unreachable, -1 start
  int end_node = -1;
};

// Reachability DP for one candidate constant. Edges demand a disjoint
// pair whose gap and well-separation degree fit inside c * kappa at the
// later crossing.
Feasibility feasible(const CubeComplex& cc, WsepCache& ws, const std::vector<WallId>& w,
                     const std::vector<int>& t, long long T, const SublinearGauge& gauge,
                     const Fraction& c) {
  const int L = static_cast<int>(w.size());
  Feasibility f;
  f.reachable.assign(L, -2);
  for (int i = 0; i < L; ++i) {
    Fraction ki = gauge.eval(t[i]);
    if (le_scaled(t[i], c, gauge.eval(std::max(t[i], 1)))) f.reachable[i] = -1;
    if (f.reachable[i] == -2) {
      for (int j = 0; j < i; ++j) {
        if (f.reachable[j] == -2) continue;
        if (!le_scaled(t[i] - t[j], c, ki)) continue;
        if (cc.wall_relation(w[j], w[i]) != WallRelation::disjoint) continue;
        if (!le_scaled(ws.degree(w[j], w[i]), c, ki)) continue;
        f.reachable[i] = j;
        break;
      }
    }
    if (f.reachable[i] != -2 && f.end_node < 0 && le_scaled(T - t[i], c, gauge.eval(T)))
      f.end_node = i;
  }
  return f;
}

}  // namespace

ExcursionReport excursion_scan(const CubeComplex& cc, const GeodesicPath& path,
                               const SublinearGauge& gauge, WsepCache* cache) {
  if (path.vertices.empty()) throw InputError("empty path");
  cc.check_path(path);
  if (path.length() < 1) throw PreconditionError("excursion scan needs a path of length >= 1");

  WsepCache local(cc);
  WsepCache& ws = cache ? *cache : local;

  const int L = static_cast<int>(path.crossings.size());
  const long long T = path.length();
  std::vector<WallId> w(L);
  std::vector<int> t(L);
  for (int i = 0; i < L; ++i) {
    w[i] = path.crossings[i].wall;
    t[i] = path.crossings[i].step;
  }

  // Every binding constraint is a ratio value/kappa(time); the optimum
  // is the smallest feasible one.
  std::vector<Fraction> candidates;
  for (int i = 0; i < L; ++i) {
    candidates.push_back(ratio_over(t[i], gauge.eval(std::max(t[i], 1))));
    candidates.push_back(ratio_over(T - t[i], gauge.eval(T)));
    Fraction ki = gauge.eval(t[i]);
    for (int j = 0; j < i; ++j) {
      if (cc.wall_relation(w[j], w[i]) != WallRelation::disjoint) continue;
      candidates.push_back(ratio_over(t[i] - t[j], ki));
      candidates.push_back(ratio_over(ws.degree(w[j], w[i]), ki));
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (feasible(cc, ws, w, t, T, gauge, candidates[mid]).end_node >= 0)
      hi = mid;
    else
      lo = mid + 1;
  }

  ExcursionReport rep;
  rep.from = path.source();
  rep.to = path.target();
  rep.path_length = static_cast<int>(T);
  rep.gauge = gauge.describe();
  rep.best_constant = candidates[lo];

  Feasibility f = feasible(cc, ws, w, t, T, gauge, rep.best_constant);
  std::vector<int> picked;
  for (int i = f.end_node; i >= 0; i = f.reachable[i]) picked.push_back(i);
  std::reverse(picked.begin(), picked.end());

  for (std::size_t s = 0; s < picked.size(); ++s) {
    int i = picked[s];
    rep.sequence.push_back(w[i]);
    rep.times.push_back(t[i]);
    ExcursionStep step;
    step.wall = w[i];
    step.time = t[i];
    step.budget = rep.best_constant * gauge.eval(std::max(t[i], 1));
    if (s == 0) {
      step.gap = t[i];
    } else {
      step.gap = t[i] - t[picked[s - 1]];
      step.wsep_with_prev = ws.degree(w[picked[s - 1]], w[i]);
    }
    rep.per_step.push_back(step);
  }
  rep.start_slack = rep.times.front();
  rep.end_slack = T - rep.times.back();
  return rep;
}

int gromov_product(const CubeComplex& cc, Vertex o, Vertex x, Vertex y) {
  cc.check_vertex(o);
  cc.check_vertex(x);
  cc.check_vertex(y);
  int count = 0;
  for (const auto& wall : cc.walls()) {
    bool so = wall.side_plus.test(o);
    if (so != wall.side_plus.test(x) && so != wall.side_plus.test(y)) ++count;
  }
  return count;
}

bool hyp_basis_member(const CubeComplex& cc, Vertex o, const std::vector<WallId>& targets,
                      Vertex x) {
  cc.check_vertex(o);
  cc.check_vertex(x);
  for (WallId w : targets) {
    if (w < 0 || w >= cc.wall_count()) throw InputError("wall id out of range");
    if (!cc.wall_separates(w, o, x)) return false;
  }
  return true;
}

std::vector<ContractionSample> contraction_profile(const CubeComplex& cc,
                                                   const GeodesicPath& path,
                                                   const SublinearGauge& gauge,
                                                   const std::vector<Vertex>& samples) {
  cc.check_path(path);
  Bits on_path(cc.vertex_count());
  for (Vertex v : path.vertices) on_path.set(v);

  std::vector<ContractionSample> out;
  for (Vertex x : samples) {
    cc.check_vertex(x);
    if (on_path.test(x))
      throw PreconditionError("sample " + std::to_string(x) + " lies on the path");
    ContractionSample s;
    s.sample = x;
    s.dist_to_path = cc.diameter() + 1;
    for (Vertex p : path.vertices) s.dist_to_path = std::min(s.dist_to_path, cc.dist(x, p));
    for (Vertex p : path.vertices)
      if (cc.dist(x, p) == s.dist_to_path) s.nearest_set.push_back(p);
    for (std::size_t i = 0; i < s.nearest_set.size(); ++i)
      for (std::size_t j = i + 1; j < s.nearest_set.size(); ++j)
        s.nearest_diameter =
            std::max(s.nearest_diameter, cc.dist(s.nearest_set[i], s.nearest_set[j]));
    s.kappa = gauge.eval(cc.dist(path.source(), x));
    s.ratio = s.nearest_diameter / s.kappa.to_double();
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace cxc
