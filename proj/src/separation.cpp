#include "cxc/separation.hpp"

#include <algorithm>
#include <array>

namespace cxc {

namespace {

void check_distinct(const CubeComplex& cc, WallId a, WallId b) {
  if (a < 0 || a >= cc.wall_count() || b < 0 || b >= cc.wall_count())
    throw InputError("wall id out of range");
  if (a == b) throw InputError("walls must be distinct");
}

// Exact maximum subset of the ground set avoiding every triple, by
// deletion branching: while some triple survives, one of its members
// must go.
struct TripleFreeSearch {
  const std::vector<std::array<int, 3>>& triples;
  Bits best;

  int find_triple(const Bits& s) const {
    for (std::size_t t = 0; t < triples.size(); ++t)
      if (s.test(triples[t][0]) && s.test(triples[t][1]) && s.test(triples[t][2]))
        return static_cast<int>(t);
    return -1;
  }

  void run(const Bits& s) {
    if (s.count() <= best.count()) return;
    int t = find_triple(s);
    if (t < 0) {
      best = s;
      return;
    }
    for (int m : triples[t]) {
      Bits next = s;
      next.reset(m);
      run(next);
    }
  }
};

}  // namespace

bool crosses(const CubeComplex& cc, WallId h1, WallId h2) {
  check_distinct(cc, h1, h2);
  return cc.wall_relation(h1, h2) == WallRelation::crossing;
}

bool wall_separates_walls(const CubeComplex& cc, WallId mid, WallId a, WallId b) {
  if (cc.wall_relation(mid, a) == WallRelation::crossing) return false;
  if (cc.wall_relation(mid, b) == WallRelation::crossing) return false;
  return cc.side_of_wall(mid, a) != cc.side_of_wall(mid, b);
}

bool is_facing_triple(const CubeComplex& cc, WallId a, WallId b, WallId c) {
  check_distinct(cc, a, b);
  check_distinct(cc, a, c);
  check_distinct(cc, b, c);
  if (cc.wall_relation(a, b) == WallRelation::crossing ||
      cc.wall_relation(a, c) == WallRelation::crossing ||
      cc.wall_relation(b, c) == WallRelation::crossing)
    return false;
  return !wall_separates_walls(cc, a, b, c) && !wall_separates_walls(cc, b, a, c) &&
         !wall_separates_walls(cc, c, a, b);
}

std::vector<WallId> crossers(const CubeComplex& cc, WallId h1, WallId h2) {
  check_distinct(cc, h1, h2);
  std::vector<WallId> out;
  for (WallId w = 0; w < cc.wall_count(); ++w) {
    if (w == h1 || w == h2) continue;
    if (cc.wall_relation(w, h1) == WallRelation::crossing &&
        cc.wall_relation(w, h2) == WallRelation::crossing)
      out.push_back(w);
  }
  return out;
}

WallPairReport wsep_degree(const CubeComplex& cc, WallId h1, WallId h2) {
  check_distinct(cc, h1, h2);
  if (cc.wall_relation(h1, h2) == WallRelation::crossing)
    throw PreconditionError("well-separation is defined only for disjoint walls");
  WallPairReport rep;
  rep.h1 = h1;
  rep.h2 = h2;
  rep.relation = WallRelation::disjoint;
  rep.crossers = crossers(cc, h1, h2);
  rep.sep_degree = static_cast<int>(rep.crossers.size());

  const int c = rep.sep_degree;
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < c; ++i)
    for (int j = i + 1; j < c; ++j)
      for (int l = j + 1; l < c; ++l)
        if (is_facing_triple(cc, rep.crossers[i], rep.crossers[j], rep.crossers[l]))
          triples.push_back({i, j, l});

  Bits ground(c);
  for (int i = 0; i < c; ++i) ground.set(i);
  if (triples.empty()) {
    rep.wsep_degree = c;
    rep.witness = rep.crossers;
    return rep;
  }

  TripleFreeSearch search{triples, Bits(c)};
  // Greedy start: delete the first member of each surviving triple.
  Bits greedy = ground;
  for (int t = search.find_triple(greedy); t >= 0; t = search.find_triple(greedy))
    greedy.reset(triples[t][0]);
  search.best = greedy;
  search.run(ground);

  rep.wsep_degree = static_cast<int>(search.best.count());
  search.best.for_each([&](int i) { rep.witness.push_back(rep.crossers[i]); });
  return rep;
}

WallPairReport analyze_pair(const CubeComplex& cc, WallId h1, WallId h2) {
  check_distinct(cc, h1, h2);
  if (cc.wall_relation(h1, h2) == WallRelation::disjoint) return wsep_degree(cc, h1, h2);
  WallPairReport rep;
  rep.h1 = h1;
  rep.h2 = h2;
  rep.relation = WallRelation::crossing;
  rep.crossers = crossers(cc, h1, h2);
  rep.sep_degree = static_cast<int>(rep.crossers.size());
  return rep;
}

std::vector<WallId> longest_chain(const CubeComplex& cc, const std::vector<WallId>& walls_in) {
  std::vector<WallId> ws = walls_in;
  std::sort(ws.begin(), ws.end());
  ws.erase(std::unique(ws.begin(), ws.end()), ws.end());
  for (WallId w : ws)
    if (w < 0 || w >= cc.wall_count()) throw InputError("wall id out of range");
  const int m = static_cast<int>(ws.size());
  if (m == 0) return {};

  // Node 2*i+s is halfspace s of ws[i]; edge a->b when halfspace(a)
  // properly contains halfspace(b).
  auto half = [&](int node) -> const Bits& {
    return cc.side_bits(ws[node / 2], node % 2 ? WallSide::plus : WallSide::minus);
  };
  std::vector<std::vector<int>> next(2 * m);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b) {
      if (a / 2 == b / 2) continue;
      if (half(b).count() < half(a).count() && half(b).is_subset_of(half(a)))
        next[a].push_back(b);
    }

  std::vector<int> len(2 * m, 0), succ(2 * m, -1);
  auto dfs = [&](auto&& self, int node) -> int {
    if (len[node]) return len[node];
    int bestLen = 1, bestSucc = -1;
    for (int b : next[node]) {
      int cand = 1 + self(self, b);
      if (cand > bestLen) {
        bestLen = cand;
        bestSucc = b;
      }
    }
    len[node] = bestLen;
    succ[node] = bestSucc;
    return bestLen;
  };
  int start = 0;
  for (int node = 0; node < 2 * m; ++node)
    if (dfs(dfs, node) > len[start]) start = node;

  std::vector<WallId> chain;
  for (int node = start; node >= 0; node = succ[node]) chain.push_back(ws[node / 2]);
  return chain;
}

WsepCache::WsepCache(const CubeComplex& cc) : cc_(&cc) {
  deg_.assign(static_cast<std::size_t>(cc.wall_count()) * cc.wall_count(), -1);
}

int WsepCache::degree(WallId a, WallId b) {
  check_distinct(*cc_, a, b);
  std::size_t idx = static_cast<std::size_t>(a) * cc_->wall_count() + b;
  if (deg_[idx] < 0) {
    int d = wsep_degree(*cc_, a, b).wsep_degree;
    deg_[idx] = d;
    deg_[static_cast<std::size_t>(b) * cc_->wall_count() + a] = d;
  }
  return deg_[idx];
}

}  // namespace cxc
