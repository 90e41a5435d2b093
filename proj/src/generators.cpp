#include "cxc/generators.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <sstream>
#include <unordered_map>

namespace cxc {

CubeComplex gen_grid(const std::vector<int>& widths) {
  if (widths.empty()) throw InputError("grid needs at least one width");
  for (int w : widths)
    if (w < 1) throw InputError("grid widths must be positive");
  long long total = 1;
  for (int w : widths) {
    total *= w;
    if (total > 2'000'000) throw InputError("grid too large");
  }
  const int n = static_cast<int>(total);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (int v = 0; v < n; ++v) {
    int rem = v;
    long long stride = 1;
    for (int w : widths) {
      int coord = rem % w;
      rem /= w;
      if (coord + 1 < w) edges.emplace_back(v, v + static_cast<int>(stride));
      stride *= w;
    }
  }
  return CubeComplex::build(n, std::move(edges));
}

CubeComplex gen_tree_balanced(int arity, int depth) {
  if (arity < 1 || depth < 0) throw InputError("balanced tree needs arity >= 1, depth >= 0");
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<Vertex> frontier{0};
  Vertex next = 1;
  for (int d = 0; d < depth; ++d) {
    std::vector<Vertex> level;
    for (Vertex p : frontier)
      for (int c = 0; c < arity; ++c) {
        edges.emplace_back(p, next);
        level.push_back(next++);
      }
    frontier = std::move(level);
  }
  return CubeComplex::build(next, std::move(edges));
}

CubeComplex gen_tree_random(std::uint64_t seed, int size) {
  if (size < 1) throw InputError("tree size must be positive");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex v = 1; v < size; ++v)
    edges.emplace_back(static_cast<Vertex>(rng() % v), v);
  return CubeComplex::build(size, std::move(edges));
}

CubeComplex gen_product(const CubeComplex& a, const CubeComplex& b) {
  const Vertex na = a.vertex_count(), nb = b.vertex_count();
  auto id = [na](Vertex va, Vertex vb) { return vb * na + va; };
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex vb = 0; vb < nb; ++vb)
    for (const auto& [u, v] : a.edges()) edges.emplace_back(id(u, vb), id(v, vb));
  for (Vertex va = 0; va < na; ++va)
    for (const auto& [u, v] : b.edges()) edges.emplace_back(id(va, u), id(va, v));
  return CubeComplex::build(na * nb, std::move(edges));
}

// ── RAAG balls and hulls ────────────────────────────────────────────

namespace {

// Letters: generator g gives letters 2g (positive) and 2g+1 (inverse).
using Word = std::vector<std::uint8_t>;

int letter_gen(int l) { return l >> 1; }
int letter_inv(int l) { return l ^ 1; }

// Foata normal form: repeatedly pull out the letters that commute past
// everything before them, each block sorted. Equal words have equal
// forms.
std::string foata_key(const RaagPresentation& pres, const Word& w) {
  std::vector<int> rest(w.begin(), w.end());
  std::string key;
  while (!rest.empty()) {
    std::vector<int> block;
    std::vector<char> taken(rest.size(), 0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
      // Minimal in the dependence order: nothing earlier shares a
      // generator or fails to commute.
      bool movable = true;
      for (std::size_t j = 0; j < i && movable; ++j)
        if (letter_gen(rest[j]) == letter_gen(rest[i]) ||
            !pres.commute(letter_gen(rest[j]), letter_gen(rest[i])))
          movable = false;
      if (movable) {
        block.push_back(rest[i]);
        taken[i] = 1;
      }
    }
    std::sort(block.begin(), block.end());
    for (int b : block) key += static_cast<char>('A' + b);
    key += '|';
    std::vector<int> next;
    for (std::size_t i = 0; i < rest.size(); ++i)
      if (!taken[i]) next.push_back(rest[i]);
    rest = std::move(next);
  }
  return key;
}

// Right multiplication with free reduction: cancel the rightmost
// inverse that commutes past the suffix, else append.
Word multiply(const RaagPresentation& pres, const Word& w, int letter) {
  for (int j = static_cast<int>(w.size()) - 1; j >= 0; --j) {
    if (w[j] == letter_inv(letter)) {
      bool clears = true;
      for (std::size_t l = j + 1; l < w.size(); ++l)
        if (!pres.commute(letter_gen(w[l]), letter_gen(letter))) {
          clears = false;
          break;
        }
      if (clears) {
        Word out(w);
        out.erase(out.begin() + j);
        return out;
      }
      break;  // blocked by a non-commuting letter in between
    }
    if (letter_gen(w[j]) != letter_gen(letter) &&
        !pres.commute(letter_gen(w[j]), letter_gen(letter)))
      break;
    if (w[j] == letter) break;  // same letter: no cancellation further left
  }
  Word out(w);
  out.push_back(static_cast<std::uint8_t>(letter));
  return out;
}

struct CayleyBall {
  std::vector<Word> words;                    // reduced word per vertex, BFS order
  std::vector<int> length;                    // word length = distance to identity
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::vector<std::size_t> sphere_sizes;      // per radius
  std::unordered_map<std::string, Vertex> index;
};

CayleyBall enumerate_ball(const RaagPresentation& pres, int radius) {
  CayleyBall ball;
  ball.words.push_back({});
  ball.length.push_back(0);
  ball.index[foata_key(pres, {})] = 0;
  ball.sphere_sizes.assign(radius + 1, 0);
  ball.sphere_sizes[0] = 1;

  const int letters = 2 * pres.generator_count();
  std::set<std::pair<Vertex, Vertex>> edge_set;
  std::size_t head = 0;
  while (head < ball.words.size()) {
    Vertex v = static_cast<Vertex>(head);
    Word w = ball.words[head];
    int len = ball.length[head];
    ++head;
    if (len == radius) continue;
    for (int l = 0; l < letters; ++l) {
      Word next = multiply(pres, w, l);
      if (next.size() < w.size()) continue;  // shorter neighbor, edge added from there
      std::string key = foata_key(pres, next);
      auto [it, fresh] = ball.index.try_emplace(key, static_cast<Vertex>(ball.words.size()));
      if (fresh) {
        ball.words.push_back(std::move(next));
        ball.length.push_back(len + 1);
        ++ball.sphere_sizes[len + 1];
      }
      edge_set.insert(std::minmax(v, it->second));
    }
  }
  ball.edges.assign(edge_set.begin(), edge_set.end());
  return ball;
}

}  // namespace

RaagPresentation RaagPresentation::parse(const std::string& graph, const std::string& extra) {
  RaagPresentation pres;
  std::map<std::string, int> ids;
  auto intern = [&](const std::string& name) {
    if (name.empty()) throw InputError("empty generator name");
    auto [it, fresh] = ids.try_emplace(name, static_cast<int>(pres.names.size()));
    if (fresh) pres.names.push_back(name);
    return it->second;
  };
  auto split = [](const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, sep))
      if (!item.empty()) parts.push_back(item);
    return parts;
  };
  for (const std::string& pair : split(graph, ',')) {
    auto ends = split(pair, '-');
    if (ends.size() != 2) throw InputError("bad commutation pair: " + pair);
    int a = intern(ends[0]), b = intern(ends[1]);
    if (a == b) throw InputError("generator cannot commute with itself in the graph: " + pair);
    std::pair<int, int> e(std::min(a, b), std::max(a, b));
    if (std::find(pres.commuting.begin(), pres.commuting.end(), e) == pres.commuting.end())
      pres.commuting.push_back(e);
  }
  for (const std::string& name : split(extra, ',')) intern(name);
  if (pres.names.empty()) throw InputError("presentation has no generators");
  return pres;
}

bool RaagPresentation::commute(int a, int b) const {
  if (a == b) return false;
  std::pair<int, int> e(std::min(a, b), std::max(a, b));
  return std::find(commuting.begin(), commuting.end(), e) != commuting.end();
}

int RaagPresentation::dimension() const {
  const int n = generator_count();
  int best = 1;
  std::vector<int> clique;
  auto extend = [&](auto&& self, int from) -> void {
    best = std::max(best, static_cast<int>(clique.size()));
    for (int v = from; v < n; ++v) {
      bool ok = true;
      for (int c : clique)
        if (!commute(c, v)) ok = false;
      if (!ok) continue;
      clique.push_back(v);
      self(self, v + 1);
      clique.pop_back();
    }
  };
  extend(extend, 0);
  return best;
}

std::vector<std::size_t> raag_ball_sizes(const RaagPresentation& pres, int max_radius) {
  CayleyBall ball = enumerate_ball(pres, max_radius);
  std::vector<std::size_t> sizes(max_radius + 1, 0);
  std::size_t acc = 0;
  for (int r = 0; r <= max_radius; ++r) {
    acc += ball.sphere_sizes[r];
    sizes[r] = acc;
  }
  return sizes;
}

RaagHullResult raag_hull(const RaagPresentation& pres, int radius) {
  if (radius < 1) throw InputError("hull radius must be >= 1");
  const int ambient = pres.dimension() * radius + 1;
  CayleyBall ball = enumerate_ball(pres, ambient);
  const Vertex n = static_cast<Vertex>(ball.words.size());

  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : ball.edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  // Lazy per-source BFS distances; only closure members become sources.
  std::unordered_map<Vertex, std::vector<std::int32_t>> dist_cache;
  auto dist_from = [&](Vertex s) -> const std::vector<std::int32_t>& {
    auto it = dist_cache.find(s);
    if (it != dist_cache.end()) return it->second;
    std::vector<std::int32_t> d(n, -1);
    std::queue<Vertex> q;
    d[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : adj[v])
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          q.push(w);
        }
    }
    return dist_cache.emplace(s, std::move(d)).first->second;
  };

  Bits hull(n);
  std::vector<Vertex> members, fresh;
  for (Vertex v = 0; v < n; ++v)
    if (ball.length[v] <= radius) {
      hull.set(v);
      members.push_back(v);
      fresh.push_back(v);
    }

  while (!fresh.empty()) {
    std::vector<Vertex> added;
    for (Vertex a : fresh)
      for (Vertex b : members) {
        const auto& da = dist_from(a);
        const auto& db = dist_from(b);
        int dab = da[b];
        for (Vertex w = 0; w < n; ++w)
          if (!hull.test(w) && da[w] + db[w] == dab) {
            hull.set(w);
            added.push_back(w);
          }
      }
    for (Vertex w : added) members.push_back(w);
    fresh = std::move(added);
  }

  for (Vertex v : members)
    if (ball.length[v] >= ambient)
      throw EnlargementError("hull reached the ambient shell at radius " +
                             std::to_string(ambient) + "; enlarge the ambient ball");

  // Relabel by BFS discovery order (deterministic).
  std::sort(members.begin(), members.end());
  std::vector<Vertex> relabel(n, -1);
  for (std::size_t i = 0; i < members.size(); ++i) relabel[members[i]] = static_cast<Vertex>(i);
  std::vector<std::pair<Vertex, Vertex>> hull_edges;
  for (auto [u, v] : ball.edges)
    if (relabel[u] >= 0 && relabel[v] >= 0) hull_edges.emplace_back(relabel[u], relabel[v]);

  RaagHullResult res{CubeComplex::build(static_cast<Vertex>(members.size()), std::move(hull_edges)),
                     {}, members.size(), ambient};
  std::size_t acc = 0;
  for (int r = 0; r <= radius; ++r) {
    acc += ball.sphere_sizes[r];
    res.ball_sizes.push_back(acc);
  }
  return res;
}

// ── Random median graphs by peripheral convex expansion ─────────────

CubeComplex gen_random_median(std::uint64_t seed, int target_size) {
  if (target_size < 1) throw InputError("target size must be positive");
  std::mt19937_64 rng(seed);

  Vertex n = 1;
  std::vector<std::pair<Vertex, Vertex>> edges;
  const int hard_cap = std::max(target_size + target_size / 4, target_size + 1);

  while (n < target_size) {
    CubeComplex cc = CubeComplex::build(n, edges);

    // Draw a convex seed: an interval inside a random halfspace.
    std::vector<Vertex> cset;
    for (int attempt = 0; attempt < 8 && cset.empty(); ++attempt) {
      Bits allowed(n);
      if (cc.wall_count() > 0) {
        WallId w = static_cast<WallId>(rng() % cc.wall_count());
        WallSide s = (rng() & 1) ? WallSide::plus : WallSide::minus;
        allowed = cc.side_bits(w, s);
      } else {
        for (Vertex v = 0; v < n; ++v) allowed.set(v);
      }
      auto pool = allowed.to_vector();
      Vertex u = pool[rng() % pool.size()];
      Vertex v = pool[rng() % pool.size()];
      auto candidate = cc.interval(u, v).to_vector();
      if (n + static_cast<int>(candidate.size()) <= hard_cap) cset = std::move(candidate);
    }
    if (cset.empty()) cset = {static_cast<Vertex>(rng() % n)};  // a point is always convex

    // Peripheral expansion: glue a prism over the convex set.
    std::vector<Vertex> twin(n, -1);
    for (Vertex c : cset) twin[c] = n++;
    for (Vertex c : cset) edges.emplace_back(c, twin[c]);
    for (std::size_t i = 0; i < cset.size(); ++i)
      for (std::size_t j = i + 1; j < cset.size(); ++j)
        if (cc.dist(cset[i], cset[j]) == 1) edges.emplace_back(twin[cset[i]], twin[cset[j]]);
  }
  return CubeComplex::build(n, std::move(edges));
}

}  // namespace cxc
