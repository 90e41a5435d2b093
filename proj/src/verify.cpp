#include "cxc/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "cxc/cxc_format.hpp"
#include "cxc/gamma.hpp"
#include "cxc/separation.hpp"
#include "cxc/wellsep.hpp"

namespace cxc {

namespace {

constexpr const char* kL2 = "L2-dist-eq-walls";
constexpr const char* kHelly = "HELLY";
constexpr const char* kChain = "C3-chain-in-geodesic";
constexpr const char* kDefect = "L6-projection-defect";
constexpr const char* kBilip = "L6-bilipschitz";
constexpr const char* kFourPoint = "P6-fourpoint-9k2";

bool is_level_dependent(const std::string& check) {
  return check == kDefect || check == kBilip || check == kFourPoint;
}

// Deterministic geodesic sample: the diameter pair plus seeded pairs.
std::vector<GeodesicPath> sample_geodesics(const CubeComplex& cc, std::uint64_t seed, int budget) {
  std::vector<GeodesicPath> out;
  const Vertex n = cc.vertex_count();
  if (n < 2 || budget < 1) return out;
  Vertex du = 0, dv = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (cc.dist(u, v) > cc.dist(du, dv)) {
        du = u;
        dv = v;
      }
  out.push_back(cc.geodesic(du, dv));
  std::mt19937_64 rng(seed);
  while (static_cast<int>(out.size()) < budget) {
    Vertex u = static_cast<Vertex>(rng() % n);
    Vertex v = static_cast<Vertex>(rng() % n);
    if (u == v) continue;
    out.push_back(cc.geodesic(u, v));
  }
  return out;
}

CheckOutcome check_l2(const CubeComplex& cc, const std::string& name) {
  CheckOutcome o{kL2, -1, name, true, ""};
  std::size_t pairs = 0;
  for (Vertex u = 0; u < cc.vertex_count() && o.pass; ++u)
    for (Vertex v = u + 1; v < cc.vertex_count(); ++v) {
      ++pairs;
      if (cc.dist(u, v) != static_cast<int>(cc.separating_set(u, v).count())) {
        o.pass = false;
        o.detail = "pair (" + std::to_string(u) + "," + std::to_string(v) + ") breaks the equality";
        break;
      }
    }
  if (o.pass) o.detail = "pairs=" + std::to_string(pairs);
  return o;
}

CheckOutcome check_helly(const CubeComplex& cc, const std::string& name, std::uint64_t seed) {
  CheckOutcome o{kHelly, -1, name, true, ""};
  std::mt19937_64 rng(seed);
  const Vertex n = cc.vertex_count();
  int real = 0;
  const int trials = 100;
  for (int t = 0; t < trials; ++t) {
    std::vector<Bits> sets;
    for (int s = 0; s < 3; ++s) {
      Bits seedset(n);
      seedset.set(static_cast<Vertex>(rng() % n));
      seedset.set(static_cast<Vertex>(rng() % n));
      sets.push_back(cc.hull(seedset));
    }
    HellyReport rep = helly_check(cc, sets);
    if (!rep.vacuous) ++real;
    if (!rep.pass) {
      o.pass = false;
      o.detail = "trial " + std::to_string(t) + ": " + rep.detail;
      return o;
    }
  }
  o.detail = "trials=" + std::to_string(trials) + " nonvacuous=" + std::to_string(real);
  return o;
}

CheckOutcome check_chain(const CubeComplex& cc, const std::string& name,
                         const std::vector<GeodesicPath>& geos) {
  CheckOutcome o{kChain, -1, name, true, ""};
  const int dim = cc.dimension();
  int max_required = 0;
  for (const auto& geo : geos) {
    if (dim == 0 || geo.length() == 0) continue;
    std::vector<WallId> crossed;
    for (const auto& c : geo.crossings) crossed.push_back(c.wall);
    int required = geo.length() / dim;  // largest k with dim*k <= crossings
    max_required = std::max(max_required, required);
    int got = static_cast<int>(longest_chain(cc, crossed).size());
    if (got < required) {
      o.pass = false;
      o.detail = "geodesic " + std::to_string(geo.source()) + "->" + std::to_string(geo.target()) +
                 " has chain " + std::to_string(got) + " < " + std::to_string(required);
      return o;
    }
  }
  o.detail = "geodesics=" + std::to_string(geos.size()) +
             " max_required=" + std::to_string(max_required);
  return o;
}

CheckOutcome check_defect(const CubeComplex& cc, const std::string& name, int k,
                          const std::vector<GeodesicPath>& geos, WsepCache& cache) {
  CheckOutcome o{kDefect, k, name, true, ""};
  int worst = 0;
  for (const auto& geo : geos) {
    int d = geodesic_projection_defect(cc, geo, k, &cache);
    worst = std::max(worst, d);
    if (d > k + 3) {
      o.pass = false;
      o.detail = "geodesic " + std::to_string(geo.source()) + "->" + std::to_string(geo.target()) +
                 " defect " + std::to_string(d) + " > " + std::to_string(k + 3);
      return o;
    }
  }
  o.detail = "geodesics=" + std::to_string(geos.size()) + " max_defect=" + std::to_string(worst) +
             " bound=" + std::to_string(k + 3);
  return o;
}

CheckOutcome check_bilip(const CubeComplex& cc, const std::string& name, int k) {
  CheckOutcome o{kBilip, k, name, true, ""};
  GammaGraph g = build_gamma(cc, k);
  BilipschitzReport rep = bilipschitz_check(cc, g);
  o.pass = rep.pass;
  o.detail = rep.pass ? "pairs=" + std::to_string(static_cast<std::size_t>(g.n) * (g.n - 1) / 2) +
                            " threshold=" + std::to_string(g.threshold)
                      : rep.detail;
  return o;
}

CheckOutcome check_fourpoint(const CubeComplex& cc, const std::string& name, int k,
                             std::uint64_t seed, std::uint64_t quads, WsepCache& cache) {
  CheckOutcome o{kFourPoint, k, name, true, ""};
  DeltaReport rep =
      four_point_delta(cc, k, QuadrupleSampling::pick(cc.vertex_count(), seed, quads), &cache);
  o.pass = !rep.violated;
  std::ostringstream detail;
  detail << "quadruples=" << rep.sampled_quadruples << " max_defect=" << rep.max_defect
         << " bound=" << rep.bound;
  o.detail = detail.str();
  if (!o.pass)
    o.detail += " witness=(" + std::to_string(rep.witness[0]) + "," +
                std::to_string(rep.witness[1]) + "," + std::to_string(rep.witness[2]) + "," +
                std::to_string(rep.witness[3]) + ")";
  return o;
}

}  // namespace

std::vector<std::string> all_checks() {
  return {kL2, kHelly, kChain, kDefect, kBilip, kFourPoint};
}

std::string format_check_line(const CheckOutcome& o) {
  std::string k = o.k < 0 ? "-" : std::to_string(o.k);
  return "CHECK " + o.check + " k=" + k + " " + o.instance + " " + (o.pass ? "PASS" : "FAIL") +
         " " + o.detail;
}

VerifyResult run_verify(const VerifyPlan& plan) {
  if (plan.files.empty() && !plan.use_standard_suite)
    throw InputError("verify plan has no instances");
  if (plan.checks.empty()) throw InputError("verify plan has no checks");
  auto known = all_checks();
  for (const auto& c : plan.checks)
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw InputError("unknown check: " + c);
  for (int k : plan.levels)
    if (k < 0) throw InputError("levels must be nonnegative");
  if (plan.levels.empty()) throw InputError("verify plan has no levels");

  std::vector<NamedComplex> instances;
  if (plan.use_standard_suite) instances = standard_suite();
  for (const auto& f : plan.files) instances.push_back({f, load_cxc_file(f)});

  VerifyResult result;
  for (const auto& [name, cc] : instances) {
    WsepCache cache(cc);
    auto geos = sample_geodesics(cc, plan.seed, plan.geodesic_budget);
    for (const auto& check : plan.checks) {
      if (!is_level_dependent(check)) {
        CheckOutcome o;
        if (check == kL2) o = check_l2(cc, name);
        else if (check == kHelly) o = check_helly(cc, name, plan.seed);
        else o = check_chain(cc, name, geos);
        result.all_pass = result.all_pass && o.pass;
        result.lines.push_back(std::move(o));
        continue;
      }
      for (int k : plan.levels) {
        CheckOutcome o;
        if (check == kDefect) o = check_defect(cc, name, k, geos, cache);
        else if (check == kBilip) o = check_bilip(cc, name, k);
        else o = check_fourpoint(cc, name, k, plan.seed, plan.quad_budget, cache);
        result.all_pass = result.all_pass && o.pass;
        result.lines.push_back(std::move(o));
      }
    }
  }
  return result;
}

std::string InfoSummary::tsv() const {
  std::ostringstream out;
  out << vertices << "\t" << edges << "\t" << walls << "\t" << dimension << "\t" << diameter;
  return out.str();
}

InfoSummary run_info(const CubeComplex& cc) {
  return {cc.vertex_count(), cc.edges().size(), cc.wall_count(), cc.dimension(), cc.diameter()};
}

}  // namespace cxc
