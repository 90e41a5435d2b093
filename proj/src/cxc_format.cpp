#include "cxc/cxc_format.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace cxc {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& why) {
  throw InputError("cxc parse error at line " + std::to_string(line) + ": " + why);
}

}  // namespace

ParsedGraph parse_cxc(std::istream& in) {
  ParsedGraph g;
  std::string line;
  int lineno = 0;
  int stage = 0;  // 0: expect header, 1: expect vertices, 2: edges
  std::set<std::pair<Vertex, Vertex>> seen;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    std::istringstream ss(line);
    std::string tok;
    ss >> tok;
    std::string extra;

    if (stage == 0) {
      int version = -1;
      if (tok != "cxc" || !(ss >> version)) parse_fail(lineno, "expected 'cxc 1' header");
      if (version != 1) parse_fail(lineno, "unsupported format version " + std::to_string(version));
      if (ss >> extra) parse_fail(lineno, "trailing tokens after header");
      stage = 1;
    } else if (stage == 1) {
      long long n = -1;
      if (tok != "vertices" || !(ss >> n)) parse_fail(lineno, "expected 'vertices N'");
      if (n < 1 || n > 2'000'000) parse_fail(lineno, "vertex count out of range");
      if (ss >> extra) parse_fail(lineno, "trailing tokens after vertex count");
      g.vertex_count = static_cast<Vertex>(n);
      stage = 2;
    } else {
      long long u = -1, v = -1;
      if (tok != "edge" || !(ss >> u >> v)) parse_fail(lineno, "expected 'edge U V'");
      if (ss >> extra) parse_fail(lineno, "trailing tokens after edge");
      if (u < 0 || v < 0 || u >= g.vertex_count || v >= g.vertex_count)
        parse_fail(lineno, "edge endpoint out of range");
      if (u == v) parse_fail(lineno, "self-loop");
      auto key = std::minmax(static_cast<Vertex>(u), static_cast<Vertex>(v));
      if (!seen.insert(key).second) parse_fail(lineno, "duplicate edge");
      g.edges.push_back(key);
    }
  }
  if (stage != 2) parse_fail(lineno, "truncated file: missing header or vertex count");
  return g;
}

ParsedGraph parse_cxc_string(const std::string& text) {
  std::istringstream in(text);
  return parse_cxc(in);
}

CubeComplex load_cxc(std::istream& in) {
  ParsedGraph g = parse_cxc(in);
  return CubeComplex::build(g.vertex_count, std::move(g.edges));
}

CubeComplex load_cxc_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  return load_cxc(in);
}

std::string emit_cxc(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges) {
  for (auto& e : edges)
    if (e.first > e.second) std::swap(e.first, e.second);
  std::sort(edges.begin(), edges.end());
  std::ostringstream out;
  out << "cxc 1\n";
  out << "vertices " << vertex_count << "\n";
  for (auto [u, v] : edges) out << "edge " << u << " " << v << "\n";
  return out.str();
}

std::string emit_cxc(const CubeComplex& cc) { return emit_cxc(cc.vertex_count(), cc.edges()); }

}  // namespace cxc
