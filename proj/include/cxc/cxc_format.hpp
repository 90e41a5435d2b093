#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cxc/complex.hpp"

namespace cxc {

struct ParsedGraph {
  Vertex vertex_count = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;
};

/// Parses the CXC text format:
///   cxc 1
///   vertices N
///   edge U V        (one line per edge, 0-based ids)
/// Lines starting with # are comments. Rejects duplicate edges,
/// self-loops and out-of-range ids; errors carry the line number.
ParsedGraph parse_cxc(std::istream& in);
ParsedGraph parse_cxc_string(const std::string& text);

/// parse + build in one step.
CubeComplex load_cxc(std::istream& in);
CubeComplex load_cxc_file(const std::string& path);

/// Byte-deterministic emitter: LF endings, edges sorted ascending.
std::string emit_cxc(const CubeComplex& cc);
std::string emit_cxc(Vertex vertex_count, std::vector<std::pair<Vertex, Vertex>> edges);

}  // namespace cxc
