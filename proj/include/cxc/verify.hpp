#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cxc/complex.hpp"
#include "cxc/suite.hpp"

namespace cxc {

/// Known check identifiers, in report order.
std::vector<std::string> all_checks();

struct VerifyPlan {
  std::vector<std::string> files;  // CXC inputs
  bool use_standard_suite = false;
  std::vector<int> levels = {0, 1, 2, 3};
  std::vector<std::string> checks = all_checks();
  std::uint64_t seed = 12345;
  std::uint64_t quad_budget = 100000;  // seeded quadruples on instances >= 30 vertices
  int geodesic_budget = 10;            // sampled geodesics per instance
};

struct CheckOutcome {
  std::string check;
  int k = -1;  // -1 for level-independent checks, printed as "-"
  std::string instance;
  bool pass = false;
  std::string detail;
};

struct VerifyResult {
  std::vector<CheckOutcome> lines;
  bool all_pass = true;
};

/// `CHECK <id> k=<k> <instance> PASS|FAIL <detail>`
std::string format_check_line(const CheckOutcome& o);

/// Runs the requested checks over the requested instances. Throws
/// InputError on an invalid plan or unloadable instance.
VerifyResult run_verify(const VerifyPlan& plan);

struct InfoSummary {
  Vertex vertices = 0;
  std::size_t edges = 0;
  int walls = 0;
  int dimension = 0;
  int diameter = 0;
  std::string tsv() const;
};

InfoSummary run_info(const CubeComplex& cc);

}  // namespace cxc
