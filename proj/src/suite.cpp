#include "cxc/suite.hpp"

#include "cxc/generators.hpp"

namespace cxc {

std::vector<NamedComplex> standard_suite() {
  std::vector<NamedComplex> suite;
  auto add = [&suite](std::string name, CubeComplex cc) {
    suite.push_back({std::move(name), std::move(cc)});
  };

  for (int m = 2; m <= 6; ++m)
    add("grid-" + std::to_string(m) + "x" + std::to_string(m), gen_grid({m, m}));
  add("grid-2x2x2", gen_grid({2, 2, 2}));
  add("grid-3x3x2", gen_grid({3, 3, 2}));

  add("path-6", gen_grid({6}));
  add("path-21", gen_grid({21}));  // the 20-edge bilipschitz tightness instance

  add("tripod", gen_tree_balanced(3, 1));
  add("tree-bal2-d4", gen_tree_balanced(2, 4));
  add("tree-rand-40-s3", gen_tree_random(3, 40));
  add("tree-rand-60-s7", gen_tree_random(7, 60));

  auto free2 = RaagPresentation::parse("", "a,b");
  auto z2 = RaagPresentation::parse("a-b", "");
  auto z2z = RaagPresentation::parse("a-b", "c");
  for (int r = 1; r <= 2; ++r) {
    add("raag-free2-r" + std::to_string(r), raag_hull(free2, r).complex);
    add("raag-z2-r" + std::to_string(r), raag_hull(z2, r).complex);
    add("raag-z2z-r" + std::to_string(r), raag_hull(z2z, r).complex);
  }

  for (std::uint64_t s = 1; s <= 5; ++s)
    add("rand-median-s" + std::to_string(s), gen_random_median(s, 32));

  return suite;
}

}  // namespace cxc
