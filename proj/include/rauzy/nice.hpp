#pragma once

#include <string>
#include <vector>

#include "rauzy/geometry.hpp"

namespace rauzy {

struct S1Report {
  bool pass = true;
  std::vector<std::string> non_geometric;  // types whose image has a coefficient outside {±1}
  std::vector<OverlapWitness> overlaps;
};

struct S2Pair {
  Face first;
  Face second;
  std::string reason;
};

struct S2Report {
  bool pass = true;
  double radius = 0;               // R = 2·max‖π_c l(s)‖ / (1 − ‖β‖_c)
  std::size_t translations = 0;    // classes of z mod ker π inside the search region
  std::size_t pairs_checked = 0;   // near pairs whose sum projects well
  std::vector<S2Pair> failures;
};

struct NiceReport {
  S1Report s1;
  S2Report s2;
  PositivityReport p;
  HypothesisReport n;
  bool nice() const { return s1.pass && s2.pass && p.pass && n.pass; }
};

S1Report check_S1(const PisotContext& ctx, double eps = 1e-9);
S2Report check_S2(const PisotContext& ctx, double eps = 1e-9);
NiceReport check_nice(const PisotContext& ctx, double eps = 1e-9);

// Integer translations z, one per class modulo ker π, with |π_c z| ≤ radius and
// |⟨z, v_β⟩| < window.
std::vector<LatticePoint> short_translations(const PisotContext& ctx, double radius, double window);

}  // namespace rauzy
