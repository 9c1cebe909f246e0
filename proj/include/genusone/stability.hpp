#pragma once

#include <optional>
#include <string>
#include <vector>

#include "genusone/graph.hpp"

namespace genusone {

/// Parameters governing every stability predicate.
struct StabilityParams {
  int m = 0;  // singularity / level parameter
  int n = 0;  // number of marks
  int r = 1;  // target projective dimension
  int d = 1;  // total map degree
};

enum class ReasonCode {
  SingularityTooDeep,     // elliptic multiplicity l > m
  CoreLevelTooLow,        // map constant on the core and level <= m
  ConstantRationalTail,   // nodal: a contracted genus-0 vertex has < 3 distinguished points
  BranchTooBare,          // a contracted branch has < 2 distinguished points
  NoBranchWithThree,      // core contracted and no branch has >= 3 distinguished points
  ConstantNonBranch       // a contracted non-branch vertex has < 3 distinguished points
};
std::string to_string(ReasonCode code);

struct Reason {
  ReasonCode code;
  std::string detail;
};

struct StabilityResult {
  bool stable = false;
  std::vector<Reason> reasons;
};

/// m-stability of a map: singularity bound, core level, and the
/// infinitesimal-automorphism clauses on contracted components.
StabilityResult is_m_stable_map(const DualGraph& g, const StabilityParams& params);

/// m-stability of the pointed curve alone (map to a point). Requires 0 <= m < n.
StabilityResult is_m_stable_curve(const DualGraph& g, int m, int n);

/// The set {m : is_m_stable_map}, always an interval.
struct StabilityInterval {
  bool empty = true;
  int lower = 0;
  std::optional<int> upper;  // absent when unbounded above
  bool contains(int m) const {
    return !empty && m >= lower && (!upper || m <= *upper);
  }
};
StabilityInterval stability_interval(const DualGraph& g, int r, int d);

/// Degree of the dualizing sheaf on one component:
/// 2g - 2 + node incidences (self-loops twice) + 2 if on the elliptic point.
int canonical_degree(const DualGraph& g, const std::string& vertex_id);

/// omega_C(marks) tensor mu^* O(3) is ample on every component.
bool is_canonically_polarized(const DualGraph& g);

/// Least N with L^N very ample: n + max(2m, 4) + 1.
int polarization_power_bound(int m, int n);

/// Adds m+1 rounds of d hyperplane marks, map_degree(v) marks per vertex per
/// round; the result is an m-stable curve with n + d(m+1) marks.
DualGraph augment_with_hyperplane_marks(const DualGraph& g, int m);

}  // namespace genusone
