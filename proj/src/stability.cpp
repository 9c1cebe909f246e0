#include "genusone/stability.hpp"

#include <algorithm>
#include <stdexcept>

namespace genusone {

std::string to_string(ReasonCode code) {
  switch (code) {
    case ReasonCode::SingularityTooDeep: return "singularity-too-deep";
    case ReasonCode::CoreLevelTooLow: return "core-level-too-low";
    case ReasonCode::ConstantRationalTail: return "constant-rational-tail";
    case ReasonCode::BranchTooBare: return "branch-too-bare";
    case ReasonCode::NoBranchWithThree: return "no-branch-with-three";
    case ReasonCode::ConstantNonBranch: return "constant-non-branch";
  }
  return "?";
}

namespace {

// Shared clause evaluation. In curve mode every component counts as
// contracted, so `constant` is identically true.
StabilityResult check_stability(const DualGraph& g, int m, bool curve_mode) {
  StabilityResult result;
  auto fail = [&](ReasonCode code, std::string detail) {
    result.reasons.push_back({code, std::move(detail)});
  };
  auto constant = [&](const Vertex& v) { return curve_mode || v.degree == 0; };

  // (1) Only nodes and elliptic l-fold points with l <= m.
  if (g.elliptic && g.elliptic->multiplicity() > m)
    fail(ReasonCode::SingularityTooDeep,
         "elliptic multiplicity " + std::to_string(g.elliptic->multiplicity()) +
             " exceeds m = " + std::to_string(m));

  // (2) If the map contracts the core, the level must exceed m.
  Subcurve z = core(g);
  bool core_constant = true;
  for (const auto& id : z)
    if (!constant(*g.find(id))) core_constant = false;
  if (core_constant) {
    int lv = level(g);
    if (lv <= m)
      fail(ReasonCode::CoreLevelTooLow,
           "level " + std::to_string(lv) + " <= m = " + std::to_string(m));
  }

  // (3) No infinitesimal automorphisms.
  if (!g.elliptic) {
    for (const auto& v : g.vertices) {
      if (v.genus != 0 || !constant(v)) continue;
      if (distinguished_points(g, v.id) < 3)
        fail(ReasonCode::ConstantRationalTail,
             "vertex '" + v.id + "' has fewer than 3 distinguished points");
    }
  } else {
    bool some_branch_three = false;
    for (const auto& b : g.elliptic->branches) {
      int dp = distinguished_points(g, b);
      if (dp >= 3) some_branch_three = true;
      if (constant(*g.find(b)) && dp < 2)
        fail(ReasonCode::BranchTooBare,
             "branch '" + b + "' has fewer than 2 distinguished points");
    }
    if (core_constant && !some_branch_three)
      fail(ReasonCode::NoBranchWithThree, "no branch has 3 distinguished points");
    for (const auto& v : g.vertices) {
      if (g.is_branch(v.id) || !constant(v)) continue;
      if (distinguished_points(g, v.id) < 3)
        fail(ReasonCode::ConstantNonBranch,
             "vertex '" + v.id + "' has fewer than 3 distinguished points");
    }
  }

  result.stable = result.reasons.empty();
  return result;
}

}  // namespace

StabilityResult is_m_stable_map(const DualGraph& g, const StabilityParams& params) {
  require_valid(g);
  if (params.m < 0) throw std::invalid_argument("is_m_stable_map: m must be >= 0");
  if (g.total_degree() == 0 || params.d == 0)
    throw std::domain_error("is_m_stable_map: map degree d must be positive");
  if (params.d != g.total_degree())
    throw std::invalid_argument("is_m_stable_map: d does not match the graph's total degree");
  if (params.n != g.mark_count())
    throw std::invalid_argument("is_m_stable_map: n does not match the graph's mark count");
  return check_stability(g, params.m, /*curve_mode=*/false);
}

StabilityResult is_m_stable_curve(const DualGraph& g, int m, int n) {
  require_valid(g);
  if (m < 0 || m >= n)
    throw std::invalid_argument("is_m_stable_curve: requires 0 <= m < n");
  if (n != g.mark_count())
    throw std::invalid_argument("is_m_stable_curve: n does not match the graph's mark count");
  return check_stability(g, m, /*curve_mode=*/true);
}

StabilityInterval stability_interval(const DualGraph& g, int r, int d) {
  require_valid(g);
  if (d != g.total_degree() || d < 1)
    throw std::invalid_argument("stability_interval: bad degree");
  (void)r;

  StabilityParams params{0, g.mark_count(), g.target_dim, d};
  int l_ell = g.elliptic ? g.elliptic->multiplicity() : 0;

  // Clause (3) does not depend on m; probe at m large enough that clause (1)
  // passes, then discard any clause-(2) failure.
  params.m = l_ell + level(g) + 1;
  for (const auto& reason : is_m_stable_map(g, params).reasons)
    if (reason.code != ReasonCode::CoreLevelTooLow) return {};

  StabilityInterval interval;
  interval.lower = l_ell;
  Subcurve z = core(g);
  bool core_constant = true;
  for (const auto& id : z)
    if (g.find(id)->degree > 0) core_constant = false;
  if (core_constant) {
    int hi = level(g) - 1;
    if (hi < interval.lower) return {};
    interval.upper = hi;
  }
  interval.empty = false;
  return interval;
}

int canonical_degree(const DualGraph& g, const std::string& vertex_id) {
  const Vertex* v = g.find(vertex_id);
  if (!v) throw std::domain_error("unknown vertex '" + vertex_id + "'");
  int incidences = 0;
  for (const auto& e : g.edges) {
    if (e.a == vertex_id) ++incidences;
    if (e.b == vertex_id) ++incidences;
  }
  return 2 * v->genus - 2 + incidences + (g.is_branch(vertex_id) ? 2 : 0);
}

bool is_canonically_polarized(const DualGraph& g) {
  require_valid(g);
  for (const auto& v : g.vertices) {
    int deg = canonical_degree(g, v.id) + static_cast<int>(v.marks.size()) + 3 * v.degree;
    if (deg <= 0) return false;
  }
  return true;
}

int polarization_power_bound(int m, int n) {
  if (m < 0 || n < 0) throw std::invalid_argument("polarization_power_bound: m, n >= 0");
  return n + std::max(2 * m, 4) + 1;
}

DualGraph augment_with_hyperplane_marks(const DualGraph& g, int m) {
  StabilityParams params{m, g.mark_count(), g.target_dim, g.total_degree()};
  auto check = is_m_stable_map(g, params);
  if (!check.stable)
    throw std::domain_error("augment_with_hyperplane_marks: input is not m-stable");

  DualGraph out = g;
  out.normalize();
  for (int round = 1; round <= m + 1; ++round) {
    int counter = 0;
    for (auto& v : out.vertices) {
      for (int i = 0; i < v.degree; ++i) {
        ++counter;
        v.marks.push_back("_hyp" + std::to_string(round) + "_" + std::to_string(counter));
      }
    }
  }
  out.normalize();
  return out;
}

}  // namespace genusone
