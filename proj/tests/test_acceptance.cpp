// Acceptance gate: ten criteria, one pass/fail line each, nonzero exit on
// any failure.

#include <algorithm>
#include <chrono>
#include <climits>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "genusone/components.hpp"
#include "genusone/graph.hpp"
#include "genusone/io.hpp"
#include "genusone/reduction.hpp"
#include "genusone/stability.hpp"
#include "test_util.hpp"

using namespace genusone;
using testutil::elliptic_with_tails;

namespace {

int failures = 0;

void report(int index, const char* name, bool ok, double seconds) {
  std::printf("criterion %2d: %s — %s (%.2fs)\n", index, ok ? "PASS" : "FAIL", name,
              seconds);
  if (!ok) ++failures;
}

void run(int index, const char* name, const std::function<bool()>& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& ex) {
    std::printf("  exception: %s\n", ex.what());
    ok = false;
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(index, name, ok, secs);
}

// --- criterion 4: exhaustive graphs, <= 6 vertices, <= 2 marks, degrees in
// {0, 3} (the predicates only see whether a degree vanishes).

struct Shape {
  int core_size = 1;
  int kind = 0;  // 0 genus-1, 1 self-loop, 2 ring, 3 elliptic
};

bool check_lemma_oracle(const DualGraph& g) {
  // Hypothesis: every genus-0 vertex has >= 2 distinguished points.
  for (const auto& v : g.vertices)
    if (v.genus == 0 && distinguished_points(g, v.id) < 2) return true;

  auto subs = genus_one_subcurves(g);
  Subcurve z = core(g);
  bool core_const = true;
  for (const auto& id : z)
    if (g.find(id)->degree > 0) core_const = false;

  // Curve mode: min over all genus-one subcurves of their distinguished
  // points equals the level.
  int min_all = INT_MAX;
  int min_const = INT_MAX;
  for (const auto& sub : subs) {
    std::set<std::string> s(sub.begin(), sub.end());
    int dp = subcurve_distinguished(g, s);
    min_all = std::min(min_all, dp);
    bool constant = true;
    for (const auto& id : sub)
      if (g.find(id)->degree > 0) constant = false;
    if (constant) min_const = std::min(min_const, dp);
  }
  if (min_all != level(g)) return false;
  // Map mode: when the core is constant, the minimum over constant
  // subcurves is again the level; otherwise no subcurve qualifies.
  if (core_const && min_const != level(g)) return false;
  if (!core_const && min_const != INT_MAX) return false;
  return true;
}

bool criterion4() {
  std::vector<Shape> shapes = {{1, 0}, {1, 1}, {2, 2}, {3, 2}, {4, 2},
                               {1, 3}, {2, 3}, {3, 3}};
  long checked = 0;
  for (const auto& shape : shapes) {
    for (int total = shape.core_size; total <= 6; ++total) {
      int tails = total - shape.core_size;
      // parent[i] in [0, core_size + i): attach each extra vertex to any
      // earlier vertex.
      std::vector<int> parent(tails, 0);
      while (true) {
        DualGraph base;
        base.target_dim = 2;
        for (int i = 0; i < total; ++i) {
          Vertex v;
          v.id = std::string(1, static_cast<char>('a' + i));
          base.vertices.push_back(v);
        }
        if (shape.kind == 0) base.vertices[0].genus = 1;
        if (shape.kind == 1) base.edges.emplace_back("a", "a");
        if (shape.kind == 2)
          for (int i = 0; i < shape.core_size; ++i)
            base.edges.emplace_back(base.vertices[i].id,
                                    base.vertices[(i + 1) % shape.core_size].id);
        if (shape.kind == 3) {
          EllipticPoint p;
          for (int i = 0; i < shape.core_size; ++i) p.branches.push_back(base.vertices[i].id);
          base.elliptic = p;
        }
        for (int i = 0; i < tails; ++i)
          base.edges.emplace_back(base.vertices[parent[i]].id,
                                  base.vertices[shape.core_size + i].id);

        // degree zero-patterns and <= 2 unlabeled marks
        for (int dmask = 0; dmask < (1 << total); ++dmask) {
          // (m1, m2) with -1 <= m1 <= m2: none, one, or two unlabeled marks.
          for (int m1 = -1; m1 < total; ++m1)
            for (int m2 = m1; m2 < total; ++m2) {
              DualGraph g = base;
              for (int i = 0; i < total; ++i)
                g.find(std::string(1, static_cast<char>('a' + i)))->degree =
                    (dmask >> i) & 1 ? 3 : 0;
              int next = 1;
              if (m1 >= 0)
                g.vertices[m1].marks.push_back("p" + std::to_string(next++));
              if (m2 >= 0)
                g.vertices[m2].marks.push_back("p" + std::to_string(next++));
              g.normalize();
              if (!validate(g).ok()) continue;
              ++checked;
              if (!check_lemma_oracle(g)) return false;
            }
        }

        int i = tails - 1;
        while (i >= 0 && parent[i] == shape.core_size + i - 1) --i;
        if (i < 0) break;
        ++parent[i];
        for (int k = i + 1; k < tails; ++k) parent[k] = 0;
      }
    }
  }
  return checked > 10000;
}

std::vector<DualGraph> nodal_corpus(int count) {
  std::mt19937 rng(101);
  std::vector<DualGraph> corpus;
  while (static_cast<int>(corpus.size()) < count) {
    DualGraph g = testutil::random_nodal_minimal(rng);
    if (validate(g).ok()) corpus.push_back(std::move(g));
  }
  return corpus;
}

bool criterion5(const std::vector<DualGraph>& corpus) {
  std::mt19937 rng(103);
  for (const auto& g : corpus) {
    int m = std::uniform_int_distribution<int>(0, 4)(rng);
    StabilityParams params{m, g.mark_count(), g.target_dim, g.total_degree()};
    auto trace = reduce(g, params);
    if (!is_m_stable_map(trace.final, params).stable) return false;
    if (trace.final.total_degree() != g.total_degree()) return false;
    if (trace.final.mark_labels() != g.mark_labels()) return false;
    if (arithmetic_genus(trace.final) != 1) return false;
    const DualGraph* last_core_graph = &trace.initial;
    int prev_level = level(trace.initial);
    for (const auto& step : trace.steps) {
      if (arithmetic_genus(step.before) != 1 || arithmetic_genus(step.after) != 1)
        return false;
      if (step.kind == RewriteKind::ContractCore) {
        if (step.elliptic_after != step.level_before) return false;  // (v)
        bool new_core_const = true;
        for (const auto& id : core(step.after))
          if (step.after.find(id)->degree > 0) new_core_const = false;
        if (new_core_const && step.level_after < prev_level) return false;  // (vi)
        prev_level = step.level_after;
        last_core_graph = &step.after;
      }
    }
    if (trace.cause == TerminationCause::LevelExceedsM &&
        level(trace.final) != level(*last_core_graph))
      return false;
  }
  return true;
}

bool criterion6(const std::vector<DualGraph>& corpus) {
  std::mt19937 rng(107);
  std::vector<DualGraph> extended = corpus;
  for (int i = 0; i < 300; ++i) {
    DualGraph g = testutil::random_elliptic(rng);
    if (validate(g).ok()) extended.push_back(std::move(g));
  }
  for (const auto& g : extended) {
    int d = g.total_degree(), n = g.mark_count();
    StabilityParams base{d + n, n, g.target_dim, d};
    bool value = is_m_stable_map(g, base).stable;
    for (int m = d + n; m <= d + n + 5; ++m) {
      StabilityParams p{m, n, g.target_dim, d};
      if (is_m_stable_map(g, p).stable != value) return false;
    }
    // (1') l <= d+n; (2') non-constant core; (3') automorphism clauses.
    int l = g.elliptic ? g.elliptic->multiplicity() : 0;
    bool core_nonconst = false;
    for (const auto& id : core(g))
      if (g.find(id)->degree > 0) core_nonconst = true;
    bool clause3 = true;
    for (const auto& reason :
         is_m_stable_map(g, StabilityParams{d + n + 1000, n, g.target_dim, d}).reasons)
      if (reason.code != ReasonCode::SingularityTooDeep &&
          reason.code != ReasonCode::CoreLevelTooLow)
        clause3 = false;
    bool expected = (l <= d + n) && core_nonconst && clause3;
    if (value != expected) return false;
  }
  return true;
}

bool criterion8(const std::vector<DualGraph>& corpus) {
  std::mt19937 rng(109);
  std::vector<DualGraph> extended = corpus;
  for (int i = 0; i < 300; ++i) {
    DualGraph g = testutil::random_elliptic(rng);
    if (validate(g).ok()) extended.push_back(std::move(g));
  }
  int stable_seen = 0;
  for (const auto& g : extended) {
    int d = g.total_degree(), n = g.mark_count();
    auto interval = stability_interval(g, g.target_dim, d);
    if (interval.empty) continue;
    // m >= 1 throughout: the hyperplane-section construction starts there.
    std::vector<int> probes = {std::max(interval.lower, 1)};
    if (interval.upper) probes.push_back(*interval.upper);
    else probes.push_back(interval.lower + 3);
    for (int m : probes) {
      if (m < 1 || !interval.contains(m)) continue;
      ++stable_seen;
      DualGraph aug = augment_with_hyperplane_marks(g, m);
      if (aug.mark_count() != n + d * (m + 1)) return false;
      if (!is_m_stable_curve(aug, m, n + d * (m + 1)).stable) return false;
    }
  }
  return stable_seen > 200;
}

bool criterion9(const std::vector<DualGraph>& corpus) {
  std::mt19937 rng(113);
  std::vector<DualGraph> extended = corpus;
  for (int i = 0; i < 300; ++i) {
    DualGraph g = testutil::random_elliptic(rng);
    if (validate(g).ok()) extended.push_back(std::move(g));
  }
  for (const auto& g : extended) {
    auto interval = stability_interval(g, g.target_dim, g.total_degree());
    if (interval.empty) continue;
    if (!is_canonically_polarized(g)) return false;
  }
  for (int m = 0; m <= 10; ++m)
    for (int n = 0; n <= 10; ++n)
      if (polarization_power_bound(m, n) != n + std::max(2 * m, 4) + 1) return false;
  return true;
}

bool criterion10() {
  std::mt19937 rng(127);
  std::uniform_int_distribution<int> num(-4, 4), den(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    int r = std::uniform_int_distribution<int>(1, 5)(rng);
    int l = std::uniform_int_distribution<int>(1, 5)(rng);
    DualGraph g = elliptic_with_tails(std::vector<int>(l, 1), r);
    TangentData tangents;
    for (int i = 0; i < l; ++i) {
      std::vector<Rational> v(r);
      bool nonzero = false;
      while (!nonzero)
        for (auto& x : v) {
          x = Rational(num(rng), den(rng));
          if (x != 0) nonzero = true;
        }
      tangents.vectors.push_back(v);
    }
    bool expected = testutil::minor_rank(tangents.vectors) < l;
    if (is_smoothable(g, tangents) != expected) return false;
  }
  for (int r = 1; r <= 5; ++r)
    for (int l = 1; l <= 5; ++l)
      if (is_smoothable(elliptic_with_tails(std::vector<int>(l, 1), r)) != (l > r))
        return false;
  return true;
}

}  // namespace

int main() {
  run(1, "plane-cubics component counts 3, 2, 1, 1", [] {
    std::vector<std::size_t> expected = {3, 2, 1, 1};
    for (int m = 0; m <= 3; ++m)
      if (enumerate_components(StabilityParams{m, 0, 2, 3}).size() != expected[m])
        return false;
    return true;
  });

  run(2, "plane-cubics dimensions 9, 10, 9", [] {
    StabilityParams p{0, 0, 2, 3};
    auto descs = enumerate_components(p);
    return descs.size() == 3 && component_dimension(descs[0], p) == 9 &&
           component_dimension(descs[1], p) == 10 && component_dimension(descs[2], p) == 9;
  });

  run(3, "reduction goldens: cusp, tacnode, triple point", [] {
    struct Golden {
      int m;
      std::vector<int> tails;
      std::string expect;
    };
    std::vector<Golden> goldens = {
        {1, {3},
         R"({"r":2,"vertices":[{"id":"R1","genus":0,"degree":3,"marks":[]}],"edges":[],"elliptic":{"branches":["R1"]}})"},
        {2, {2, 1},
         R"({"r":2,"vertices":[{"id":"R1","genus":0,"degree":2,"marks":[]},{"id":"R2","genus":0,"degree":1,"marks":[]}],"edges":[],"elliptic":{"branches":["R1","R2"]}})"},
        {3, {1, 1, 1},
         R"({"r":2,"vertices":[{"id":"R1","genus":0,"degree":1,"marks":[]},{"id":"R2","genus":0,"degree":1,"marks":[]},{"id":"R3","genus":0,"degree":1,"marks":[]}],"edges":[],"elliptic":{"branches":["R1","R2","R3"]}})"}};
    for (const auto& golden : goldens) {
      StabilityParams p{golden.m, 0, 2, 3};
      auto trace = reduce(elliptic_with_tails(golden.tails), p);
      if (graph_to_string(trace.final) != golden.expect) return false;
      if (!is_m_stable_map(trace.final, p).stable) return false;
    }
    return true;
  });

  run(4, "level vs genus-one-subcurve oracle (exhaustive, <= 6 vertices)", criterion4);

  auto corpus = nodal_corpus(1000);

  run(5, "reduction invariants over 1000 random nodal inputs",
      [&] { return criterion5(corpus); });
  run(6, "stabilization threshold (m >= d+n)", [&] { return criterion6(corpus); });
  run(7, "irreducibility: count non-increasing, 1 at min(r,d)+n", [] {
    for (int n = 0; n <= 3; ++n)
      for (int r = 1; r <= 4; ++r)
        for (int d = 1; d <= 4; ++d) {
          std::size_t prev = SIZE_MAX;
          int cap = std::min(r, d) + n;
          for (int m = 0; m <= cap + 2; ++m) {
            std::size_t count = enumerate_components(StabilityParams{m, n, r, d}).size();
            if (count > prev) return false;
            if (m >= cap && count != 1) return false;
            prev = count;
          }
        }
    return true;
  });
  run(8, "augmentation yields m-stable curves with n + d(m+1) marks",
      [&] { return criterion8(corpus); });
  run(9, "polarization of stable graphs and the power bound",
      [&] { return criterion9(corpus); });
  run(10, "smoothability rank oracle (500 random tangent sets)", criterion10);

  return failures == 0 ? 0 : 1;
}
