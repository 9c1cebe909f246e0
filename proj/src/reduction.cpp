#include "genusone/reduction.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace genusone {

std::string to_string(RewriteKind kind) {
  switch (kind) {
    case RewriteKind::BlowUp: return "blow-up";
    case RewriteKind::ContractCore: return "contract-core";
    case RewriteKind::StabilizeContract: return "stabilize-contract";
  }
  return "?";
}

std::string to_string(TerminationCause cause) {
  switch (cause) {
    case TerminationCause::AlreadyNonconstant: return "already-nonconstant";
    case TerminationCause::MapNonconstantOnCore: return "map-nonconstant-on-core";
    case TerminationCause::LevelExceedsM: return "level-exceeds-m";
  }
  return "?";
}

namespace {

std::string fresh_id(const DualGraph& g, std::string base) {
  while (g.has_vertex(base)) base += "'";
  return base;
}

bool core_constant(const DualGraph& g, const Subcurve& z) {
  for (const auto& id : z)
    if (g.find(id)->degree > 0) return false;
  return true;
}

DualGraph stabilize_impl(const DualGraph& g, std::vector<std::string>* removed) {
  require_valid(g);
  DualGraph cur = g;
  cur.normalize();
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& v : cur.vertices) {
      if (v.genus != 0 || v.degree != 0) continue;
      // Elliptic branches meet the curve at the elliptic point, not nodes;
      // a self-loop carries the arithmetic genus. Neither is contractible.
      if (cur.is_branch(v.id)) continue;
      bool has_loop = false;
      for (const auto& e : cur.edges)
        if (e.is_loop() && e.a == v.id) has_loop = true;
      if (has_loop) continue;
      if (distinguished_points(cur, v.id) != 2) continue;

      std::vector<std::string> neighbors;
      for (const auto& e : cur.edges) {
        if (e.a == v.id) neighbors.push_back(e.b);
        if (e.b == v.id) neighbors.push_back(e.a);
      }

      DualGraph next = cur;
      std::string id = v.id;
      if (neighbors.size() == 2) {
        // Two nodes: splice the chain through v.
        next.edges.erase(
            std::remove_if(next.edges.begin(), next.edges.end(),
                           [&](const Edge& e) { return e.a == id || e.b == id; }),
            next.edges.end());
        next.edges.emplace_back(neighbors[0], neighbors[1]);
      } else if (neighbors.size() == 1 && v.marks.size() == 1) {
        // One node plus one mark: the mark lands on the neighbor.
        std::string mark = v.marks.front();
        next.edges.erase(
            std::remove_if(next.edges.begin(), next.edges.end(),
                           [&](const Edge& e) { return e.a == id || e.b == id; }),
            next.edges.end());
        next.find(neighbors[0])->marks.push_back(mark);
      } else {
        throw std::logic_error("stabilize: unexpected two-point configuration at '" + id + "'");
      }
      next.vertices.erase(
          std::remove_if(next.vertices.begin(), next.vertices.end(),
                         [&](const Vertex& w) { return w.id == id; }),
          next.vertices.end());
      next.normalize();
      if (removed) removed->push_back(id);
      cur = std::move(next);
      changed = true;
      break;
    }
  }
  require_valid(cur);
  return cur;
}

}  // namespace

DualGraph blow_up_core_marks(const DualGraph& g) {
  require_valid(g);
  DualGraph out = g;
  out.normalize();
  Subcurve z = core(out);
  for (const auto& id : z) {
    Vertex* v = out.find(id);
    std::vector<std::string> marks = v->marks;
    v->marks.clear();
    for (const auto& mark : marks) {
      Vertex exceptional;
      exceptional.id = fresh_id(out, "x:" + mark);
      exceptional.marks = {mark};
      out.edges.emplace_back(id, exceptional.id);
      out.vertices.push_back(exceptional);
    }
  }
  out.normalize();
  require_valid(out);
  return out;
}

DualGraph contract_core(const DualGraph& g) {
  require_valid(g);
  Subcurve z = core(g);
  std::set<std::string> zset(z.begin(), z.end());
  for (const auto& id : z) {
    const Vertex* v = g.find(id);
    if (v->degree > 0)
      throw std::domain_error("contract_core: map is non-constant on core vertex '" + id + "'");
    if (!v->marks.empty())
      throw std::domain_error("contract_core: core vertex '" + id + "' still carries marks");
  }

  std::map<std::string, int> attach;
  int attaching_edges = 0;
  for (const auto& e : g.edges) {
    bool ina = zset.count(e.a) > 0, inb = zset.count(e.b) > 0;
    if (ina == inb) continue;
    ++attaching_edges;
    ++attach[ina ? e.b : e.a];
  }
  if (attaching_edges == 0)
    throw std::domain_error("contract_core: core has no attaching edges");
  for (const auto& [id, count] : attach)
    if (count != 1)
      throw std::domain_error("contract_core: vertex '" + id +
                              "' meets the core in more than one node");

  DualGraph out;
  out.target_dim = g.target_dim;
  for (const auto& v : g.vertices)
    if (!zset.count(v.id)) out.vertices.push_back(v);
  for (const auto& e : g.edges)
    if (!zset.count(e.a) && !zset.count(e.b)) out.edges.push_back(e);
  EllipticPoint point;
  for (const auto& [id, count] : attach) point.branches.push_back(id);
  out.elliptic = point;
  out.normalize();
  require_valid(out);
  return out;
}

DualGraph stabilize(const DualGraph& g) { return stabilize_impl(g, nullptr); }

namespace {

void record_step(ReductionTrace& trace, RewriteKind kind, const DualGraph& before,
                 const DualGraph& after, std::vector<std::string> affected) {
  RewriteStep step;
  step.kind = kind;
  step.affected = std::move(affected);
  step.level_before = level(before);
  step.level_after = level(after);
  step.elliptic_before = before.elliptic ? before.elliptic->multiplicity() : 0;
  step.elliptic_after = after.elliptic ? after.elliptic->multiplicity() : 0;
  step.before = before;
  step.after = after;
  trace.steps.push_back(std::move(step));
}

void check_conservation(const DualGraph& a, const DualGraph& b) {
  if (a.total_degree() != b.total_degree())
    throw std::logic_error("reduce: total degree changed");
  if (a.mark_labels() != b.mark_labels())
    throw std::logic_error("reduce: mark set changed");
  if (arithmetic_genus(b) != 1) throw std::logic_error("reduce: arithmetic genus is not 1");
}

}  // namespace

ReductionTrace reduce(const DualGraph& g, const StabilityParams& params) {
  require_valid(g);
  if (g.elliptic)
    throw std::domain_error("reduce: input must be nodal (no elliptic point)");
  if (g.total_degree() < 1) throw std::domain_error("reduce: total degree must be positive");
  if (params.d != g.total_degree() || params.n != g.mark_count())
    throw std::invalid_argument("reduce: params disagree with the graph");
  if (params.m < 0) throw std::invalid_argument("reduce: m must be >= 0");
  {
    Subcurve z = core(g);
    std::set<std::string> zset(z.begin(), z.end());
    for (const auto& v : g.vertices) {
      if (zset.count(v.id)) continue;
      if (v.genus == 0 && v.degree == 0 && distinguished_points(g, v.id) < 2)
        throw std::domain_error("reduce: vertex '" + v.id +
                                "' violates minimality (fewer than 2 distinguished points)");
    }
  }

  ReductionTrace trace;
  DualGraph cur = g;
  cur.normalize();
  trace.initial = cur;

  Subcurve z = core(cur);
  if (!core_constant(cur, z)) {
    trace.cause = TerminationCause::AlreadyNonconstant;
  } else {
    std::size_t guard = (g.vertices.size() + g.mark_count() + 2) *
                        static_cast<std::size_t>(params.m + 2);
    while (true) {
      z = core(cur);
      if (!core_constant(cur, z)) {
        trace.cause = TerminationCause::MapNonconstantOnCore;
        break;
      }
      int lv = level(cur);
      if (lv > params.m) {
        trace.cause = TerminationCause::LevelExceedsM;
        break;
      }
      if (guard-- == 0) throw std::logic_error("reduce: iteration bound exceeded");

      // Blow up the marked points on the core, then contract it.
      DualGraph blown = blow_up_core_marks(cur);
      if (!(blown == cur)) {
        std::vector<std::string> moved;
        for (const auto& id : z) {
          const Vertex* v = cur.find(id);
          moved.insert(moved.end(), v->marks.begin(), v->marks.end());
        }
        std::sort(moved.begin(), moved.end());
        record_step(trace, RewriteKind::BlowUp, cur, blown, moved);
        check_conservation(cur, blown);
      }
      DualGraph contracted = contract_core(blown);
      record_step(trace, RewriteKind::ContractCore, blown, contracted, core(blown));
      check_conservation(cur, contracted);

      // Condition (v): the new multiplicity equals the level before the step.
      if (contracted.elliptic->multiplicity() != lv)
        throw std::logic_error("reduce: elliptic multiplicity != level before contraction");
      // Condition (iv): every contracted component keeps >= 2 distinguished points.
      for (const auto& v : contracted.vertices)
        if (v.degree == 0 && distinguished_points(contracted, v.id) < 2)
          throw std::logic_error("reduce: condition (iv) failed at '" + v.id + "'");
      // Condition (vi): while the map stays constant on the new core, the
      // level never drops, strictly rising iff some branch has >= 3 points.
      Subcurve znew = core(contracted);
      if (core_constant(contracted, znew)) {
        int lv_new = level(contracted);
        bool some_three = false;
        for (const auto& id : znew)
          if (distinguished_points(contracted, id) >= 3) some_three = true;
        if (lv_new < lv) throw std::logic_error("reduce: level decreased");
        if ((lv_new > lv) != some_three)
          throw std::logic_error("reduce: condition (vi) strictness failed");
      }
      cur = std::move(contracted);
    }
  }

  int level_at_termination = level(cur);
  std::vector<std::string> removed;
  DualGraph stabilized = stabilize_impl(cur, &removed);
  if (!(stabilized == cur)) {
    record_step(trace, RewriteKind::StabilizeContract, cur, stabilized, removed);
    check_conservation(cur, stabilized);
    cur = std::move(stabilized);
  }

  if (trace.cause == TerminationCause::LevelExceedsM && level(cur) != level_at_termination)
    throw std::logic_error("reduce: level changed during final stabilization");
  StabilityResult final_check = is_m_stable_map(cur, params);
  if (!final_check.stable) throw std::logic_error("reduce: output is not m-stable");

  trace.final = cur;
  return trace;
}

}  // namespace genusone
