#include "genusone/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace genusone {

Edge::Edge(std::string x, std::string y) {
  if (y < x) std::swap(x, y);
  a = std::move(x);
  b = std::move(y);
}

bool operator<(const Edge& lhs, const Edge& rhs) {
  return std::tie(lhs.a, lhs.b) < std::tie(rhs.a, rhs.b);
}

void DualGraph::normalize() {
  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& x, const Vertex& y) { return x.id < y.id; });
  for (auto& v : vertices) std::sort(v.marks.begin(), v.marks.end());
  for (auto& e : edges) {
    if (e.b < e.a) std::swap(e.a, e.b);
  }
  std::sort(edges.begin(), edges.end());
  if (elliptic) std::sort(elliptic->branches.begin(), elliptic->branches.end());
}

const Vertex* DualGraph::find(const std::string& id) const {
  for (const auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

Vertex* DualGraph::find(const std::string& id) {
  for (auto& v : vertices)
    if (v.id == id) return &v;
  return nullptr;
}

bool DualGraph::has_vertex(const std::string& id) const { return find(id) != nullptr; }

bool DualGraph::is_branch(const std::string& id) const {
  if (!elliptic) return false;
  const auto& b = elliptic->branches;
  return std::find(b.begin(), b.end(), id) != b.end();
}

int DualGraph::total_degree() const {
  int d = 0;
  for (const auto& v : vertices) d += v.degree;
  return d;
}

int DualGraph::mark_count() const {
  int n = 0;
  for (const auto& v : vertices) n += static_cast<int>(v.marks.size());
  return n;
}

std::vector<std::string> DualGraph::mark_labels() const {
  std::vector<std::string> out;
  for (const auto& v : vertices) out.insert(out.end(), v.marks.begin(), v.marks.end());
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

// Union-find over vertex indices.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

std::map<std::string, int> index_of(const DualGraph& g) {
  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) idx[g.vertices[i].id] = static_cast<int>(i);
  return idx;
}

}  // namespace

ValidationReport validate(const DualGraph& g) {
  ValidationReport report;
  auto complain = [&](std::string msg) { report.problems.push_back(std::move(msg)); };

  if (g.target_dim < 1) complain("target dimension r must be positive");
  if (g.vertices.empty()) {
    complain("graph has no vertices");
    return report;
  }

  std::set<std::string> ids;
  std::set<std::string> marks;
  for (const auto& v : g.vertices) {
    if (v.id.empty()) complain("vertex with empty id");
    if (!ids.insert(v.id).second) complain("duplicate vertex id '" + v.id + "'");
    if (v.genus != 0 && v.genus != 1)
      complain("vertex '" + v.id + "' has geometric genus outside {0,1}");
    if (v.degree < 0) complain("vertex '" + v.id + "' has negative map degree");
    for (const auto& mk : v.marks)
      if (!marks.insert(mk).second) complain("duplicate mark label '" + mk + "'");
  }

  bool refs_ok = true;
  for (const auto& e : g.edges) {
    if (!ids.count(e.a) || !ids.count(e.b)) {
      complain("edge (" + e.a + "," + e.b + ") references a missing vertex");
      refs_ok = false;
    }
  }
  if (g.elliptic) {
    const auto& br = g.elliptic->branches;
    if (br.empty()) complain("elliptic point with no branches");
    std::set<std::string> seen;
    for (const auto& b : br) {
      if (!ids.count(b)) {
        complain("elliptic branch '" + b + "' is not a vertex");
        refs_ok = false;
        continue;
      }
      if (!seen.insert(b).second) complain("elliptic branches are not pairwise distinct");
      if (g.find(b)->genus != 0) complain("elliptic branch '" + b + "' has positive genus");
    }
    for (const auto& v : g.vertices)
      if (v.genus != 0) complain("vertex '" + v.id + "' has genus 1 alongside an elliptic point");
  }
  if (!refs_ok) return report;

  if (!is_connected(g)) {
    complain("graph is disconnected");
    return report;
  }

  if (g.elliptic) {
    // Edge-only graph must be a forest.
    auto idx = index_of(g);
    Dsu dsu(g.vertices.size());
    for (const auto& e : g.edges) {
      int x = idx[e.a], y = idx[e.b];
      if (e.is_loop() || dsu.find(x) == dsu.find(y)) {
        complain("edge-only graph contains a cycle alongside the elliptic point");
        break;
      }
      dsu.unite(x, y);
    }
  }

  int genus = arithmetic_genus(g);
  if (genus != 1)
    complain("arithmetic genus is " + std::to_string(genus) + ", expected 1");

  return report;
}

void require_valid(const DualGraph& g) {
  auto report = validate(g);
  if (!report.ok()) {
    std::string msg = "invalid dual graph:";
    for (const auto& p : report.problems) msg += " " + p + ";";
    throw std::domain_error(msg);
  }
}

bool is_connected(const DualGraph& g) {
  if (g.vertices.empty()) return false;
  auto idx = index_of(g);
  Dsu dsu(g.vertices.size());
  for (const auto& e : g.edges) dsu.unite(idx.at(e.a), idx.at(e.b));
  if (g.elliptic)
    for (std::size_t i = 1; i < g.elliptic->branches.size(); ++i)
      dsu.unite(idx.at(g.elliptic->branches[0]), idx.at(g.elliptic->branches[i]));
  int root = dsu.find(0);
  for (std::size_t i = 1; i < g.vertices.size(); ++i)
    if (dsu.find(static_cast<int>(i)) != root) return false;
  return true;
}

int arithmetic_genus(const DualGraph& g) {
  if (!is_connected(g)) throw std::domain_error("arithmetic_genus: graph is disconnected");
  int sum_genus = 0;
  for (const auto& v : g.vertices) sum_genus += v.genus;
  int delta = g.elliptic ? g.elliptic->multiplicity() : 0;
  return sum_genus + static_cast<int>(g.edges.size()) + delta -
         (static_cast<int>(g.vertices.size()) - 1);
}

bool subcurve_connected(const DualGraph& g, const std::set<std::string>& verts) {
  if (verts.empty()) return false;
  std::map<std::string, int> idx;
  int i = 0;
  for (const auto& id : verts) idx[id] = i++;
  Dsu dsu(verts.size());
  for (const auto& e : g.edges)
    if (verts.count(e.a) && verts.count(e.b)) dsu.unite(idx[e.a], idx[e.b]);
  if (g.elliptic) {
    int first = -1;
    for (const auto& b : g.elliptic->branches) {
      if (!verts.count(b)) continue;
      if (first < 0)
        first = idx[b];
      else
        dsu.unite(first, idx[b]);
    }
  }
  int root = dsu.find(0);
  for (int j = 1; j < static_cast<int>(verts.size()); ++j)
    if (dsu.find(j) != root) return false;
  return true;
}

int subcurve_genus(const DualGraph& g, const std::set<std::string>& verts) {
  if (!subcurve_connected(g, verts))
    throw std::domain_error("subcurve_genus: induced subcurve is disconnected");
  int sum_genus = 0;
  for (const auto& id : verts) sum_genus += g.find(id)->genus;
  int edges = 0;
  for (const auto& e : g.edges)
    if (verts.count(e.a) && verts.count(e.b)) ++edges;
  int delta = 0;
  if (g.elliptic) {
    int l = g.elliptic->multiplicity();
    int j = 0;
    for (const auto& b : g.elliptic->branches) j += verts.count(b) ? 1 : 0;
    if (j == l)
      delta = l;
    else if (j >= 2)
      delta = j - 1;
  }
  return sum_genus + edges + delta - (static_cast<int>(verts.size()) - 1);
}

int subcurve_distinguished(const DualGraph& g, const std::set<std::string>& verts) {
  int count = 0;
  for (const auto& e : g.edges) {
    bool ina = verts.count(e.a) > 0, inb = verts.count(e.b) > 0;
    if (ina != inb) ++count;
  }
  if (g.elliptic) {
    int l = g.elliptic->multiplicity();
    int j = 0;
    for (const auto& b : g.elliptic->branches) j += verts.count(b) ? 1 : 0;
    if (j > 0 && j < l) ++count;  // the elliptic point lies on both sides
  }
  for (const auto& id : verts) count += static_cast<int>(g.find(id)->marks.size());
  return count;
}

Subcurve core(const DualGraph& g) {
  require_valid(g);
  if (g.elliptic) {
    Subcurve z(g.elliptic->branches);
    std::sort(z.begin(), z.end());
    return z;
  }
  for (const auto& v : g.vertices)
    if (v.genus == 1) return {v.id};
  // Nodal with all genus-0 vertices: peel leaves until only the cycle remains.
  std::set<std::string> alive;
  for (const auto& v : g.vertices) alive.insert(v.id);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& id : std::set<std::string>(alive)) {
      int deg = 0;
      for (const auto& e : g.edges) {
        if (!alive.count(e.a) || !alive.count(e.b)) continue;
        if (e.a == id) ++deg;
        if (e.b == id) ++deg;
      }
      if (deg <= 1) {
        alive.erase(id);
        changed = true;
      }
    }
  }
  if (alive.empty()) throw std::logic_error("core: no cycle found in a genus-one graph");
  return Subcurve(alive.begin(), alive.end());
}

CoreClass core_kind(const DualGraph& g) {
  if (g.elliptic) return {CoreKind::EllipticLFold, g.elliptic->multiplicity()};
  Subcurve z = core(g);
  if (z.size() == 1) {
    const Vertex* v = g.find(z.front());
    if (v->genus == 1) return {CoreKind::SmoothElliptic, 0};
    return {CoreKind::IrreducibleNodal, 0};
  }
  return {CoreKind::Ring, 0};
}

std::string to_string(CoreKind k) {
  switch (k) {
    case CoreKind::SmoothElliptic: return "smooth-elliptic";
    case CoreKind::IrreducibleNodal: return "irreducible-nodal";
    case CoreKind::Ring: return "ring";
    case CoreKind::EllipticLFold: return "elliptic-l-fold";
  }
  return "?";
}

FundamentalDecomposition fundamental_decomposition(const DualGraph& g) {
  FundamentalDecomposition fd;
  fd.core = core(g);
  std::set<std::string> z(fd.core.begin(), fd.core.end());

  std::vector<std::string> rest;
  for (const auto& v : g.vertices)
    if (!z.count(v.id)) rest.push_back(v.id);
  if (rest.empty()) return fd;

  std::map<std::string, int> idx;
  for (std::size_t i = 0; i < rest.size(); ++i) idx[rest[i]] = static_cast<int>(i);
  Dsu dsu(rest.size());
  for (const auto& e : g.edges)
    if (idx.count(e.a) && idx.count(e.b)) dsu.unite(idx[e.a], idx[e.b]);

  std::map<int, Tail> tails;
  for (const auto& id : rest) tails[dsu.find(idx[id])].vertex_set.push_back(id);
  std::map<int, int> attach_count;
  for (const auto& e : g.edges) {
    bool ina = z.count(e.a) > 0, inb = z.count(e.b) > 0;
    if (ina == inb) continue;
    const std::string& outside = ina ? e.b : e.a;
    int comp = dsu.find(idx[outside]);
    tails[comp].attaching_edge = e;
    ++attach_count[comp];
  }
  for (auto& [comp, tail] : tails) {
    if (attach_count[comp] != 1)
      throw std::logic_error(
          "fundamental_decomposition: a tail meets the core in " +
          std::to_string(attach_count[comp]) + " nodes");
    std::sort(tail.vertex_set.begin(), tail.vertex_set.end());
    for (const auto& id : tail.vertex_set)
      if (g.find(id)->genus != 0)
        throw std::logic_error("fundamental_decomposition: tail vertex of positive genus");
    fd.tails.push_back(tail);
  }
  std::sort(fd.tails.begin(), fd.tails.end(),
            [](const Tail& x, const Tail& y) { return x.vertex_set < y.vertex_set; });
  return fd;
}

int distinguished_points(const DualGraph& g, const std::string& vertex_id) {
  const Vertex* v = g.find(vertex_id);
  if (!v) throw std::domain_error("unknown vertex '" + vertex_id + "'");
  int count = static_cast<int>(v->marks.size());
  for (const auto& e : g.edges) {
    if (e.a == vertex_id) ++count;
    if (e.b == vertex_id) ++count;
  }
  if (g.is_branch(vertex_id)) ++count;
  return count;
}

int level(const DualGraph& g) {
  Subcurve z = core(g);
  return subcurve_distinguished(g, std::set<std::string>(z.begin(), z.end()));
}

std::vector<Subcurve> genus_one_subcurves(const DualGraph& g, std::size_t vertex_cap) {
  require_valid(g);
  std::size_t n = g.vertices.size();
  if (n > vertex_cap)
    throw std::domain_error("genus_one_subcurves: graph exceeds the vertex cap");
  std::vector<Subcurve> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    std::set<std::string> verts;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) verts.insert(g.vertices[i].id);
    if (!subcurve_connected(g, verts)) continue;
    if (subcurve_genus(g, verts) != 1) continue;
    out.emplace_back(verts.begin(), verts.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace genusone
