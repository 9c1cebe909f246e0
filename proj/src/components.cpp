#include "genusone/components.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace genusone {

void ComponentDescriptor::canonicalize() {
  std::sort(core_marks.begin(), core_marks.end());
  for (auto& t : tails) std::sort(t.marks.begin(), t.marks.end());
  std::sort(tails.begin(), tails.end(), [](const TailSpec& x, const TailSpec& y) {
    if (x.degree != y.degree) return x.degree > y.degree;
    return x.marks < y.marks;
  });
}

namespace {

// Unordered partitions of d into positive parts, non-increasing.
void partitions_rec(int remaining, int max_part, std::vector<int>& acc,
                    std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(acc);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    acc.push_back(part);
    partitions_rec(remaining - part, part, acc, out);
    acc.pop_back();
  }
}

std::vector<std::vector<int>> partitions(int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  partitions_rec(d, d, acc, out);
  return out;
}

std::vector<std::string> default_marks(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("p" + std::to_string(i));
  return out;
}

}  // namespace

std::vector<ComponentDescriptor> enumerate_components(const StabilityParams& params) {
  if (params.d < 1 || params.r < 1)
    throw std::invalid_argument("enumerate_components: need d >= 1 and r >= 1");
  if (params.m < 0 || params.n < 0)
    throw std::invalid_argument("enumerate_components: need m >= 0 and n >= 0");

  std::set<ComponentDescriptor> boundary;
  const auto marks = default_marks(params.n);
  const int kmax = std::min(params.r, params.d);

  for (const auto& partition : partitions(params.d)) {
    int k = static_cast<int>(partition.size());
    if (k > kmax) continue;
    // Distribute the n marks: each mark goes to the core (index k) or to one
    // of the k tails.
    std::vector<int> where(params.n, 0);
    while (true) {
      ComponentDescriptor desc;
      for (int part : partition) desc.tails.push_back({part, {}});
      for (int i = 0; i < params.n; ++i) {
        if (where[i] == k)
          desc.core_marks.push_back(marks[i]);
        else
          desc.tails[where[i]].marks.push_back(marks[i]);
      }
      if (desc.k() + desc.j() >= params.m + 1) {
        desc.canonicalize();
        boundary.insert(desc);
      }
      // Next assignment.
      int pos = 0;
      while (pos < params.n && where[pos] == k) where[pos++] = 0;
      if (pos == params.n) break;
      ++where[pos];
    }
  }

  std::vector<ComponentDescriptor> out;
  ComponentDescriptor principal;
  principal.principal = true;
  out.push_back(principal);

  std::vector<ComponentDescriptor> rest(boundary.begin(), boundary.end());
  std::sort(rest.begin(), rest.end(), [](const ComponentDescriptor& x,
                                         const ComponentDescriptor& y) {
    if (x.k() != y.k()) return x.k() < y.k();
    return std::tie(x.tails, x.core_marks) < std::tie(y.tails, y.core_marks);
  });
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

int component_dimension(const ComponentDescriptor& desc, const StabilityParams& params) {
  if (desc.principal) return params.d * (params.r + 1) + params.n;
  int sum = 0;
  for (const auto& t : desc.tails)
    sum += t.degree * (params.r + 1) + params.r - 2 + static_cast<int>(t.marks.size());
  return (desc.k() + desc.j()) + sum - (desc.k() - 1) * params.r;
}

DualGraph generic_element_graph(const ComponentDescriptor& desc,
                                const StabilityParams& params) {
  DualGraph g;
  g.target_dim = params.r;
  if (desc.principal) {
    Vertex z;
    z.id = "Z";
    z.genus = 1;
    z.degree = params.d;
    z.marks = default_marks(params.n);
    g.vertices.push_back(z);
    g.normalize();
    require_valid(g);
    return g;
  }
  int total = 0;
  for (const auto& t : desc.tails) {
    if (t.degree < 1) throw std::invalid_argument("boundary tail of degree < 1");
    total += t.degree;
  }
  if (total != params.d)
    throw std::invalid_argument("generic_element_graph: partition does not sum to d");

  Vertex z;
  z.id = "Z";
  z.genus = 1;
  z.degree = 0;
  z.marks = desc.core_marks;
  g.vertices.push_back(z);
  for (std::size_t i = 0; i < desc.tails.size(); ++i) {
    Vertex tail;
    tail.id = "R" + std::to_string(i + 1);
    tail.degree = desc.tails[i].degree;
    tail.marks = desc.tails[i].marks;
    g.vertices.push_back(tail);
    g.edges.emplace_back("Z", tail.id);
  }
  g.normalize();
  require_valid(g);
  return g;
}

int rational_rank(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < rows.size() && rows[sel][col] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[pivot_row]);
    for (std::size_t i = pivot_row + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      Rational factor = rows[i][col] / rows[pivot_row][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[i][c] -= factor * rows[pivot_row][c];
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

namespace {

// Largest connected all-degree-0 subcurve containing the core, and the
// number of its attaching edges.
int contracted_subcurve_attachments(const DualGraph& g) {
  Subcurve z = core(g);
  std::set<std::string> subcurve(z.begin(), z.end());
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& e : g.edges) {
      bool ina = subcurve.count(e.a) > 0, inb = subcurve.count(e.b) > 0;
      if (ina == inb) continue;
      const std::string& outside = ina ? e.b : e.a;
      if (g.find(outside)->degree == 0) {
        subcurve.insert(outside);
        grew = true;
      }
    }
  }
  int attach = 0;
  for (const auto& e : g.edges) {
    bool ina = subcurve.count(e.a) > 0, inb = subcurve.count(e.b) > 0;
    if (ina != inb) ++attach;
  }
  return attach;
}

void require_stable_for_some_m(const DualGraph& g) {
  auto interval = stability_interval(g, g.target_dim, g.total_degree());
  if (interval.empty)
    throw std::domain_error("is_smoothable: graph is not m-stable for any m");
}

}  // namespace

bool is_smoothable(const DualGraph& g) {
  require_valid(g);
  require_stable_for_some_m(g);
  Subcurve z = core(g);
  for (const auto& id : z)
    if (g.find(id)->degree > 0) return true;
  int l = contracted_subcurve_attachments(g);
  return l > g.target_dim;  // generic tangents: dependent iff more than r
}

bool is_smoothable(const DualGraph& g, const TangentData& tangents) {
  require_valid(g);
  require_stable_for_some_m(g);
  Subcurve z = core(g);
  for (const auto& id : z)
    if (g.find(id)->degree > 0) return true;
  int l = contracted_subcurve_attachments(g);
  if (static_cast<int>(tangents.vectors.size()) != l)
    throw std::invalid_argument("is_smoothable: expected " + std::to_string(l) +
                                " tangent vectors");
  for (const auto& v : tangents.vectors) {
    if (static_cast<int>(v.size()) != g.target_dim)
      throw std::invalid_argument("is_smoothable: tangent vector of wrong length");
    bool nonzero = false;
    for (const auto& x : v)
      if (x != 0) nonzero = true;
    if (!nonzero) throw std::invalid_argument("is_smoothable: zero tangent vector");
  }
  return rational_rank(tangents.vectors) < l;
}

int irreducibility_threshold(int n, int r, int d) {
  if (d < 1 || r < 1) throw std::invalid_argument("irreducibility_threshold: d, r >= 1");
  int cap = std::min(r, d) + n;
  for (int m = 0; m <= cap; ++m) {
    StabilityParams params{m, n, r, d};
    if (enumerate_components(params).size() == 1) return m;
  }
  return cap;  // unreachable: at m = min(r,d)+n every boundary constraint fails
}

std::string to_string(SmoothnessCertificate cert) {
  return cert == SmoothnessCertificate::KnownSmooth ? "known-smooth" : "not-covered";
}

SmoothnessCertificate smoothness_certificate(int m, int n, int r, int d) {
  (void)r;
  if (d + n <= m && m <= 5) return SmoothnessCertificate::KnownSmooth;
  return SmoothnessCertificate::NotCovered;
}

}  // namespace genusone
