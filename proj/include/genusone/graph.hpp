#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace genusone {

/// One irreducible component of the domain curve.
struct Vertex {
  std::string id;
  int genus = 0;   // geometric genus, 0 or 1
  int degree = 0;  // degree of the map restricted to this component
  std::vector<std::string> marks;
  bool operator==(const Vertex&) const = default;
};

/// A node of the curve: an unordered pair of components, self-loop allowed.
struct Edge {
  std::string a, b;  // kept with a <= b
  Edge() = default;
  Edge(std::string x, std::string y);
  bool is_loop() const { return a == b; }
  bool operator==(const Edge&) const = default;
};
bool operator<(const Edge& lhs, const Edge& rhs);

/// The unique elliptic l-fold point, l = number of branches.
/// l = 1 is a cusp on a single component, l = 2 a tacnode, and so on.
struct EllipticPoint {
  std::vector<std::string> branches;  // pairwise distinct genus-0 vertices
  int multiplicity() const { return static_cast<int>(branches.size()); }
  bool operator==(const EllipticPoint&) const = default;
};

/// A connected set of components, stored as sorted vertex ids.
using Subcurve = std::vector<std::string>;

/// Decorated dual graph of a pointed genus-one map to P^r.
struct DualGraph {
  int target_dim = 1;  // r
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::optional<EllipticPoint> elliptic;

  /// Sort vertices by id, canonicalize and sort edges, sort marks and branches.
  void normalize();

  const Vertex* find(const std::string& id) const;
  Vertex* find(const std::string& id);
  bool has_vertex(const std::string& id) const;
  bool is_branch(const std::string& id) const;

  int total_degree() const;
  int mark_count() const;
  std::vector<std::string> mark_labels() const;  // sorted

  bool operator==(const DualGraph&) const = default;
};

struct ValidationReport {
  std::vector<std::string> problems;
  bool ok() const { return problems.empty(); }
};

/// Total check of every structural invariant; never throws.
ValidationReport validate(const DualGraph& g);

/// Throws std::domain_error when validate() reports a problem.
void require_valid(const DualGraph& g);

/// Connectivity, where the elliptic point also joins its branches.
bool is_connected(const DualGraph& g);

/// Sum of geometric genera + #edges + delta - (#vertices - 1),
/// delta = elliptic multiplicity when the elliptic point is present.
int arithmetic_genus(const DualGraph& g);

/// Genus of the induced subcurve. A proper subset of the elliptic branches
/// meets at an ordinary crossing and contributes j - 1 instead of l.
/// Requires the induced subcurve to be connected.
int subcurve_genus(const DualGraph& g, const std::set<std::string>& verts);

bool subcurve_connected(const DualGraph& g, const std::set<std::string>& verts);

/// Crossing nodes + marks of the induced subcurve; the elliptic point counts
/// as one crossing when the subset contains some but not all branches.
int subcurve_distinguished(const DualGraph& g, const std::set<std::string>& verts);

/// The minimal elliptic subcurve Z: branches of the elliptic point, or the
/// genus-1 vertex, or the unique cycle.
Subcurve core(const DualGraph& g);

enum class CoreKind { SmoothElliptic, IrreducibleNodal, Ring, EllipticLFold };
struct CoreClass {
  CoreKind kind;
  int multiplicity = 0;  // set for EllipticLFold
};
CoreClass core_kind(const DualGraph& g);
std::string to_string(CoreKind k);

struct Tail {
  Subcurve vertex_set;
  Edge attaching_edge;  // one endpoint in the core
};

/// C = Z u R_1 u ... u R_k, each R_i a rational tree meeting Z in one node.
struct FundamentalDecomposition {
  Subcurve core;
  std::vector<Tail> tails;
};
FundamentalDecomposition fundamental_decomposition(const DualGraph& g);

/// Marks + node incidences (self-loop counts twice) + 1 if on the elliptic point.
int distinguished_points(const DualGraph& g, const std::string& vertex_id);

/// Distinguished points of the core: attaching nodes plus marks on core
/// vertices. Internal singularities of the core are not counted.
int level(const DualGraph& g);

/// Exhaustive enumeration of connected arithmetic genus one subcurves.
std::vector<Subcurve> genus_one_subcurves(const DualGraph& g,
                                          std::size_t vertex_cap = 16);

}  // namespace genusone
