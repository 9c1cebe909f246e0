#pragma once

#include <compare>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "genusone/graph.hpp"
#include "genusone/stability.hpp"

namespace genusone {

using Rational = boost::multiprecision::cpp_rational;

/// One rational tail of a boundary component: its map degree and the marks
/// it carries.
struct TailSpec {
  int degree = 0;
  std::vector<std::string> marks;  // sorted
  auto operator<=>(const TailSpec&) const = default;
};

/// Principal component, or a boundary component S_{d_1..d_k, j, alpha}.
/// Canonical form: tails sorted by (degree descending, marks); two
/// descriptors are equal iff their canonical forms are.
struct ComponentDescriptor {
  bool principal = false;
  std::vector<TailSpec> tails;
  std::vector<std::string> core_marks;  // sorted, size j
  int k() const { return static_cast<int>(tails.size()); }
  int j() const { return static_cast<int>(core_marks.size()); }
  void canonicalize();
  auto operator<=>(const ComponentDescriptor&) const = default;
};

/// The principal descriptor plus every boundary descriptor with
/// m+1 <= k+j and k <= min(r,d), deduplicated, in deterministic order.
std::vector<ComponentDescriptor> enumerate_components(const StabilityParams& params);

/// Principal: d(r+1) + n. Boundary:
/// (k+j) + sum_i [d_i(r+1) + r - 2 + m_i] - (k-1)r, m_i = marks on tail i.
int component_dimension(const ComponentDescriptor& desc, const StabilityParams& params);

/// Smooth genus-one vertex with j marks and k nodally attached tails.
DualGraph generic_element_graph(const ComponentDescriptor& desc,
                                const StabilityParams& params);

/// Tangent directions of the non-contracted branches at the attaching points.
struct TangentData {
  std::vector<std::vector<Rational>> vectors;
};

/// Generic mode: tangents are dependent iff there are more of them than r.
bool is_smoothable(const DualGraph& g);
bool is_smoothable(const DualGraph& g, const TangentData& tangents);

/// Rank of a rational matrix by Gaussian elimination.
int rational_rank(std::vector<std::vector<Rational>> rows);

/// Least m with a single irreducible component.
int irreducibility_threshold(int n, int r, int d);

enum class SmoothnessCertificate { KnownSmooth, NotCovered };
std::string to_string(SmoothnessCertificate cert);

/// known-smooth iff d+n <= m <= 5.
SmoothnessCertificate smoothness_certificate(int m, int n, int r, int d);

}  // namespace genusone
