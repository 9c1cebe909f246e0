#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "genusone/components.hpp"
#include "genusone/graph.hpp"
#include "genusone/stability.hpp"
#include "test_util.hpp"

using namespace genusone;
using testutil::elliptic_point_graph;
using testutil::elliptic_with_tails;

namespace {

std::vector<int> partition_of(const ComponentDescriptor& d) {
  std::vector<int> out;
  for (const auto& t : d.tails) out.push_back(t.degree);
  return out;
}

}  // namespace

TEST_CASE("plane cubics component enumeration") {
  auto m0 = enumerate_components(StabilityParams{0, 0, 2, 3});
  REQUIRE(m0.size() == 3);
  CHECK(m0[0].principal);
  CHECK(partition_of(m0[1]) == std::vector<int>{3});
  CHECK(partition_of(m0[2]) == std::vector<int>{2, 1});

  auto m2 = enumerate_components(StabilityParams{2, 0, 2, 3});
  REQUIRE(m2.size() == 1);
  CHECK(m2[0].principal);

  auto line = enumerate_components(StabilityParams{0, 0, 1, 2});
  REQUIRE(line.size() == 2);
  CHECK(partition_of(line[1]) == std::vector<int>{2});
}

TEST_CASE("plane cubics dimensions") {
  StabilityParams p{0, 0, 2, 3};
  auto descs = enumerate_components(p);
  REQUIRE(descs.size() == 3);
  CHECK(component_dimension(descs[0], p) == 9);
  CHECK(component_dimension(descs[1], p) == 10);
  CHECK(component_dimension(descs[2], p) == 9);
}

TEST_CASE("generic element graphs") {
  StabilityParams p{0, 0, 2, 3};
  auto descs = enumerate_components(p);
  REQUIRE(descs.size() == 3);

  DualGraph principal = generic_element_graph(descs[0], p);
  CHECK(principal.vertices.size() == 1);
  CHECK(principal.vertices[0].genus == 1);
  CHECK(principal.vertices[0].degree == 3);

  DualGraph u1 = generic_element_graph(descs[1], p);
  CHECK(u1 == elliptic_with_tails({3}));

  DualGraph u2 = generic_element_graph(descs[2], p);
  CHECK(u2 == elliptic_with_tails({2, 1}));
}

TEST_CASE("enumeration/reduction consistency: stability range is [0, k+j-1]") {
  for (int n = 0; n <= 2; ++n)
    for (int d = 1; d <= 3; ++d)
      for (int r = 1; r <= 3; ++r) {
        StabilityParams p0{0, n, r, d};
        for (const auto& desc : enumerate_components(p0)) {
          if (desc.principal) continue;
          DualGraph g = generic_element_graph(desc, p0);
          auto interval = stability_interval(g, r, d);
          REQUIRE_FALSE(interval.empty);
          CHECK(interval.lower == 0);
          REQUIRE(interval.upper.has_value());
          CHECK(*interval.upper == desc.k() + desc.j() - 1);
        }
      }
}

TEST_CASE("dedup: permuting equal-degree tails changes nothing") {
  // Brute force over all labeled assignments: descriptors built from labeled
  // tail orders collapse to canonical forms, and the enumeration contains
  // each exactly once.
  for (int n = 0; n <= 4; ++n) {
    StabilityParams p{0, n, 3, 3};
    auto listed = enumerate_components(p);
    std::set<ComponentDescriptor> canon(listed.begin(), listed.end());
    CHECK(canon.size() == listed.size());  // no duplicates in output

    std::vector<std::string> marks;
    for (int i = 1; i <= n; ++i) marks.push_back("p" + std::to_string(i));
    std::vector<std::vector<int>> parts = {{3}, {2, 1}, {1, 1, 1}};
    std::set<ComponentDescriptor> rebuilt;
    for (const auto& part : parts) {
      int k = static_cast<int>(part.size());
      std::vector<int> perm(part.begin(), part.end());
      std::sort(perm.begin(), perm.end());
      do {
        std::vector<int> where(n, 0);
        while (true) {
          ComponentDescriptor desc;
          for (int deg : perm) desc.tails.push_back({deg, {}});
          for (int i = 0; i < n; ++i) {
            if (where[i] == k)
              desc.core_marks.push_back(marks[i]);
            else
              desc.tails[where[i]].marks.push_back(marks[i]);
          }
          desc.canonicalize();
          rebuilt.insert(desc);
          int pos = 0;
          while (pos < n && where[pos] == k) where[pos++] = 0;
          if (pos == n) break;
          ++where[pos];
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    std::set<ComponentDescriptor> boundary(listed.begin() + 1, listed.end());
    CHECK(rebuilt == boundary);
  }
}

TEST_CASE("component count is monotone non-increasing in m") {
  for (int n = 0; n <= 2; ++n)
    for (int r = 1; r <= 3; ++r)
      for (int d = 1; d <= 3; ++d) {
        std::size_t prev = SIZE_MAX;
        int cap = std::min(r, d) + n;
        for (int m = 0; m <= cap + 2; ++m) {
          std::size_t count = enumerate_components(StabilityParams{m, n, r, d}).size();
          CHECK(count <= prev);
          if (m >= cap) CHECK(count == 1);
          prev = count;
        }
      }
}

TEST_CASE("smoothability: plane cubic verdicts") {
  CHECK(is_smoothable(elliptic_point_graph({3})));          // non-constant core
  CHECK(is_smoothable(elliptic_with_tails({1, 1, 1})));     // l=3 > r=2
  CHECK_FALSE(is_smoothable(elliptic_with_tails({2, 1})));  // l=2 <= r=2
}

TEST_CASE("smoothability with explicit tangents") {
  DualGraph u2 = elliptic_with_tails({2, 1});
  TangentData dependent{{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}};
  CHECK(is_smoothable(u2, dependent));
  TangentData independent{{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
  CHECK_FALSE(is_smoothable(u2, independent));

  TangentData zero{{{Rational(0), Rational(0)}, {Rational(1), Rational(1)}}};
  CHECK_THROWS_AS((void)is_smoothable(u2, zero), std::invalid_argument);
  TangentData wrong_count{{{Rational(1), Rational(0)}}};
  CHECK_THROWS_AS((void)is_smoothable(u2, wrong_count), std::invalid_argument);

  // Never stable for any m: a constant rational tail with 2 points.
  DualGraph bad = elliptic_with_tails({0, 3});
  CHECK_THROWS_AS((void)is_smoothable(bad), std::domain_error);
}

TEST_CASE("the contracted subcurve can exceed the core") {
  // Z -- A(deg 0, 2 extra marks... no: 2 tail edges) -- two positive tails.
  DualGraph g = elliptic_with_tails({0});
  g.vertices.push_back({"S1", 0, 1, {}});
  g.vertices.push_back({"S2", 0, 1, {}});
  g.vertices.push_back({"S3", 0, 1, {}});
  g.edges.emplace_back("R1", "S1");
  g.edges.emplace_back("R1", "S2");
  g.edges.emplace_back("Z", "S3");
  g.normalize();
  REQUIRE(validate(g).ok());
  // E = {Z, R1}, attachments S1,S2,S3: l = 3 > r = 2.
  CHECK(is_smoothable(g));
  g.target_dim = 3;
  CHECK_FALSE(is_smoothable(g));
}

TEST_CASE("smoothability descriptors: generic boundary elements sit off the principal component") {
  for (int d = 1; d <= 3; ++d)
    for (int r = 1; r <= 3; ++r) {
      StabilityParams p{0, 0, r, d};
      for (const auto& desc : enumerate_components(p)) {
        if (desc.principal) continue;
        DualGraph g = generic_element_graph(desc, p);
        CHECK_FALSE(is_smoothable(g));  // k <= r tails: independent tangents
        // Explicit dependent tangents smooth it whenever l >= 2.
        if (desc.k() >= 2) {
          TangentData dep;
          for (int i = 0; i < desc.k(); ++i)
            dep.vectors.push_back(std::vector<Rational>(r, Rational(1)));
          CHECK(is_smoothable(g, dep));
        }
      }
    }
}

TEST_CASE("rational rank matches the minor oracle") {
  std::mt19937 rng(41);
  std::uniform_int_distribution<int> num(-3, 3), den(1, 3), size(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = size(rng), cols = size(rng);
    std::vector<std::vector<Rational>> m(rows, std::vector<Rational>(cols));
    for (auto& row : m)
      for (auto& x : row) x = Rational(num(rng), den(rng));
    CHECK(rational_rank(m) == testutil::minor_rank(m));
  }
}

TEST_CASE("irreducibility thresholds") {
  CHECK(irreducibility_threshold(0, 2, 3) == 2);
  CHECK(irreducibility_threshold(0, 1, 1) == 1);
  CHECK(irreducibility_threshold(1, 2, 3) <= 3);
}

TEST_CASE("smoothness certificates") {
  CHECK(smoothness_certificate(4, 1, 3, 3) == SmoothnessCertificate::KnownSmooth);
  CHECK(smoothness_certificate(6, 0, 5, 6) == SmoothnessCertificate::NotCovered);
  CHECK(smoothness_certificate(2, 0, 2, 3) == SmoothnessCertificate::NotCovered);
}
