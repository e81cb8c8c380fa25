#include <gtest/gtest.h>

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>

#include "support.hpp"

using namespace dynport;
using testing_support::make_portrait;

namespace {

// Brute force over all injective vertex maps.
std::size_t count_automorphisms_oracle(const Portrait& p) {
  std::vector<Vertex> perm(p.size());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::size_t count = 0;
  do {
    bool ok = true;
    for (Vertex v = 0; v < p.size() && ok; ++v) {
      if (p.in_domain(v) != p.in_domain(perm[v])) ok = false;
      else if (p.in_domain(v) && (perm[p.next(v)] != p.next(perm[v]) || p.weight(v) != p.weight(perm[v])))
        ok = false;
    }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace

TEST(Morphism, ReferencePortraits) {
  struct Row {
    Portrait p;
    std::size_t order;
    std::string name;
  };
  std::vector<Row> rows{
      {make_portrait({"a", "b", "c", "d"}, {{"a", "a"}, {"b", "b"}, {"c", "d"}, {"d", "c"}}), 4, "Z/2 x Z/2"},
      {make_portrait({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "b"}, {"c", "d"}, {"d", "c"}}), 2, "Z/2"},
      {make_portrait({"a", "b", "c", "d"}, {{"a", "a"}, {"b", "c"}, {"c", "d"}, {"d", "c"}}), 1, "trivial"},
      {make_portrait({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "c"}}), 1, "trivial"},
      {make_portrait({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "b"}, {"d", "c"}}), 2, "Z/2"},
      {make_portrait({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}), 4, "Z/4"},
  };
  for (const auto& row : rows) {
    auto group = automorphism_group(row.p);
    auto desc = describe_group(group);
    EXPECT_EQ(desc.order, row.order);
    EXPECT_EQ(desc.name, row.name);
  }
}

TEST(Morphism, AutomorphismCountMatchesBruteForce) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 150; ++i) {
    Portrait p = testing_support::random_portrait(rng, 7);
    auto group = automorphism_group(p);
    EXPECT_EQ(group.size(), count_automorphisms_oracle(p));
  }
}

TEST(Morphism, GroupAxiomsProperty) {
  std::mt19937_64 rng(100);
  for (int i = 0; i < 60; ++i) {
    auto p = std::make_shared<const Portrait>(testing_support::random_portrait(rng, 7));
    auto group = automorphism_group(*p);
    ASSERT_FALSE(group.empty());
    // Identity first.
    for (Vertex v = 0; v < p->size(); ++v) EXPECT_EQ(group.front()(v), v);
    std::set<std::vector<Vertex>> elements;
    for (const auto& g : group) elements.insert(g.map);
    for (const auto& g : group) {
      EXPECT_TRUE(is_morphism(*p, *p, g.map));
      EXPECT_TRUE(elements.count(inverse(g).map));
      for (const auto& h : group) EXPECT_TRUE(elements.count(compose(g, h).map));
    }
    // Lagrange: orders of elements divide the group order.
    auto desc = describe_group(group);
    EXPECT_EQ(desc.order, group.size());
    if (desc.cyclic) { EXPECT_TRUE(desc.abelian); }
  }
}

TEST(Morphism, HomAndWeights) {
  Portrait fixed = make_portrait({"x"}, {{"x", "x"}});
  Portrait two = make_portrait({"a", "b"}, {{"a", "a"}, {"b", "b"}});
  EXPECT_EQ(hom(fixed, two).size(), 2u);
  EXPECT_EQ(hom(two, fixed).size(), 0u);  // morphisms are injective
  Portrait heavy = make_portrait({"x"}, {{"x", "x"}}, {{"x", 2}});
  EXPECT_EQ(hom(heavy, two).size(), 0u);
  EXPECT_EQ(hom(fixed, make_portrait({"y"}, {{"y", "y"}}, {{"y", 3}})).size(), 1u);
  // An unmapped vertex may go anywhere.
  Portrait loose = make_portrait({"u"}, {});
  EXPECT_EQ(hom(loose, two).size(), 2u);
}

TEST(Morphism, IsomorphismIsSymmetric) {
  Portrait p = make_portrait({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "b"}}, {{"a", 2}});
  Portrait q = make_portrait({"z", "y", "x"}, {{"z", "y"}, {"y", "z"}, {"x", "z"}}, {{"x", 2}});
  EXPECT_TRUE(isomorphic(p, q));
  EXPECT_TRUE(isomorphic(q, p));
  auto iso = isomorphisms(p, q);
  ASSERT_EQ(iso.size(), 1u);
  EXPECT_EQ(q.name(iso[0](p.at("a"))), "x");
  EXPECT_FALSE(isomorphic(p, make_portrait({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "b"}})));
}

TEST(Morphism, SubportraitAndOrder) {
  Portrait p = make_portrait({"a", "b", "c"}, {{"a", "b"}, {"b", "b"}, {"c", "b"}}, {{"a", 2}});
  EXPECT_TRUE(is_subportrait(make_portrait({"a", "b"}, {{"a", "b"}}), p));
  EXPECT_TRUE(is_subportrait(make_portrait({"b"}, {}), p));
  EXPECT_FALSE(is_subportrait(make_portrait({"b", "c"}, {{"b", "c"}}), p));
  EXPECT_FALSE(is_subportrait(make_portrait({"a", "b"}, {{"a", "b"}}, {{"a", 3}}), p));
  // Adding arrows or weights moves up in the order.
  Portrait bare = make_portrait({"a", "b"}, {{"a", "b"}});
  Portrait more = make_portrait({"a", "b"}, {{"a", "b"}, {"b", "b"}}, {{"a", 2}});
  EXPECT_TRUE(ge(more, bare));
  EXPECT_FALSE(ge(bare, more));
  EXPECT_TRUE(ge(bare, bare));
}

TEST(Morphism, DescribeGroupNames) {
  using Perm = std::vector<Vertex>;
  // Z/2 x Z/4 acting on 2 + 4 points.
  std::vector<Perm> elements;
  for (Vertex a = 0; a < 2; ++a)
    for (Vertex b = 0; b < 4; ++b) {
      Perm g(6);
      for (Vertex i = 0; i < 2; ++i) g[i] = (i + a) % 2;
      for (Vertex i = 0; i < 4; ++i) g[2 + i] = 2 + (i + b) % 4;
      elements.push_back(g);
    }
  auto d = describe_group(elements);
  EXPECT_EQ(d.order, 8u);
  EXPECT_FALSE(d.cyclic);
  EXPECT_EQ(d.name, "Z/2 x Z/4");
  // S_3 on three points.
  std::vector<Perm> s3;
  Perm g{0, 1, 2};
  do s3.push_back(g);
  while (std::next_permutation(g.begin(), g.end()));
  auto e = describe_group(s3);
  EXPECT_FALSE(e.abelian);
  EXPECT_EQ(e.name, "non-abelian of order 6");
  // Z/2 x Z/3 is cyclic.
  std::vector<Perm> c6;
  for (Vertex a = 0; a < 2; ++a)
    for (Vertex b = 0; b < 3; ++b) c6.push_back({(0 + a) % 2, (1 + a) % 2, 2 + b % 3, 2 + (1 + b) % 3, 2 + (2 + b) % 3});
  EXPECT_EQ(describe_group(c6).name, "Z/6");
}
