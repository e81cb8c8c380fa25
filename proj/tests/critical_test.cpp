#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace dynport;
using testing_support::make_portrait;

TEST(Critical, CriticallyGeneratedSubportrait) {
  Portrait p = make_portrait({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}, {"d", "c"}},
                             {{"a", 2}});
  Portrait q = critically_generated_subportrait(p);
  EXPECT_EQ(q, make_portrait({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "c"}}, {{"a", 2}}));
  EXPECT_FALSE(is_critically_generated(p));
  EXPECT_TRUE(is_critically_generated(q));
  EXPECT_TRUE(critically_generated_subportrait(make_portrait({"a"}, {{"a", "a"}})).empty());
}

TEST(Critical, CompleteAndPrimitive) {
  Portrait p = make_portrait({"c1", "c2", "x"}, {{"c1", "x"}, {"c2", "x"}, {"x", "x"}},
                             {{"c1", 2}, {"c2", 2}});
  EXPECT_TRUE(is_complete_critical(p, 2));
  EXPECT_FALSE(is_complete_critical(p, 3));
  EXPECT_FALSE(is_critically_primitive(p));  // x is mapped with weight 1
  Portrait f = frame(p, 2);
  EXPECT_EQ(f, make_portrait({"c1", "c2", "x"}, {{"c1", "x"}, {"c2", "x"}}, {{"c1", 2}, {"c2", 2}}));
  EXPECT_TRUE(is_critically_primitive(f));
  EXPECT_THROW(frame(p, 3), DomainError);
}

TEST(Critical, FrameIsPrimitiveProperty) {
  for (unsigned d : {2u, 3u})
    for (const auto& p : enumerate_primitive_critical_portraits(d)) {
      EXPECT_TRUE(is_critically_primitive(p));
      EXPECT_EQ(ramification_total(p), 2ULL * d - 2);
      // A primitive complete critical portrait equals its own frame.
      EXPECT_EQ(frame(p, d), p);
    }
}

TEST(Critical, EnumerationCountsMatchCanonicalFormOracle) {
  for (unsigned d : {2u, 3u}) {
    auto list = enumerate_primitive_critical_portraits(d);
    std::set<std::vector<std::tuple<long, long, unsigned>>> forms;
    for (const auto& p : list) forms.insert(testing_support::canonical_form(p));
    EXPECT_EQ(forms.size(), list.size()) << "duplicates at d=" << d;
    // Independent enumeration: every assignment of the critical vertices
    // to targets among themselves or fresh vertices, reduced by canonical
    // form.
    std::set<std::vector<std::tuple<long, long, unsigned>>> oracle;
    std::vector<std::vector<unsigned>> partitions;
    std::vector<unsigned> cur;
    detail::weight_partitions(2 * d - 2, 2 * d - 2, cur, partitions);
    for (const auto& w : partitions) {
      const std::size_t k = w.size();
      std::vector<std::size_t> t(k, 0);
      while (true) {
        std::vector<std::string> names;
        for (std::size_t i = 0; i < 2 * k; ++i) names.push_back("v" + std::to_string(i));
        std::vector<std::pair<std::string, std::string>> edges;
        std::vector<std::pair<std::string, long long>> ws;
        std::set<std::size_t> used;
        for (std::size_t i = 0; i < k; ++i) {
          edges.emplace_back(names[i], names[t[i]]);
          ws.emplace_back(names[i], w[i]);
          used.insert(t[i]);
        }
        std::vector<std::string> keep(names.begin(), names.begin() + k);
        for (std::size_t u : used)
          if (u >= k) keep.push_back(names[u]);
        oracle.insert(testing_support::canonical_form(Portrait::build(keep, edges, ws)));
        std::size_t i = 0;
        while (i < k && ++t[i] == 2 * k) t[i++] = 0;
        if (i == k) break;
      }
    }
    EXPECT_EQ(oracle, forms) << "d=" << d;
  }
  EXPECT_EQ(enumerate_primitive_critical_portraits(2).size(), 9u);
  EXPECT_EQ(enumerate_primitive_critical_portraits(3).size(), 124u);
  EXPECT_THROW(enumerate_primitive_critical_portraits(4), DomainError);
}
