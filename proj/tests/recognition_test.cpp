#include <gtest/gtest.h>

#include "dimspec/errors.hpp"
#include "dimspec/oracle.hpp"
#include "dimspec/recognition.hpp"
#include "fixtures.hpp"

namespace dimspec {
namespace {

using testing::dim9_graph;

TEST(IndependentSetTest, Basics) {
  const std::vector<Vertex> s = {7, 8, 9};
  EXPECT_TRUE(is_independent_set(dim9_graph(), s));
  const std::vector<Vertex> both = {1, 2};
  EXPECT_FALSE(is_independent_set(testing::k2(), both));
  EXPECT_TRUE(is_independent_set(testing::k2(), {}));
  const std::vector<Vertex> bad = {3};
  EXPECT_THROW(is_independent_set(testing::k2(), bad), InputError);
}

TEST(InducedMatchingTest, Basics) {
  const EdgeSet m = {{1, 2}, {3, 4}, {5, 6}};
  EXPECT_TRUE(is_induced_matching(dim9_graph(), m));
  const EdgeSet shared = {{1, 2}, {2, 3}};
  EXPECT_FALSE(is_induced_matching(testing::path_graph(3), shared));
  const EdgeSet joined = {{1, 2}, {3, 4}};
  EXPECT_FALSE(is_induced_matching(testing::path_graph(4), joined));
  const EdgeSet missing = {{1, 3}};
  EXPECT_THROW(is_induced_matching(testing::path_graph(4), missing), InputError);
}

TEST(IsDimTest, Basics) {
  const EdgeSet m = {{1, 2}, {3, 4}, {5, 6}};
  EXPECT_TRUE(is_dim(dim9_graph(), m));
  const EdgeSet single = {{1, 2}};
  EXPECT_TRUE(is_dim(testing::k2(), single));
  const Graph c4 = testing::cycle_graph(4);
  for (const Edge& e : c4.edges()) {
    const EdgeSet one = {e};
    EXPECT_FALSE(is_dim(c4, one));
  }
  EXPECT_FALSE(is_dim(c4, {}));
  EXPECT_TRUE(is_dim(Graph::null_graph(3), {}));
  const EdgeSet missing = {{1, 3}};
  EXPECT_THROW(is_dim(c4, missing), InputError);
}

TEST(RecognizeTest, ReferenceComplete) {
  const auto cert = recognize_cdim(generate_cdim(3, 3));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->matching, (EdgeSet{{1, 2}, {3, 4}, {5, 6}}));
  EXPECT_EQ(cert->independent, (std::vector<Vertex>{7, 8, 9}));
  EXPECT_TRUE(cert->complete);
  EXPECT_TRUE(verify_certificate(generate_cdim(3, 3), *cert));
}

TEST(RecognizeTest, Rejections) {
  EXPECT_FALSE(recognize_cdim(testing::cycle_graph(4)));
  EXPECT_FALSE(recognize_cdim(testing::star_graph(3)));
  EXPECT_FALSE(recognize_cdim(dim9_graph()));
  EXPECT_FALSE(recognize_cdim(Graph::null_graph(4)));
  EXPECT_FALSE(recognize_cdim(testing::k2()));  // S would be empty
}

TEST(RecognizeTest, TriangleTakesLeastEdge) {
  const auto cert = recognize_cdim(testing::complete_graph(3));
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->matching, (EdgeSet{{1, 2}}));
  const auto spectral = recognize_cdim_spectral(testing::complete_graph(3));
  ASSERT_TRUE(spectral);
  EXPECT_EQ(spectral->matching, cert->matching);
}

// Relabelled K_{M,S}: the recognizers must not depend on the generator's labels.
TEST(RecognizeTest, PermutedLabels) {
  const Graph base = generate_cdim(2, 4);
  const std::vector<Vertex> perm = {5, 8, 1, 3, 7, 2, 4, 6};
  EdgeSet relabelled;
  for (const Edge& e : base.edges()) relabelled.push_back(make_edge(perm[e.u - 1], perm[e.v - 1]));
  const Graph g(8, relabelled);
  const auto cert = recognize_cdim(g);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->matching, (EdgeSet{{1, 3}, {5, 8}}));
  EXPECT_EQ(recognize_cdim_spectral(g)->matching, cert->matching);
}

TEST(RecognizeTest, RegularCase) {
  // n = 4m - 1 makes K_{M,S} regular; the degree partition is useless.
  const Graph g = generate_cdim(2, 3);
  const auto cert = recognize_cdim(g);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->matching, (EdgeSet{{1, 2}, {3, 4}}));
  const auto spectral = recognize_cdim_spectral(g);
  ASSERT_TRUE(spectral);
  EXPECT_EQ(spectral->matching, cert->matching);
}

TEST(RecognizeTest, RecoversGeneratedMatchings) {
  for (int m = 1; m <= 6; ++m) {
    for (int s = 1; s <= 6; ++s) {
      const Graph g = generate_cdim(m, s);
      EdgeSet expected;
      for (int i = 1; i <= m; ++i) expected.push_back({2 * i - 1, 2 * i});
      const auto cert = recognize_cdim(g);
      ASSERT_TRUE(cert) << "m=" << m << " s=" << s;
      EXPECT_EQ(cert->matching, expected);
      EXPECT_TRUE(verify_certificate(g, *cert));
      const auto spectral = recognize_cdim_spectral(g);
      ASSERT_TRUE(spectral) << "m=" << m << " s=" << s;
      EXPECT_EQ(spectral->matching, expected);
    }
  }
}

TEST(RecognizeSpectralTest, StarHasTwoLevelsButFails) {
  EXPECT_FALSE(recognize_cdim_spectral(testing::star_graph(3)));
  EXPECT_FALSE(recognize_cdim_spectral(testing::cycle_graph(4)));
}

TEST(RecognizeSpectralTest, DisconnectedInput) {
  EXPECT_THROW(recognize_cdim_spectral(Graph::null_graph(2)), DisconnectedGraphError);
}

// Exhaustive cross-check on every labeled graph with at most 6 vertices.
TEST(RecognizeTest, AgreesWithOracleOnSmallGraphs) {
  for (int n = 1; n <= 6; ++n) {
    const AllGraphs graphs(n);
    for (std::uint64_t code = 0; code < graphs.count(); ++code) {
      const Graph g = graphs.at(code);
      const auto cert = recognize_cdim(g);
      bool complete = false;
      for (const auto& m : enumerate_dims(g).dims) complete = complete || is_complete_dim(g, m);
      ASSERT_EQ(cert.has_value(), complete) << serialize_graph(g);
      if (cert) ASSERT_TRUE(verify_certificate(g, *cert));
      if (g.is_connected()) {
        const auto spectral = recognize_cdim_spectral(g);
        ASSERT_EQ(spectral.has_value(), cert.has_value()) << serialize_graph(g);
        if (cert) ASSERT_EQ(spectral->matching, cert->matching);
      }
    }
  }
}

TEST(CertificateTest, DetectsTampering) {
  const Graph g = generate_cdim(2, 2);
  auto cert = *recognize_cdim(g);
  ASSERT_TRUE(verify_certificate(g, cert));
  auto flipped = cert;
  flipped.complete = false;
  EXPECT_FALSE(verify_certificate(g, flipped));
  auto moved = cert;
  std::swap(moved.matched.back(), moved.independent.front());
  EXPECT_FALSE(verify_certificate(g, moved));

  const EdgeSet m = {{1, 2}, {3, 4}, {5, 6}};
  const auto partial = make_certificate(dim9_graph(), m);
  EXPECT_FALSE(partial.complete);
  EXPECT_TRUE(verify_certificate(dim9_graph(), partial));
}

}  // namespace
}  // namespace dimspec
