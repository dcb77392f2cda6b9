#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "lcsfi/error.hpp"
#include "lcsfi/graphs.hpp"

using namespace lcsfi;

namespace {
TrivalentGraph relabeled(const TrivalentGraph& g, const std::vector<int>& perm) {
  TrivalentGraph h = TrivalentGraph::empty(g.vertices);
  for (int i = 0; i < g.vertices; ++i) {
    h.loops[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = g.loops[static_cast<std::size_t>(i)];
    for (int j = 0; j < g.vertices; ++j)
      h.mult[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
          g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return h;
}
}  // namespace

TEST_CASE("two vertices") {
  const auto gs = enumerate_trivalent(2);
  REQUIRE(gs.size() == 2);
  std::vector<std::string> codes;
  for (const auto& g : gs) codes.push_back(format_code(canonical_form(g)));
  std::sort(codes.begin(), codes.end());
  CHECK(codes == std::vector<std::string>{"0.03", "1.11"});
  CHECK_THROWS_AS(enumerate_trivalent(0), Error);
  CHECK_THROWS_AS(enumerate_trivalent(3), Error);
}

TEST_CASE("known counts") {
  const std::vector<std::size_t> expected{2, 5, 17, 71};
  for (int v = 2; v <= 8; v += 2) CHECK(enumerate_trivalent(v).size() == expected[static_cast<std::size_t>(v / 2 - 1)]);
  CHECK(count_by_half_edge_pairing(2) == 2);
  CHECK(count_by_half_edge_pairing(4) == 5);
}

TEST_CASE("canonical forms") {
  for (int v = 2; v <= 6; v += 2)
    for (const auto& g : enumerate_trivalent(v)) {
      CHECK(has_valence_three(g));
      CHECK(is_connected(g));
      CHECK(canonical_form(canonical_graph(g)) == canonical_form(g));
      CHECK(canonical_form(g) == canonical_form_brute(g));
      CHECK(graph_from_code(v, graph_code(g)).mult == g.mult);
      std::vector<int> perm(static_cast<std::size_t>(v));
      std::iota(perm.begin(), perm.end(), 0);
      std::reverse(perm.begin(), perm.end());
      std::rotate(perm.begin(), perm.begin() + 1, perm.end());
      CHECK(canonical_form(relabeled(g, perm)) == canonical_form(g));
    }
}

TEST_CASE("witness graphs") {
  for (int v = 2; v <= 12; v += 2) {
    const TrivalentGraph w = witness_graph(v);
    CHECK(w.vertices == v);
    CHECK(has_valence_three(w));
    CHECK(is_connected(w));
  }
}

TEST_CASE("series") {
  const GradedSeries p = poincare_series(10, GraphDegree::Order);
  CHECK(p.coeffs[0] == 1);
  CHECK(p.coeffs[2] == 3);
  CHECK(p.coeffs[1] == 0);
  const GradedSeries c = c_only_series(10);
  CHECK(c.coeffs[2] == 1);
  CHECK(c.coeffs[6] == 2);
  for (GraphDegree conv : {GraphDegree::Order, GraphDegree::TwiceOrder}) {
    const GradedSeries full = poincare_series(10, conv);
    const GradedSeries brute = monomial_count_series(10, conv);
    for (int d = 0; d <= 10; ++d) {
      CHECK(full.coeffs[static_cast<std::size_t>(d)] == brute.coeffs[static_cast<std::size_t>(d)]);
      CHECK(c.coeffs[static_cast<std::size_t>(d)] <= full.coeffs[static_cast<std::size_t>(d)]);
    }
  }
  CHECK(poincare_series(4, GraphDegree::TwiceOrder).coeffs[4] == 3);
  CHECK(poincare_series(4, GraphDegree::Order).coeffs[4] == 11);
  CHECK_THROWS_AS(poincare_series(max_series_degree(GraphDegree::Order) + 1, GraphDegree::Order), Error);
  CHECK(parse_graph_degree("twice-order") == GraphDegree::TwiceOrder);
  CHECK_THROWS_AS(parse_graph_degree("edges"), Error);
}

TEST_CASE("cohomology maps table") {
  for (GraphDegree conv : {GraphDegree::Order, GraphDegree::TwiceOrder}) {
    const auto rows = cohomology_maps_table(8, conv);
    REQUIRE(rows.size() == 9);
    for (const CohMapsRow& r : rows)
      if (r.degree % 2 == 1) {
        CHECK(r.dim_c == 0);
        CHECK(r.dim_full == 0);
        CHECK(r.dim_mmm == 0);
        CHECK_FALSE(r.has_target);
      }
    CHECK(rows[2].has_target);
    CHECK(rows[2].dim_mmm == 1);
    CHECK(rows[2].hit);
    CHECK(rows[2].hit_by == "c1");
  }
  const auto twice = cohomology_maps_table(8, GraphDegree::TwiceOrder);
  CHECK(twice[4].hit);
  CHECK(twice[4].hit_by == "0.03");
  CHECK(twice[4].degree_consistent);
  const auto order = cohomology_maps_table(8, GraphDegree::Order);
  CHECK(order[4].hit);
  CHECK_FALSE(order[4].degree_consistent);
}
