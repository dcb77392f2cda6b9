#pragma once

#include <string>
#include <vector>

#include "lcsfi/integer.hpp"

namespace lcsfi {

/// Trivalent multigraph: loops per vertex and a symmetric multiplicity matrix.
struct TrivalentGraph {
  int vertices = 0;
  std::vector<int> loops;
  std::vector<std::vector<int>> mult;  // zero diagonal

  static TrivalentGraph empty(int v);
};

// Vertex-by-vertex code [l_1, l_2, a_21, l_3, a_31, a_32, ...].
using GraphCode = std::vector<int>;

GraphCode graph_code(const TrivalentGraph& g);
TrivalentGraph graph_from_code(int v, const GraphCode& code);

bool has_valence_three(const TrivalentGraph& g);
bool is_connected(const TrivalentGraph& g);

// Lexicographically least code over all vertex relabelings.
GraphCode canonical_form(const TrivalentGraph& g);
// Same minimum, by plain enumeration of all v! permutations.
GraphCode canonical_form_brute(const TrivalentGraph& g);
TrivalentGraph canonical_graph(const TrivalentGraph& g);

constexpr int kMaxEnumerateVertices = 12;

std::vector<TrivalentGraph> enumerate_trivalent(int v);
// Connected cubic multigraphs counted via perfect matchings of 3v half-edges.
std::size_t count_by_half_edge_pairing(int v);
// Explicit connected trivalent graph on v vertices for every even v >= 2.
TrivalentGraph witness_graph(int v);

std::string format_graph(const TrivalentGraph& g);
std::string format_code(const GraphCode& c);

enum class GraphDegree { Order, TwiceOrder };
GraphDegree parse_graph_degree(const std::string& s);
std::string graph_degree_name(GraphDegree c);
// Largest D for which all graph generators of degree <= D are enumerable.
int max_series_degree(GraphDegree c);

struct GradedSeries {
  int cutoff = 0;
  std::vector<Integer> coeffs;
};

GradedSeries poincare_series(int max_degree, GraphDegree conv);
GradedSeries c_only_series(int max_degree);
// Independent count of monomials in the generators, degree by degree.
GradedSeries monomial_count_series(int max_degree, GraphDegree conv);
GradedSeries mmm_series(int max_degree);

struct CohMapsRow {
  int degree = 0;
  Integer dim_c;
  Integer dim_full;
  Integer dim_mmm;
  bool has_target = false;  // even positive degree 2i, target e_i
  bool hit = false;
  std::string hit_by;
  bool degree_consistent = false;  // the hitting generator sits in degree 2i
};

std::vector<CohMapsRow> cohomology_maps_table(int max_degree, GraphDegree conv);

}  // namespace lcsfi
