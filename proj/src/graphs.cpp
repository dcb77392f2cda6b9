#include "lcsfi/graphs.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "lcsfi/error.hpp"

namespace lcsfi {

namespace {

constexpr int kCap = 12;

// Adjacency data of the first t vertices during generation; also used as a
// fixed-size scratch copy of a full graph.
struct Partial {
  int t = 0;
  std::array<int, kCap> ell{};
  std::array<std::array<int, kCap>, kCap> a{};
  std::array<int, kCap> res{};
};

Partial to_partial(const TrivalentGraph& g) {
  if (g.vertices > kCap) throw Error(ErrorKind::InvalidArgument, "graph too large for canonical labelling");
  Partial p;
  p.t = g.vertices;
  for (int i = 0; i < g.vertices; ++i) {
    p.ell[static_cast<std::size_t>(i)] = g.loops[static_cast<std::size_t>(i)];
    for (int j = 0; j < g.vertices; ++j)
      p.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return p;
}

int entry(const Partial& p, int i, int j) { return p.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
int loops_at(const Partial& p, int i) { return p.ell[static_cast<std::size_t>(i)]; }

// Compares the code block of vertex u at position pos (under perm) with the
// block of vertex pos in the identity labelling.
int compare_block(const Partial& p, const std::array<int, kCap>& perm, int pos, int u) {
  const int lu = loops_at(p, u), lp = loops_at(p, pos);
  if (lu != lp) return lu < lp ? -1 : 1;
  for (int q = 0; q < pos; ++q) {
    const int x = entry(p, u, perm[static_cast<std::size_t>(q)]), y = entry(p, pos, q);
    if (x != y) return x < y ? -1 : 1;
  }
  return 0;
}

// True when no relabelling of the first p.t vertices gives a smaller code.
bool no_smaller(const Partial& p, std::array<int, kCap>& perm, std::array<bool, kCap>& used, int pos) {
  if (pos == p.t) return true;
  for (int u = 0; u < p.t; ++u) {
    if (used[static_cast<std::size_t>(u)]) continue;
    const int c = compare_block(p, perm, pos, u);
    if (c < 0) return false;
    if (c > 0) continue;
    used[static_cast<std::size_t>(u)] = true;
    perm[static_cast<std::size_t>(pos)] = u;
    const bool ok = no_smaller(p, perm, used, pos + 1);
    used[static_cast<std::size_t>(u)] = false;
    if (!ok) return false;
  }
  return true;
}

bool is_canonical_prefix(const Partial& p) {
  std::array<int, kCap> perm{};
  std::array<bool, kCap> used{};
  return no_smaller(p, perm, used, 0);
}

void append_block(const Partial& p, const std::array<int, kCap>& perm, int pos, int u, GraphCode& out) {
  out.push_back(loops_at(p, u));
  for (int q = 0; q < pos; ++q) out.push_back(entry(p, u, perm[static_cast<std::size_t>(q)]));
}

// Branch and bound for the least code: at each position only vertices whose
// block is minimal can start the least completion.
void least_code(const Partial& p, std::array<int, kCap>& perm, std::array<bool, kCap>& used, int pos, GraphCode& cur,
                GraphCode& best) {
  if (pos == p.t) {
    if (best.empty() || cur < best) best = cur;
    return;
  }
  std::vector<GraphCode> blocks(static_cast<std::size_t>(p.t));
  GraphCode minb;
  for (int u = 0; u < p.t; ++u) {
    if (used[static_cast<std::size_t>(u)]) continue;
    GraphCode b;
    append_block(p, perm, pos, u, b);
    if (minb.empty() || b < minb) minb = b;
    blocks[static_cast<std::size_t>(u)] = std::move(b);
  }
  const std::size_t start = cur.size();
  cur.insert(cur.end(), minb.begin(), minb.end());
  if (!best.empty() &&
      std::lexicographical_compare(best.begin(), best.begin() + static_cast<std::ptrdiff_t>(cur.size()), cur.begin(),
                                   cur.end())) {
    cur.resize(start);
    return;
  }
  for (int u = 0; u < p.t; ++u) {
    if (used[static_cast<std::size_t>(u)] || blocks[static_cast<std::size_t>(u)] != minb) continue;
    used[static_cast<std::size_t>(u)] = true;
    perm[static_cast<std::size_t>(pos)] = u;
    least_code(p, perm, used, pos + 1, cur, best);
    used[static_cast<std::size_t>(u)] = false;
  }
  cur.resize(start);
}

GraphCode code_under(const TrivalentGraph& g, const std::vector<int>& perm) {
  GraphCode c;
  for (int p = 0; p < g.vertices; ++p) {
    const auto u = static_cast<std::size_t>(perm[static_cast<std::size_t>(p)]);
    c.push_back(g.loops[u]);
    for (int q = 0; q < p; ++q) c.push_back(g.mult[u][static_cast<std::size_t>(perm[static_cast<std::size_t>(q)])]);
  }
  return c;
}

int find_root(std::array<int, kCap>& parent, int x) {
  while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
  return x;
}

// A component of the prefix with no free half-edges can never reach the rest.
bool has_closed_component(const Partial& p, int total) {
  if (p.t == total) return false;
  std::array<int, kCap> parent{};
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < p.t; ++i)
    for (int j = 0; j < i; ++j)
      if (entry(p, i, j) > 0) parent[static_cast<std::size_t>(find_root(parent, i))] = find_root(parent, j);
  std::array<int, kCap> open{};
  for (int i = 0; i < p.t; ++i) open[static_cast<std::size_t>(find_root(parent, i))] += p.res[static_cast<std::size_t>(i)];
  for (int i = 0; i < p.t; ++i)
    if (find_root(parent, i) == i && open[static_cast<std::size_t>(i)] == 0) return true;
  return false;
}

TrivalentGraph from_partial(const Partial& p) {
  TrivalentGraph g = TrivalentGraph::empty(p.t);
  for (int i = 0; i < p.t; ++i) {
    g.loops[static_cast<std::size_t>(i)] = loops_at(p, i);
    for (int j = 0; j < p.t; ++j) g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = entry(p, i, j);
  }
  return g;
}

// Orderly generation: every prefix of a least code is itself least among its
// relabellings, so extending only canonical prefixes visits each class once.
void extend(Partial& p, int total, std::vector<TrivalentGraph>& out) {
  if (p.t == total) {
    for (int i = 0; i < total; ++i)
      if (p.res[static_cast<std::size_t>(i)] != 0) return;
    TrivalentGraph g = from_partial(p);
    if (is_connected(g)) out.push_back(std::move(g));
    return;
  }
  const int t = p.t;
  const auto ts = static_cast<std::size_t>(t);
  for (int l = 0; l <= 1; ++l) {
    // Choose a_{t,j} for j < t in order, bounded by the residuals.
    std::array<int, kCap> row{};
    auto choose = [&](auto&& self, int j, int used) -> void {
      if (j == t) {
        const int r = 3 - 2 * l - used;
        p.ell[ts] = l;
        int open = r;
        for (int k = 0; k < t; ++k) {
          p.a[ts][static_cast<std::size_t>(k)] = p.a[static_cast<std::size_t>(k)][ts] = row[static_cast<std::size_t>(k)];
          p.res[static_cast<std::size_t>(k)] -= row[static_cast<std::size_t>(k)];
          open += p.res[static_cast<std::size_t>(k)];
        }
        p.res[ts] = r;
        p.t = t + 1;
        if (open <= 3 * (total - t - 1) && !has_closed_component(p, total) && is_canonical_prefix(p)) extend(p, total, out);
        p.t = t;
        for (int k = 0; k < t; ++k) {
          p.res[static_cast<std::size_t>(k)] += row[static_cast<std::size_t>(k)];
          p.a[ts][static_cast<std::size_t>(k)] = p.a[static_cast<std::size_t>(k)][ts] = 0;
        }
        p.ell[ts] = 0;
        p.res[ts] = 0;
        return;
      }
      const int cap = std::min(p.res[static_cast<std::size_t>(j)], 3 - 2 * l - used);
      for (int m = 0; m <= cap; ++m) {
        row[static_cast<std::size_t>(j)] = m;
        self(self, j + 1, used + m);
      }
      row[static_cast<std::size_t>(j)] = 0;
    };
    choose(choose, 0, 0);
  }
}

void check_even(int v, int cap) {
  if (v < 2 || v % 2) throw Error(ErrorKind::InvalidArgument, "trivalent graphs need a positive even vertex count");
  if (v > cap) throw Error(ErrorKind::InvalidArgument, "vertex count " + std::to_string(v) + " over cap " + std::to_string(cap));
}

const std::vector<TrivalentGraph>& cached_enumeration(int v) {
  static std::mutex mu;
  static std::map<int, std::vector<TrivalentGraph>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(v);
  if (it == cache.end()) {
    std::vector<TrivalentGraph> out;
    Partial p;
    extend(p, v, out);
    it = cache.emplace(v, std::move(out)).first;
  }
  return it->second;
}

std::vector<int> generator_degrees(int max_degree, GraphDegree conv, std::vector<std::string>* names) {
  std::vector<int> degs;
  for (int i = 1; 2 * i <= max_degree; i += 2) {
    degs.push_back(2 * i);
    if (names) names->push_back("c" + std::to_string(i));
  }
  const int per_vertex = conv == GraphDegree::Order ? 1 : 2;
  for (int v = 2; per_vertex * v <= max_degree; v += 2) {
    const auto& gs = cached_enumeration(v);
    for (std::size_t k = 0; k < gs.size(); ++k) {
      degs.push_back(per_vertex * v);
      if (names) names->push_back(format_code(graph_code(gs[k])));
    }
  }
  return degs;
}

void check_series_degree(int max_degree, GraphDegree conv) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  if (max_degree > max_series_degree(conv))
    throw Error(ErrorKind::InvalidArgument, "degree bound " + std::to_string(max_degree) + " over cap " +
                                                std::to_string(max_series_degree(conv)) + " for convention " +
                                                graph_degree_name(conv));
}

GradedSeries geometric_product(int max_degree, const std::vector<int>& degs) {
  GradedSeries s;
  s.cutoff = max_degree;
  s.coeffs.assign(static_cast<std::size_t>(max_degree + 1), Integer(0));
  s.coeffs[0] = 1;
  for (const int d : degs)
    for (int n = d; n <= max_degree; ++n)
      s.coeffs[static_cast<std::size_t>(n)] += s.coeffs[static_cast<std::size_t>(n - d)];
  return s;
}

}  // namespace

TrivalentGraph TrivalentGraph::empty(int v) {
  TrivalentGraph g;
  g.vertices = v;
  g.loops.assign(static_cast<std::size_t>(v), 0);
  g.mult.assign(static_cast<std::size_t>(v), std::vector<int>(static_cast<std::size_t>(v), 0));
  return g;
}

GraphCode graph_code(const TrivalentGraph& g) {
  std::vector<int> id(static_cast<std::size_t>(g.vertices));
  std::iota(id.begin(), id.end(), 0);
  return code_under(g, id);
}

TrivalentGraph graph_from_code(int v, const GraphCode& code) {
  if (v < 0 || code.size() != static_cast<std::size_t>(v * (v + 1) / 2))
    throw Error(ErrorKind::ParseError, "graph code length does not match vertex count");
  TrivalentGraph g = TrivalentGraph::empty(v);
  std::size_t k = 0;
  for (int p = 0; p < v; ++p) {
    g.loops[static_cast<std::size_t>(p)] = code[k++];
    for (int q = 0; q < p; ++q) {
      const int m = code[k++];
      g.mult[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = m;
      g.mult[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = m;
    }
  }
  return g;
}

bool has_valence_three(const TrivalentGraph& g) {
  for (int i = 0; i < g.vertices; ++i) {
    const auto is = static_cast<std::size_t>(i);
    if (g.mult[is][is] != 0 || g.loops[is] < 0) return false;
    int val = 2 * g.loops[is];
    for (int j = 0; j < g.vertices; ++j) {
      const int m = g.mult[is][static_cast<std::size_t>(j)];
      if (m < 0 || m != g.mult[static_cast<std::size_t>(j)][is]) return false;
      val += m;
    }
    if (val != 3) return false;
  }
  return true;
}

bool is_connected(const TrivalentGraph& g) {
  if (g.vertices == 0) return false;
  std::vector<bool> seen(static_cast<std::size_t>(g.vertices), false);
  std::vector<int> stack{0};
  seen[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.vertices; ++w) {
      if (seen[static_cast<std::size_t>(w)] || g.mult[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)] == 0) continue;
      seen[static_cast<std::size_t>(w)] = true;
      ++count;
      stack.push_back(w);
    }
  }
  return count == g.vertices;
}

GraphCode canonical_form(const TrivalentGraph& g) {
  const Partial p = to_partial(g);
  std::array<int, kCap> perm{};
  std::array<bool, kCap> used{};
  GraphCode cur, best;
  least_code(p, perm, used, 0, cur, best);
  return best;
}

GraphCode canonical_form_brute(const TrivalentGraph& g) {
  if (g.vertices > 8) throw Error(ErrorKind::InvalidArgument, "brute-force canonical form limited to 8 vertices");
  std::vector<int> perm(static_cast<std::size_t>(g.vertices));
  std::iota(perm.begin(), perm.end(), 0);
  GraphCode best = code_under(g, perm);
  while (std::next_permutation(perm.begin(), perm.end())) best = std::min(best, code_under(g, perm));
  return best;
}

TrivalentGraph canonical_graph(const TrivalentGraph& g) { return graph_from_code(g.vertices, canonical_form(g)); }

std::vector<TrivalentGraph> enumerate_trivalent(int v) {
  check_even(v, kMaxEnumerateVertices);
  return cached_enumeration(v);
}

std::size_t count_by_half_edge_pairing(int v) {
  check_even(v, 4);
  const int n = 3 * v;
  std::set<GraphCode> classes;
  std::vector<int> mate(static_cast<std::size_t>(n), -1);
  auto pair_up = [&](auto&& self) -> void {
    int h = 0;
    while (h < n && mate[static_cast<std::size_t>(h)] >= 0) ++h;
    if (h == n) {
      TrivalentGraph g = TrivalentGraph::empty(v);
      for (int x = 0; x < n; ++x) {
        const int y = mate[static_cast<std::size_t>(x)];
        if (y < x) continue;
        const auto a = static_cast<std::size_t>(x / 3), b = static_cast<std::size_t>(y / 3);
        if (a == b) {
          ++g.loops[a];
        } else {
          ++g.mult[a][b];
          ++g.mult[b][a];
        }
      }
      if (is_connected(g)) classes.insert(canonical_form_brute(g));
      return;
    }
    for (int k = h + 1; k < n; ++k) {
      if (mate[static_cast<std::size_t>(k)] >= 0) continue;
      mate[static_cast<std::size_t>(h)] = k;
      mate[static_cast<std::size_t>(k)] = h;
      self(self);
      mate[static_cast<std::size_t>(h)] = mate[static_cast<std::size_t>(k)] = -1;
    }
  };
  pair_up(pair_up);
  return classes.size();
}

TrivalentGraph witness_graph(int v) {
  if (v < 2 || v % 2) throw Error(ErrorKind::InvalidArgument, "trivalent graphs need a positive even vertex count");
  // Moebius ladder: the cycle on v vertices plus the antipodal chords. At
  // v = 2 this is the theta graph.
  TrivalentGraph g = TrivalentGraph::empty(v);
  auto add = [&](int i, int j) {
    ++g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    ++g.mult[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  };
  for (int i = 0; i < v; ++i) add(i, (i + 1) % v);
  for (int i = 0; i < v / 2; ++i) add(i, i + v / 2);
  return g;
}

std::string format_code(const GraphCode& c) {
  std::string s;
  std::size_t k = 0;
  for (int p = 0; k < c.size(); ++p) {
    if (p > 0) s += '.';
    for (int q = 0; q <= p && k < c.size(); ++q) s += std::to_string(c[k++]);
  }
  return s;
}

std::string format_graph(const TrivalentGraph& g) {
  std::ostringstream os;
  os << g.vertices << "; loops=[";
  for (int i = 0; i < g.vertices; ++i) os << (i ? "," : "") << g.loops[static_cast<std::size_t>(i)];
  os << "]; edges=[";
  bool first = true;
  for (int i = 0; i < g.vertices; ++i)
    for (int j = i + 1; j < g.vertices; ++j) {
      const int m = g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      if (m == 0) continue;
      os << (first ? "" : ",") << '(' << i + 1 << ',' << j + 1 << ',' << m << ')';
      first = false;
    }
  os << "]; canonical=" << format_code(canonical_form(g));
  return os.str();
}

GraphDegree parse_graph_degree(const std::string& s) {
  if (s == "order") return GraphDegree::Order;
  if (s == "twice-order") return GraphDegree::TwiceOrder;
  throw Error(ErrorKind::InvalidArgument, "unsupported degree convention '" + s + "' (order|twice-order)");
}

std::string graph_degree_name(GraphDegree c) { return c == GraphDegree::Order ? "order" : "twice-order"; }

int max_series_degree(GraphDegree c) {
  return c == GraphDegree::Order ? kMaxEnumerateVertices + 1 : std::min(24, 2 * kMaxEnumerateVertices + 1);
}

GradedSeries poincare_series(int max_degree, GraphDegree conv) {
  check_series_degree(max_degree, conv);
  return geometric_product(max_degree, generator_degrees(max_degree, conv, nullptr));
}

GradedSeries c_only_series(int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  std::vector<int> degs;
  for (int i = 1; 2 * i <= max_degree; i += 2) degs.push_back(2 * i);
  return geometric_product(max_degree, degs);
}

GradedSeries monomial_count_series(int max_degree, GraphDegree conv) {
  check_series_degree(max_degree, conv);
  std::vector<int> degs = generator_degrees(max_degree, conv, nullptr);
  std::sort(degs.begin(), degs.end());
  GradedSeries s;
  s.cutoff = max_degree;
  std::vector<long> counts(static_cast<std::size_t>(max_degree + 1), 0);
  // Monomials as non-decreasing index sequences into the generator list.
  auto walk = [&](auto&& self, std::size_t from, int deg) -> void {
    ++counts[static_cast<std::size_t>(deg)];
    for (std::size_t j = from; j < degs.size() && deg + degs[j] <= max_degree; ++j) self(self, j, deg + degs[j]);
  };
  walk(walk, 0, 0);
  for (const long c : counts) s.coeffs.emplace_back(c);
  return s;
}

GradedSeries mmm_series(int max_degree) {
  if (max_degree < 0) throw Error(ErrorKind::InvalidArgument, "negative degree bound");
  std::vector<int> degs;
  for (int i = 1; 2 * i <= max_degree; ++i) degs.push_back(2 * i);
  return geometric_product(max_degree, degs);
}

std::vector<CohMapsRow> cohomology_maps_table(int max_degree, GraphDegree conv) {
  const GradedSeries full = poincare_series(max_degree, conv);
  const GradedSeries c = c_only_series(max_degree);
  const GradedSeries e = mmm_series(max_degree);
  std::vector<CohMapsRow> rows;
  for (int d = 0; d <= max_degree; ++d) {
    CohMapsRow r;
    r.degree = d;
    r.dim_c = c.coeffs[static_cast<std::size_t>(d)];
    r.dim_full = full.coeffs[static_cast<std::size_t>(d)];
    r.dim_mmm = e.coeffs[static_cast<std::size_t>(d)];
    if (d > 0 && d % 2 == 0) {
      const int i = d / 2;
      r.has_target = true;
      if (i % 2 == 1) {
        r.hit = true;
        r.hit_by = "c" + std::to_string(i);
        r.degree_consistent = true;
      } else {
        // Graphs with |G| = i exist for every even i; a Moebius ladder is one.
        r.hit = true;
        r.hit_by = format_code(canonical_form(witness_graph(i)));
        r.degree_consistent = conv == GraphDegree::TwiceOrder;
      }
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace lcsfi
