// Command-line front end: one subcommand per library computation, plus the
// verification suite. Exit status: 0 ok, 1 domain error or failed check,
// 2 usage error.

#include <fstream>
#include <functional>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "lcsfi/error.hpp"
#include "lcsfi/fi_calc.hpp"
#include "lcsfi/free_lie.hpp"
#include "lcsfi/graphs.hpp"
#include "lcsfi/mcg.hpp"
#include "lcsfi/nilpotent.hpp"
#include "lcsfi/symplectic.hpp"
#include "lcsfi/verify.hpp"
#include "lcsfi/words.hpp"

using namespace lcsfi;
using json = nlohmann::ordered_json;

namespace {

struct Options {
  std::string format = "tsv";
  int rank = 2;
  int cls = 3;
  int kmax = 4;
  int weight = 3;
  int max_weight = 4;
  int max_degree = 10;
  int degree = 0;
  int window = 15;
  int genus = 1;
  int to_genus = 2;
  int vertices = 2;
  int n = 1;
  int m = 1;
  int k = -1;
  int principal = -1;
  bool zero = false;
  std::uint64_t seed = 7;
  std::string word;
  std::vector<std::string> words;
  std::string endo;
  std::string presentation;
  std::string injection;
  std::string matrix;
  std::string convention;
  std::vector<std::string> settings;
  std::vector<std::string> only;
};

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<std::string>> rows;
};

json cell_json(const std::string& s) {
  static const std::regex integer("-?[0-9]{1,18}");
  if (std::regex_match(s, integer)) return std::stoll(s);
  if (s == "true") return true;
  if (s == "false") return false;
  return s;
}

void emit(const Table& t, const std::string& format) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& row : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.cols.size(); ++i) o[t.cols[i]] = cell_json(row[i]);
      arr.push_back(std::move(o));
    }
    std::cout << arr.dump(2) << '\n';
    return;
  }
  for (std::size_t i = 0; i < t.cols.size(); ++i) std::cout << (i ? "\t" : "") << t.cols[i];
  std::cout << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? "\t" : "") << row[i];
    std::cout << '\n';
  }
}

// Single values print bare in TSV.
void emit_value(const std::string& key, const std::string& value, const std::string& format) {
  if (format == "json")
    std::cout << json{{key, cell_json(value)}}.dump(2) << '\n';
  else
    std::cout << value << '\n';
}

void emit_matrix(const IntMatrix& m, const std::string& format) {
  if (format == "json") {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
      json row = json::array();
      for (int j = 0; j < m.cols(); ++j) row.push_back(cell_json(m(i, j).get_str()));
      rows.push_back(std::move(row));
    }
    std::cout << rows.dump() << '\n';
  } else {
    std::cout << format_matrix(m);
  }
}

std::string letters_string(const Monomial& w) {
  std::string s;
  for (int a : w) s += 'X' + std::to_string(a);
  return s.empty() ? "1" : s;
}

Table poly_table(const TruncPoly& p) {
  Table t{{"degree", "monomial", "coeff"}, {}};
  for (const auto& [mono, c] : p.terms()) t.rows.push_back({std::to_string(mono.size()), letters_string(mono), c.get_str()});
  return t;
}

Table nil_endo_table(const NilEndo& phi) {
  Table t{{"generator", "image"}, {}};
  for (int i = 1; i <= phi.rank(); ++i)
    t.rows.push_back({"x" + std::to_string(i), format_poly(phi.image(i).expansion())});
  return t;
}

FIInjection parse_injection(const std::string& text) {
  static const std::regex shape(R"(\s*\[([0-9,\s]*)\]\s*->\s*([0-9]+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, shape)) throw Error(ErrorKind::ParseError, "injection must look like [1,3]->4");
  std::vector<int> values;
  std::stringstream ss(m[1].str());
  std::string item;
  while (std::getline(ss, item, ','))
    if (item.find_first_not_of(" \t") != std::string::npos) values.push_back(std::stoi(item));
  return FIInjection(std::stoi(m[2].str()), values);
}

IntMatrix parse_matrix(const std::string& text) {
  std::vector<std::vector<Integer>> rows;
  std::stringstream ss(text);
  std::string line;
  std::size_t cols = 0;
  while (std::getline(ss, line, ';')) {
    std::stringstream ls(line);
    std::vector<Integer> row;
    std::string tok;
    while (ls >> tok) {
      if (!tok.empty() && tok.back() == ',') tok.pop_back();
      try {
        row.emplace_back(tok);
      } catch (const std::invalid_argument&) {
        throw Error(ErrorKind::ParseError, "matrix entry '" + tok + "' is not an integer");
      }
    }
    if (row.empty()) continue;
    if (cols && row.size() != cols) throw Error(ErrorKind::ParseError, "matrix rows differ in length");
    cols = row.size();
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows, static_cast<int>(cols));
}

FIPresentation parse_presentation(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("presentation JSON: ") + e.what());
  }
  try {
    std::vector<int> gens = j.at("generators").get<std::vector<int>>();
    std::vector<FIRelation> rels;
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        FIRelation rel{r.at("degree").get<int>(), {}};
        for (const auto& t : r.at("terms"))
          rel.terms.push_back({t.at("gen").get<int>(), FIInjection(rel.degree, t.at("inj").get<std::vector<int>>()),
                               Integer(t.value("coeff", 1L))});
        rels.push_back(std::move(rel));
      }
    return FIPresentation(std::move(gens), std::move(rels));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("presentation JSON: ") + e.what());
  }
}

FIPresentation presentation_from(const Options& o) {
  if (o.zero) return FIPresentation::zero();
  if (o.principal >= 0) return FIPresentation::principal(o.principal);
  if (o.presentation.empty()) throw Error(ErrorKind::InvalidArgument, "give --presentation, --principal n or --zero");
  if (o.presentation.front() == '@') {
    std::ifstream in(o.presentation.substr(1));
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read " + o.presentation.substr(1));
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_presentation(buf.str());
  }
  return parse_presentation(o.presentation);
}

DualityConvention parse_duality(const std::string& s) {
  if (s.empty() || s == "symplectic") return DualityConvention::Symplectic;
  if (s == "symmetric") return DualityConvention::Symmetric;
  throw Error(ErrorKind::InvalidArgument, "duality convention is symplectic or symmetric");
}

MappingClass mapping_class_from(const Options& o) {
  return evaluate(parse_generator_word(o.word, o.genus));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with lower central series, free nilpotent groups, FI-modules, "
               "Johnson filtrations and trivalent graphs."};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  Options o;
  std::vector<std::pair<CLI::App*, std::function<int()>>> commands;

  auto command = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
    return sub;
  };
  auto rank_opt = [&](CLI::App* s) { s->add_option("--rank", o.rank, "Rank of the free group")->required()->check(CLI::PositiveNumber); };
  auto word_opt = [&](CLI::App* s, const std::string& help) { s->add_option("--word", o.word, help)->required(); };

  // Words and the free Lie ring.
  {
    auto* s = command("reduce", "Freely reduce a word. TSV: the reduced word.");
    rank_opt(s);
    word_opt(s, "Word such as \"x1 x2 X2\"");
    commands.emplace_back(s, [&] {
      emit_value("word", format_word(parse_word(o.word, o.rank)), o.format);
      return 0;
    });
  }
  {
    auto* s = command("magnus", "Truncated Magnus expansion. TSV: degree, monomial, coeff.");
    rank_opt(s);
    word_opt(s, "Word");
    s->add_option("--class", o.cls, "Truncation degree")->required();
    commands.emplace_back(s, [&] {
      emit(poly_table(magnus_expand(parse_word(o.word, o.rank), o.cls)), o.format);
      return 0;
    });
  }
  {
    auto* s = command("lcs", "Lower central series class of a word, detected up to kmax.");
    rank_opt(s);
    word_opt(s, "Word");
    s->add_option("--kmax", o.kmax, "Largest class detected exactly")->required();
    commands.emplace_back(s, [&] {
      emit_value("class", lcs_class(parse_word(o.word, o.rank), o.kmax).to_string(), o.format);
      return 0;
    });
  }
  {
    auto* s = command("lyndon", "Lyndon words of one weight. TSV: word, bracket.");
    rank_opt(s);
    s->add_option("--weight", o.weight, "Word length")->required();
    commands.emplace_back(s, [&] {
      Table t{{"word", "bracket"}, {}};
      for (const Monomial& w : lyndon_basis(o.rank, o.weight)) t.rows.push_back({letters_string(w), format_bracket(w)});
      emit(t, o.format);
      return 0;
    });
  }
  {
    auto* s = command("witt", "Ranks of gr_k F_n for k = 1..max-weight. TSV: weight, rank.");
    rank_opt(s);
    s->add_option("--max-weight", o.max_weight, "Largest weight")->required();
    commands.emplace_back(s, [&] {
      Table t{{"weight", "rank"}, {}};
      for (int k = 1; k <= o.max_weight; ++k) t.rows.push_back({std::to_string(k), witt_rank(o.rank, k).get_str()});
      emit(t, o.format);
      return 0;
    });
  }

  // Free nilpotent quotients.
  {
    auto* s = command("nil-mul", "Product of words in N_n(k). TSV: degree, monomial, coeff of the product.");
    rank_opt(s);
    s->add_option("--class", o.cls, "Nilpotency class k")->required();
    s->add_option("--word", o.words, "Factor (repeat for each factor)")->required();
    commands.emplace_back(s, [&] {
      NilElement p = NilElement::identity(o.rank, o.cls);
      for (const std::string& w : o.words) p = nil_mul(p, nil_from_word(parse_word(w, o.rank), o.cls));
      emit(poly_table(p.expansion()), o.format);
      return 0;
    });
  }
  auto endo_opt = [&](CLI::App* s) { s->add_option("--endo", o.endo, "Endomorphism \"n; w_1; ...; w_n\"")->required(); };
  {
    auto* s = command("aut-inverse", "Inverse of an automorphism of N_n(k). TSV: generator, image expansion.");
    endo_opt(s);
    s->add_option("--class", o.cls, "Nilpotency class k")->required();
    commands.emplace_back(s, [&] {
      emit(nil_endo_table(aut_inverse(NilEndo::from_free_endo(parse_endo(o.endo), o.cls))), o.format);
      return 0;
    });
  }
  {
    auto* s = command("rho", "Projection N_n(k) -> N_n(k-1). TSV: generator, image expansion.");
    endo_opt(s);
    s->add_option("--class", o.cls, "Nilpotency class k >= 2")->required();
    commands.emplace_back(s, [&] {
      emit(nil_endo_table(rho_project(NilEndo::from_free_endo(parse_endo(o.endo), o.cls))), o.format);
      return 0;
    });
  }
  {
    auto* s = command("psi", "Image of a kernel element in Hom(Z^n, gr_k). TSV: generator, Lie element.");
    endo_opt(s);
    s->add_option("--class", o.cls, "Nilpotency class k >= 2")->required();
    commands.emplace_back(s, [&] {
      const KernelHom h = psi_iso(NilEndo::from_free_endo(parse_endo(o.endo), o.cls));
      Table t{{"generator", "lie"}, {}};
      for (int i = 0; i < h.rank(); ++i)
        t.rows.push_back({"x" + std::to_string(i + 1), format_lie(h.columns()[static_cast<std::size_t>(i)])});
      emit(t, o.format);
      return 0;
    });
  }
  {
    auto* s = command("ia-level", "Largest k <= kmax with phi(x_i) x_i^-1 in gamma_{k+1} for all i.");
    endo_opt(s);
    s->add_option("--kmax", o.kmax, "Cutoff")->required();
    commands.emplace_back(s, [&] {
      const int level = ia_level(parse_endo(o.endo), o.kmax);
      emit_value("level", (level >= o.kmax ? ">=" : "") + std::to_string(level), o.format);
      return 0;
    });
  }

  // FI-modules.
  auto pres_opts = [&](CLI::App* s) {
    s->add_option("--presentation", o.presentation,
                  "JSON {generators:[n_i], relations:[{degree, terms:[{gen, inj, coeff}]}]}; gen is 0-based; @file reads a file");
    s->add_option("--principal", o.principal, "Use the principal projective P^n");
    s->add_flag("--zero", o.zero, "Use the zero module");
  };
  {
    auto* s = command("fi-eval", "Evaluate a presented FI-module at degrees 0..max-degree. TSV: m, group, free_rank.");
    pres_opts(s);
    s->add_option("--max-degree", o.max_degree, "Largest degree");
    commands.emplace_back(s, [&] {
      const FIPresentation f = presentation_from(o);
      Table t{{"m", "group", "free_rank"}, {}};
      for (int m = 0; m <= o.max_degree; ++m) {
        const AbelianGroup g = fi_eval(f, m);
        t.rows.push_back({std::to_string(m), g.to_string(), std::to_string(g.free_rank)});
      }
      emit(t, o.format);
      return 0;
    });
  }
  {
    auto* s = command("fi-degree", "Bounded degree certification on the window [d+1, N].");
    pres_opts(s);
    s->add_option("--degree", o.degree, "Candidate degree d (-1 for zero)")->required();
    s->add_option("--window", o.window, "Evaluation bound N");
    commands.emplace_back(s, [&] {
      const DegreeVerdict v = fi_degree_certify(presentation_from(o), o.degree, o.window);
      if (o.format == "json") {
        static const char* kinds[] = {"certified", "refuted", "inconclusive"};
        std::cout << json{{"verdict", kinds[static_cast<int>(v.kind)]}, {"degree", v.degree}, {"window", v.window},
                          {"witness", v.witness}, {"path", v.path}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << v.to_string() << '\n';
      }
      return 0;
    });
  }
  {
    auto* s = command("tensor-decomp", "Summands of P^n (x) P^m. TSV: N, M, sigma, degree[, rank_at_k].");
    s->add_option("--n", o.n, "First degree")->required();
    s->add_option("--m", o.m, "Second degree")->required();
    s->add_option("--k", o.k, "Also report ranks at degree k");
    commands.emplace_back(s, [&] {
      auto list = [](const std::vector<int>& v) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
        return s + "}";
      };
      Table t{{"N", "M", "sigma", "degree"}, {}};
      if (o.k >= 0) t.cols.push_back("rank_at_k");
      for (const TensorSummand& x : tensor_decompose(o.n, o.m)) {
        std::string sigma;
        for (std::size_t i = 0; i < x.sigma.size(); ++i)
          sigma += (i ? "," : "") + std::to_string(x.n_subset[i]) + ">" + std::to_string(x.sigma[i]);
        t.rows.push_back({list(x.n_subset), list(x.m_subset), sigma.empty() ? "-" : sigma, std::to_string(x.degree)});
        if (o.k >= 0) t.rows.back().push_back(injection_count(x.degree, o.k).get_str());
      }
      emit(t, o.format);
      return 0;
    });
  }
  auto inj_opt = [&](CLI::App* s) { s->add_option("--injection", o.injection, "Injection \"[f(1),...,f(n)]->m\"")->required(); };
  {
    auto* s = command("dup-reduce", "Factor f: n -> 2m (m > n) as (g+g) o f'. TSV: slot, g, f_prime.");
    inj_opt(s);
    commands.emplace_back(s, [&] {
      const DupReduction d = dup_reduce(parse_injection(o.injection));
      emit(Table{{"slot", "g", "f_prime"}, {{std::to_string(d.slot), format_injection(d.g), format_injection(d.f_prime)}}},
           o.format);
      return 0;
    });
  }
  {
    auto* s = command("x-functor", "The 2m x 2n symplectic matrix of an injection. TSV: matrix rows.");
    inj_opt(s);
    commands.emplace_back(s, [&] {
      emit_matrix(x_functor(parse_injection(o.injection)), o.format);
      return 0;
    });
  }
  {
    auto* s = command("complement", "Symplectic complement of the image of a form-preserving matrix. TSV: basis columns as a matrix.");
    s->add_option("--injection", o.injection, "Use x-functor of this injection");
    s->add_option("--matrix", o.matrix, "Matrix rows separated by ';'");
    commands.emplace_back(s, [&] {
      if (o.injection.empty() == o.matrix.empty()) throw Error(ErrorKind::InvalidArgument, "give exactly one of --injection, --matrix");
      const IntMatrix f = o.matrix.empty() ? x_functor(parse_injection(o.injection)) : parse_matrix(o.matrix);
      const ComplementCertificate c = symplectic_complement(f);
      if (o.format == "json") {
        json basis = json::array();
        for (int i = 0; i < c.basis.rows(); ++i) {
          json row = json::array();
          for (int j = 0; j < c.basis.cols(); ++j) row.push_back(cell_json(c.basis(i, j).get_str()));
          basis.push_back(std::move(row));
        }
        std::cout << json{{"basis", basis}, {"joint_determinant", cell_json(c.joint_determinant.get_str())},
                          {"orthogonal", c.orthogonal}, {"standard_form", c.standard_form}, {"valid", c.valid()}}
                         .dump(2)
                  << '\n';
      } else {
        std::cout << format_matrix(c.basis);
      }
      return c.valid() ? 0 : 1;
    });
  }

  // Surfaces.
  auto genus_opt = [&](CLI::App* s) { s->add_option("--genus", o.genus, "Genus g")->required(); };
  auto mc_word_opt = [&](CLI::App* s) { word_opt(s, "Twist word such as \"a1 B2\" (capital = inverse, applied right to left)"); };
  {
    auto* s = command("zeta", "Boundary word prod_i [x_i, y_i].");
    genus_opt(s);
    commands.emplace_back(s, [&] {
      emit_value("zeta", format_surface_word(boundary_word(o.genus)), o.format);
      return 0;
    });
  }
  {
    auto* s = command("validate-mc", "Check that an endomorphism of F_2g is a mapping class. TSV: symplectic matrix.");
    genus_opt(s);
    endo_opt(s);
    commands.emplace_back(s, [&] {
      const MappingClass mc = validate_mapping_class(parse_endo(o.endo), o.genus);
      emit_matrix(symplectic_rep(mc), o.format);
      return 0;
    });
  }
  {
    auto* s = command("sp-rep", "Symplectic matrix of a twist word.");
    genus_opt(s);
    mc_word_opt(s);
    commands.emplace_back(s, [&] {
      emit_matrix(symplectic_rep(mapping_class_from(o)), o.format);
      return 0;
    });
  }
  {
    auto* s = command("johnson-level", "Johnson filtration level of a twist word, up to kmax.");
    genus_opt(s);
    mc_word_opt(s);
    s->add_option("--kmax", o.kmax, "Cutoff")->required();
    commands.emplace_back(s, [&] {
      emit_value("level", johnson_level(mapping_class_from(o), o.kmax).to_string(), o.format);
      return 0;
    });
  }
  {
    auto* s = command("tau", "Johnson homomorphism of a Torelli twist word, in Lambda^3 H.");
    genus_opt(s);
    mc_word_opt(s);
    s->add_option("--convention", o.convention, "Duality sign: symplectic (default) or symmetric");
    commands.emplace_back(s, [&] {
      emit_value("tau", format_lambda3(johnson_tau(mapping_class_from(o), parse_duality(o.convention))), o.format);
      return 0;
    });
  }
  {
    auto* s = command("stabilize", "Extend a twist word to a larger genus. TSV: generator, image.");
    genus_opt(s);
    mc_word_opt(s);
    s->add_option("--to", o.to_genus, "Target genus")->required();
    commands.emplace_back(s, [&] {
      const MappingClass mc = stabilize(mapping_class_from(o), o.to_genus);
      Table t{{"generator", "image"}, {}};
      for (int i = 1; i <= 2 * o.to_genus; ++i)
        t.rows.push_back({format_surface_word(Word::generator(2 * o.to_genus, i)), format_surface_word(mc.endo().image(i))});
      emit(t, o.format);
      return 0;
    });
  }

  // Graphs.
  {
    auto* s = command("graphs", "Connected trivalent multigraphs on v vertices, one per isomorphism class.");
    s->add_option("--vertices", o.vertices, "Even vertex count")->required();
    commands.emplace_back(s, [&] {
      Table t{{"index", "graph"}, {}};
      int i = 0;
      for (const TrivalentGraph& g : enumerate_trivalent(o.vertices)) t.rows.push_back({std::to_string(++i), format_graph(g)});
      emit(t, o.format);
      return 0;
    });
  }
  auto series_opts = [&](CLI::App* s) {
    s->add_option("--max-degree", o.max_degree, "Degree cutoff D");
    s->add_option("--convention", o.convention, "Graph degree: order (default) or twice-order");
  };
  {
    auto* s = command("poincare", "Poincare series of Q[graphs, c_1, c_3, ...]. TSV: degree, dim, c_only.");
    series_opts(s);
    commands.emplace_back(s, [&] {
      const GraphDegree conv = parse_graph_degree(o.convention.empty() ? "order" : o.convention);
      const GradedSeries full = poincare_series(o.max_degree, conv);
      const GradedSeries c = c_only_series(o.max_degree);
      Table t{{"degree", "dim", "c_only"}, {}};
      for (int d = 0; d <= o.max_degree; ++d)
        t.rows.push_back({std::to_string(d), full.coeffs[static_cast<std::size_t>(d)].get_str(),
                          c.coeffs[static_cast<std::size_t>(d)].get_str()});
      emit(t, o.format);
      return 0;
    });
  }
  {
    auto* s = command("coh-maps", "Dimensions of Q[c], Q[graphs, c], Q[e] per degree and which e_i are hit.");
    series_opts(s);
    commands.emplace_back(s, [&] {
      const GraphDegree conv = parse_graph_degree(o.convention.empty() ? "order" : o.convention);
      Table t{{"degree", "dim_c", "dim_full", "dim_mmm", "target", "hit", "hit_by", "degree_consistent"}, {}};
      for (const CohMapsRow& r : cohomology_maps_table(o.max_degree, conv)) {
        const bool tgt = r.has_target;
        t.rows.push_back({std::to_string(r.degree), r.dim_c.get_str(), r.dim_full.get_str(), r.dim_mmm.get_str(),
                          tgt ? "e" + std::to_string(r.degree / 2) : "-", tgt ? (r.hit ? "true" : "false") : "-",
                          tgt ? r.hit_by : "-", tgt ? (r.degree_consistent ? "true" : "false") : "-"});
      }
      emit(t, o.format);
      return 0;
    });
  }

  // Verification suite.
  {
    auto* s = app.add_subcommand("verify", "Run every acceptance check and module invariant. Default output: JSON report.");
    s->add_option("--format", o.format, "Output format (default json)")->check(CLI::IsMember({"tsv", "json"}));
    s->add_option("--seed", o.seed, "Random seed");
    s->add_option("--window", o.window, "Window N for degree certification");
    s->add_option("--max-degree", o.max_degree, "Degree bound for the Poincare series check");
    s->add_option("--kmax", o.kmax, "Largest k in the Magnus faithfulness check");
    s->add_option("--set", o.settings, "Override a bound, key=value (keys as in the report config)");
    s->add_option("--check", o.only, "Run only the named checks");
    commands.emplace_back(s, [&, s] {
      VerifyConfig cfg;
      cfg.seed = o.seed;
      if (s->count("--window")) cfg.degree_window = o.window;
      if (s->count("--max-degree")) cfg.poincare_degree = o.max_degree;
      if (s->count("--kmax")) cfg.magnus_max_k = o.kmax;
      for (const std::string& kv : o.settings) {
        const auto eq = kv.find('=');
        if (eq == std::string::npos) throw Error(ErrorKind::InvalidArgument, "--set expects key=value");
        set_config_value(cfg, kv.substr(0, eq), kv.substr(eq + 1));
      }
      VerifyReport rep;
      if (o.only.empty()) {
        rep = verify_suite(cfg);
      } else {
        rep.config = cfg;
        for (const std::string& name : o.only) rep.checks.push_back(run_check(name, cfg));
      }
      std::cout << (s->count("--format") && o.format == "tsv" ? report_tsv(rep) : report_json(rep) + "\n");
      return rep.all_passed() ? 0 : 1;
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    for (const auto& [sub, run] : commands)
      if (sub->parsed()) return run();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
