#include "lcsfi/verify.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "json.hpp"

#include "lcsfi/error.hpp"
#include "lcsfi/fi_calc.hpp"
#include "lcsfi/free_lie.hpp"
#include "lcsfi/graphs.hpp"
#include "lcsfi/nilpotent.hpp"
#include "lcsfi/random.hpp"
#include "lcsfi/symplectic.hpp"

namespace lcsfi {

namespace {

using Witness = std::map<std::string, std::string>;

void fail(CheckResult& r, std::string detail, Witness w = {}) {
  r.status = CheckStatus::Fail;
  r.detail = std::move(detail);
  r.witness = std::move(w);
}

void skip(CheckResult& r, std::string why) {
  r.status = CheckStatus::Skip;
  r.detail = std::move(why);
}

bool failed(const CheckResult& r) { return r.status == CheckStatus::Fail; }

std::string str(int x) { return std::to_string(x); }

// Salted per-check stream so that shrinking one check's bounds leaves the
// others' random inputs unchanged.
Rng check_rng(const VerifyConfig& cfg, int salt) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(salt)};
  return Rng(seq);
}

Word nonempty_word(Rng& rng, int rank, int max_len) {
  for (;;) {
    Word w = random_word(rng, rank, max_len);
    if (!w.empty()) return w;
  }
}

// Left-normed commutator of `weight` random words; lies in gamma_weight.
Word random_commutator(Rng& rng, int rank, int weight, int max_len) {
  Word c = nonempty_word(rng, rank, max_len);
  for (int i = 1; i < weight; ++i) c = commutator(nonempty_word(rng, rank, max_len), c);
  return c;
}

LieElement random_lie(Rng& rng, int rank, int weight, int bound) {
  std::map<Monomial, Integer> coords;
  for (const Monomial& b : lyndon_basis(rank, weight)) coords[b] = draw_between(rng, -bound, bound);
  return LieElement(rank, weight, coords);
}

KernelHom random_kernel_hom(Rng& rng, int rank, int weight) {
  std::vector<LieElement> cols;
  for (int i = 0; i < rank; ++i) cols.push_back(random_lie(rng, rank, weight, 3));
  return KernelHom(rank, weight, std::move(cols));
}

FreeEndo single_image(int n, int i, Word w) {
  std::vector<Word> images;
  for (int j = 1; j <= n; ++j) images.push_back(j == i ? std::move(w) : Word::generator(n, j));
  return FreeEndo(n, std::move(images));
}

struct EndoPair {
  FreeEndo endo;
  FreeEndo inverse;
};

// Conjugation x_i -> x_j x_i x_j^-1 or x_i -> x_i [x_j, x_l], or an inverse.
EndoPair random_magnus_generator(Rng& rng, int n) {
  const int i = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(n))) + 1;
  std::vector<int> others;
  for (int j = 1; j <= n; ++j)
    if (j != i) others.push_back(j);
  const Word xi = Word::generator(n, i);
  EndoPair p;
  if (others.size() < 2 || draw_below(rng, 2) == 0) {
    const Word xj = Word::generator(n, others[draw_below(rng, others.size())]);
    p = {single_image(n, i, word_mul(word_mul(xj, xi), word_inv(xj))),
         single_image(n, i, word_mul(word_mul(word_inv(xj), xi), xj))};
  } else {
    const std::size_t a = draw_below(rng, others.size());
    std::size_t b = draw_below(rng, others.size() - 1);
    if (b >= a) ++b;
    const Word c = commutator(Word::generator(n, others[a]), Word::generator(n, others[b]));
    p = {single_image(n, i, word_mul(xi, c)), single_image(n, i, word_mul(xi, word_inv(c)))};
  }
  if (draw_below(rng, 2)) std::swap(p.endo, p.inverse);
  return p;
}

// ---------------------------------------------------------------------------
// Acceptance criteria

void principal_projective_ranks(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.pp_max_n < 0 || cfg.pp_max_k < 0) return skip(r, "bounds disabled");
  int cases = 0;
  for (int n = 0; n <= cfg.pp_max_n; ++n)
    for (int k = 0; k <= cfg.pp_max_k; ++k) {
      const PPEval e = pp_eval(n, k);
      const Integer expected = factorial(n) * binomial(k, n);
      const auto listed = all_injections(n, k).size();
      ++cases;
      if (Integer(e.group.free_rank) != expected || !e.group.torsion.empty() || Integer(listed) != expected ||
          e.basis.size() != listed)
        return fail(r, "rank mismatch",
                    {{"n", str(n)}, {"k", str(k)}, {"expected", to_string(expected)}, {"got", e.group.to_string()},
                     {"enumerated", std::to_string(listed)}});
    }
  r.detail = str(cases) + " (n,k) cases";
}

void binomial_rank_identity(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.binom_max_nm < 0 || cfg.binom_max_k < 0) return skip(r, "bounds disabled");
  int cases = 0;
  for (int n = 0; n <= cfg.binom_max_nm; ++n)
    for (int m = 0; m <= cfg.binom_max_nm; ++m)
      for (int k = 0; k <= cfg.binom_max_k; ++k) {
        const RankIdentity id = tensor_rank_identity(n, m, k);
        ++cases;
        if (!id.holds())
          return fail(r, "identity fails",
                      {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"lhs", to_string(id.lhs)}, {"rhs", to_string(id.rhs)},
                       {"decomposition", to_string(id.decomposition_sum)}});
      }
  r.detail = str(cases) + " (n,m,k) cases";
}

void tensor_decomposition_ranks(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.tensor_max_nm < 0 || cfg.tensor_max_k < 0) return skip(r, "bounds disabled");
  int cases = 0;
  for (int n = 0; n <= cfg.tensor_max_nm; ++n)
    for (int m = 0; m <= cfg.tensor_max_nm; ++m) {
      const auto summands = tensor_decompose(n, m);
      for (int k = 0; k <= cfg.tensor_max_k; ++k) {
        long sum = 0;
        for (const TensorSummand& s : summands) sum += pp_eval(s.degree, k).group.free_rank;
        const long product = static_cast<long>(pp_eval(n, k).group.free_rank) * pp_eval(m, k).group.free_rank;
        ++cases;
        if (sum != product)
          return fail(r, "decomposition is not rank-exact",
                      {{"n", str(n)}, {"m", str(m)}, {"k", str(k)}, {"summand_ranks", std::to_string(sum)},
                       {"product", std::to_string(product)}});
      }
    }
  r.detail = str(cases) + " (n,m,k) cases";
}

void duplication_round_trip(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.dup_max_n < 0 || cfg.dup_max_m < 1) return skip(r, "bounds disabled");
  int cases = 0;
  for (int n = 0; n <= cfg.dup_max_n; ++n)
    for (int m = n + 1; m <= cfg.dup_max_m; ++m)
      for (const FIInjection& f : all_injections(n, 2 * m)) {
        const DupReduction d = dup_reduce(f);
        ++cases;
        const bool slot_ok = !f.in_image(d.slot) && !f.in_image(d.slot + m);
        if (compose(disjoint_union(d.g, d.g), d.f_prime) != f || !slot_ok)
          return fail(r, "round trip failed", {{"f", format_injection(f)}, {"slot", str(d.slot)},
                                               {"g", format_injection(d.g)}, {"f_prime", format_injection(d.f_prime)}});
      }
  r.detail = str(cases) + " injections";
}

void lyndon_witt_agreement(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.lyndon_max_n < 1 || cfg.lyndon_max_k < 1) return skip(r, "bounds disabled");
  int cases = 0;
  for (int n = 1; n <= cfg.lyndon_max_n; ++n)
    for (int k = 1; k <= cfg.lyndon_max_k; ++k) {
      const auto basis = lyndon_basis(n, k);
      ++cases;
      if (Integer(basis.size()) != witt_rank(n, k))
        return fail(r, "count mismatch", {{"n", str(n)}, {"k", str(k)}, {"lyndon", std::to_string(basis.size())},
                                          {"witt", to_string(witt_rank(n, k))}});
      for (const Monomial& w : basis)
        if (!is_lyndon(w)) return fail(r, "non-Lyndon basis word", {{"n", str(n)}, {"k", str(k)}});
    }
  r.detail = str(cases) + " (n,k) cases";
}

void magnus_faithfulness(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.magnus_pairs <= 0 || cfg.magnus_max_k < 1) return skip(r, "no pairs requested");
  Rng rng = check_rng(cfg, 6);
  const int kmax = cfg.magnus_max_k;
  int equal_cases = 0;
  for (int p = 0; p < cfg.magnus_pairs; ++p) {
    const Word u = random_word(rng, 2, 10);
    Word v(2);
    int known = 0;  // u v^-1 lies in gamma_known by construction
    switch (draw_below(rng, 3)) {
      case 0:
        v = random_word(rng, 2, 10);
        break;
      case 1:
        known = static_cast<int>(draw_between(rng, 1, kmax + 1));
        v = word_mul(u, random_commutator(rng, 2, known, 3));
        break;
      default:
        known = static_cast<int>(draw_between(rng, 1, kmax + 1));
        v = word_mul(random_commutator(rng, 2, known, 3), u);
        break;
    }
    const Word q = word_mul(u, word_inv(v));
    const LcsClass cls = lcs_class(q, kmax + 1);
    if (known > 0 && !cls.at_least(known))
      return fail(r, "constructed commutator has too low a class",
                  {{"u", format_word(u)}, {"v", format_word(v)}, {"built_in", "gamma_" + str(known)},
                   {"class", cls.to_string()}});
    for (int k = 1; k <= kmax; ++k) {
      const bool same = nil_from_word(u, k) == nil_from_word(v, k);
      equal_cases += same;
      if (same != cls.at_least(k + 1))
        return fail(r, "truncated equality disagrees with lower central class",
                    {{"pair", str(p)}, {"k", str(k)}, {"u", format_word(u)}, {"v", format_word(v)},
                     {"class", cls.to_string()}, {"equal_in_N2k", same ? "true" : "false"}});
    }
  }
  r.detail = str(cfg.magnus_pairs) + " pairs, k <= " + str(kmax) + ", " + str(equal_cases) + " equal (pair, k) cases";
}

void psi_isomorphism(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.psi_homs <= 0 || cfg.psi_max_n < 1 || cfg.psi_max_k < 2) return skip(r, "no homomorphisms requested");
  Rng rng = check_rng(cfg, 7);
  int cases = 0;
  for (int n = 1; n <= cfg.psi_max_n; ++n)
    for (int k = 2; k <= cfg.psi_max_k; ++k)
      for (int t = 0; t < cfg.psi_homs; ++t) {
        const Witness where{{"n", str(n)}, {"k", str(k)}, {"sample", str(t)}};
        const KernelHom h1 = random_kernel_hom(rng, n, k);
        const KernelHom h2 = random_kernel_hom(rng, n, k);
        const NilEndo p1 = psi_inverse(h1);
        const NilEndo p2 = psi_inverse(h2);
        if (psi_iso(p1) != h1) return fail(r, "psi o psi^-1 is not the identity", where);
        if (psi_iso(nilendo_compose(p1, p2)) != h1 + h2) return fail(r, "psi is not additive", where);
        if (psi_inverse(h1 + h2) != nilendo_compose(p1, p2)) return fail(r, "psi^-1 is not additive", where);

        // An element of the kernel given by words: x_i -> x_i c_i, c_i in gamma_k.
        std::vector<Word> images;
        for (int i = 1; i <= n; ++i) {
          Word c = random_commutator(rng, n, k, 3);
          if (draw_below(rng, 2)) c = word_mul(c, random_commutator(rng, n, k + static_cast<int>(draw_below(rng, 2)), 3));
          images.push_back(word_mul(Word::generator(n, i), c));
        }
        const NilEndo phi = NilEndo::from_free_endo(FreeEndo(n, images), k);
        if (psi_inverse(psi_iso(phi)) != phi) return fail(r, "psi^-1 o psi is not the identity", where);
        ++cases;
      }
  r.detail = str(cases) + " samples over n <= " + str(cfg.psi_max_n) + ", 2 <= k <= " + str(cfg.psi_max_k);
}

void kernel_rank_realization(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.kernel_max_n < 1 || cfg.kernel_max_k < 2) return skip(r, "bounds disabled");
  std::ostringstream summary;
  for (int n = 1; n <= cfg.kernel_max_n; ++n)
    for (int k = 2; k <= cfg.kernel_max_k; ++k) {
      const auto basis = lyndon_basis(n, k);
      IntMatrix rows(0, n * static_cast<int>(basis.size()));
      for (int i = 0; i < n; ++i)
        for (const Monomial& b : basis) {
          std::vector<LieElement> cols(static_cast<std::size_t>(n), LieElement(n, k));
          cols[static_cast<std::size_t>(i)] = LieElement::basis(n, b);
          const NilEndo phi = psi_inverse(KernelHom(n, k, cols));
          if (!rho_project(phi).is_identity())
            return fail(r, "lift is not in the kernel of rho",
                        {{"n", str(n)}, {"k", str(k)}, {"generator", str(i + 1)}, {"lyndon", format_bracket(b)}});
          rows.append_row(kernel_hom_coords(psi_iso(phi)));
        }
      const Integer expected = n * witt_rank(n, k);
      const int rank = matrix_rank(rows);
      if (Integer(rank) != expected)
        return fail(r, "rank of psi-images differs from n * witt_rank",
                    {{"n", str(n)}, {"k", str(k)}, {"rank", str(rank)}, {"expected", to_string(expected)}});
      summary << (summary.tellp() ? " " : "") << "(" << n << "," << k << ")=" << rank;
    }
  r.detail = summary.str();
}

void andreadakis_centrality(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.andreadakis_pairs <= 0 || cfg.andreadakis_max_n < 2 || cfg.andreadakis_max_k < 1)
    return skip(r, "no pairs requested");
  Rng rng = check_rng(cfg, 9);
  int cases = 0;
  for (int n = 2; n <= cfg.andreadakis_max_n; ++n)
    for (int k = 1; k <= cfg.andreadakis_max_k; ++k) {
      const int cls = k + 2;
      for (int p = 0; p < cfg.andreadakis_pairs; ++p) {
        FreeEndo alpha = FreeEndo::identity(n);
        const int factors = static_cast<int>(draw_between(rng, 1, 3));
        for (int f = 0; f < factors; ++f) alpha = endo_compose(alpha, random_magnus_generator(rng, n).endo);
        std::vector<Word> images;
        for (int i = 1; i <= n; ++i)
          images.push_back(word_mul(Word::generator(n, i), lie_lift(random_lie(rng, n, k + 1, 2))));
        const FreeEndo beta(n, images);
        const Witness where{{"n", str(n)}, {"k", str(k)}, {"pair", str(p)}, {"alpha", format_endo(alpha)},
                            {"beta", format_endo(beta)}};
        if (ia_level(alpha, cls) < 1 || ia_level(beta, cls) < k) return fail(r, "sample outside the expected level", where);
        const NilEndo c = nilendo_commutator(NilEndo::from_free_endo(alpha, cls), NilEndo::from_free_endo(beta, cls));
        const int level = ia_level(c);
        if (level < k + 1) {
          Witness w = where;
          w["commutator_level"] = str(level);
          return fail(r, "commutator level below k+1", w);
        }
        ++cases;
      }
    }
  r.detail = str(cases) + " pairs over 2 <= n <= " + str(cfg.andreadakis_max_n) + ", k <= " + str(cfg.andreadakis_max_k);
}

void mapping_class_validation(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.mc_max_genus < 1) return skip(r, "no genus requested");
  int generators = 0, commuting = 0, braiding = 0;
  for (int g = 1; g <= std::min(cfg.mc_max_genus, 3); ++g) {
    const TwistTable& table = twist_generators(g);
    const Word zeta = boundary_word(g);
    const IntMatrix id = IntMatrix::identity(2 * g);
    for (const TwistGenerator& t : table.generators) {
      const Witness where{{"genus", str(g)}, {"generator", t.name}};
      ++generators;
      if (endo_apply(t.twist.endo(), zeta) != zeta || endo_apply(t.inverse.endo(), zeta) != zeta)
        return fail(r, "boundary word moved", where);
      const IntMatrix m = symplectic_rep(t.twist);
      if (!preserves_form(m)) return fail(r, "abelianization is not symplectic", where);
      if (m != transvection(t.curve_class)) return fail(r, "abelianization is not the expected transvection", where);
      if (mc_compose(t.twist, t.inverse) != mc_identity(g) || mc_compose(t.inverse, t.twist) != mc_identity(g))
        return fail(r, "listed inverse does not invert", where);
    }
    for (std::size_t i = 0; i < table.generators.size(); ++i)
      for (std::size_t j = i + 1; j < table.generators.size(); ++j) {
        const TwistGenerator& a = table.generators[i];
        const TwistGenerator& b = table.generators[j];
        const Integer w = omega(a.curve_class, b.curve_class);
        const Witness where{{"genus", str(g)}, {"pair", a.name + "," + b.name}, {"intersection", to_string(w)}};
        if (w == 0) {
          ++commuting;
          if (mc_compose(a.twist, b.twist) != mc_compose(b.twist, a.twist)) return fail(r, "disjoint twists do not commute", where);
        } else if (abs(w) == 1) {
          ++braiding;
          if (mc_compose(a.twist, mc_compose(b.twist, a.twist)) != mc_compose(b.twist, mc_compose(a.twist, b.twist)))
            return fail(r, "braid relation fails", where);
        }
      }
    if (symplectic_rep(mc_identity(g)) != id) return fail(r, "identity has nontrivial abelianization", {{"genus", str(g)}});
  }
  r.detail = str(generators) + " generators, " + str(commuting) + " commuting pairs, " + str(braiding) + " braid pairs";
}

struct SurfaceElement {
  std::string label;
  NilEndo fwd;
  NilEndo inv;
};

void johnson_centrality(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.surface_samples <= 0 || cfg.surface_max_genus < 1 || cfg.surface_max_k < 1) return skip(r, "no samples requested");
  int cases = 0;
  for (int g = 1; g <= std::min(cfg.surface_max_genus, 3); ++g) {
    const TorelliSampling s = torelli_samples(g, cfg.surface_samples, cfg.seed + static_cast<std::uint64_t>(g));
    for (int k = 1; k <= cfg.surface_max_k; ++k) {
      const int cls = k + 2;
      std::vector<SurfaceElement> torelli;
      for (const TorelliSample& t : s.samples)
        torelli.push_back({t.label, NilEndo::from_free_endo(t.element.endo(), cls),
                           NilEndo::from_free_endo(t.inverse.endo(), cls)});
      // beta in I(k): samples of level >= k, plus commutators of Torelli samples when k = 2.
      std::vector<SurfaceElement> deep;
      for (std::size_t i = 0; i < s.samples.size(); ++i)
        if (johnson_level(s.samples[i].element, k).level >= k) deep.push_back(torelli[i]);
      if (k >= 2)
        for (std::size_t i = 1; i < torelli.size() && i < 6; ++i) {
          const auto& a = torelli[i];
          const auto& b = torelli[(i + 1) % torelli.size()];
          deep.push_back({"[" + a.label + ", " + b.label + "]",
                          nilendo_compose(nilendo_compose(a.fwd, b.fwd), nilendo_compose(a.inv, b.inv)),
                          nilendo_compose(nilendo_compose(b.fwd, a.fwd), nilendo_compose(b.inv, a.inv))});
        }
      for (const auto& b : deep)
        if (ia_level(b.fwd) < k)
          return fail(r, "sample expected in I(k) has lower level", {{"genus", str(g)}, {"k", str(k)}, {"beta", b.label}});
      for (const auto& a : torelli)
        for (const auto& b : deep) {
          const NilEndo c = nilendo_compose(nilendo_compose(a.fwd, b.fwd), nilendo_compose(a.inv, b.inv));
          const int level = ia_level(c);
          ++cases;
          if (level < k + 1)
            return fail(r, "commutator level below k+1", {{"genus", str(g)}, {"k", str(k)}, {"alpha", a.label},
                                                          {"beta", b.label}, {"level", str(level)}});
        }
    }
  }
  r.detail = str(cases) + " pairs, genus <= " + str(cfg.surface_max_genus) + ", k <= " + str(cfg.surface_max_k);
}

std::size_t max_image_length(const MappingClass& m) {
  std::size_t l = 0;
  for (const Word& w : m.endo().images()) l = std::max(l, w.length());
  return l;
}

void johnson_homomorphism(const VerifyConfig& cfg, CheckResult& r) {
  const DualityConvention conv = cfg.tau_convention;
  int bp = 0, sep = 0, pairs = 0;
  for (int g = 2; g <= 3; ++g) {
    if (!johnson_tau(mc_identity(g), conv).is_zero()) return fail(r, "tau(identity) is nonzero", {{"genus", str(g)}});
    const TorelliSampling s = torelli_samples(g, 40, cfg.seed + 100 + static_cast<std::uint64_t>(g));
    std::vector<Lambda3Element> taus;
    for (const TorelliSample& t : s.samples) {
      Lambda3Element tau;
      try {
        tau = johnson_tau(t.element, conv);
      } catch (const Error& e) {
        return fail(r, "tau outside the image of Lambda^3 H", {{"genus", str(g)}, {"sample", t.label}, {"error", e.what()}});
      }
      if (t.bounding_pair) {
        ++bp;
        if (tau.is_zero()) return fail(r, "tau of a bounding pair map vanishes", {{"genus", str(g)}, {"sample", t.label}});
      }
      if (t.separating) {
        ++sep;
        if (!tau.is_zero())
          return fail(r, "tau of a separating twist is nonzero",
                      {{"genus", str(g)}, {"sample", t.label}, {"tau", format_lambda3(tau)}});
      }
      taus.push_back(std::move(tau));
    }
    // Additivity on products of samples whose words stay short.
    std::vector<std::size_t> shortish;
    for (std::size_t i = 0; i < s.samples.size(); ++i)
      if (max_image_length(s.samples[i].element) <= 160) shortish.push_back(i);
    Rng rng = check_rng(cfg, 1200 + g);
    const int want = g == 2 ? cfg.tau_pairs : cfg.tau_pairs / 2;
    for (int p = 0; p < want && !shortish.empty(); ++p) {
      const std::size_t i = shortish[draw_below(rng, shortish.size())];
      const std::size_t j = shortish[draw_below(rng, shortish.size())];
      const Lambda3Element lhs = johnson_tau(mc_compose(s.samples[i].element, s.samples[j].element), conv);
      ++pairs;
      if (lhs != taus[i] + taus[j])
        return fail(r, "tau is not additive", {{"genus", str(g)}, {"a", s.samples[i].label}, {"b", s.samples[j].label},
                                                {"tau_ab", format_lambda3(lhs)},
                                                {"tau_a_plus_tau_b", format_lambda3(taus[i] + taus[j])}});
    }
  }
  if (bp == 0 || sep == 0) return fail(r, "sampling produced no bounding pair or separating samples");
  r.detail = str(pairs) + " additive pairs, " + str(bp) + " bounding pair samples, " + str(sep) + " separating samples";
}

void stabilization_coherence(const VerifyConfig& cfg, CheckResult& r) {
  int gens = 0, taus = 0;
  for (int g = 1; g <= 2; ++g) {
    for (const TwistGenerator& t : twist_generators(g).generators)
      for (int h = g + 1; h <= 3; ++h) {
        ++gens;
        if (symplectic_rep(stabilize(t.twist, h)) != block_extend(symplectic_rep(t.twist), h))
          return fail(r, "stabilized generator is not the block extension",
                      {{"genus", str(g)}, {"target_genus", str(h)}, {"generator", t.name}});
      }
    const TorelliSampling s = torelli_samples(g, 16, cfg.seed + 200 + static_cast<std::uint64_t>(g));
    for (const TorelliSample& t : s.samples) {
      const Lambda3Element tau = johnson_tau(t.element);
      for (int h = g + 1; h <= 3; ++h) {
        ++taus;
        const Lambda3Element up = johnson_tau(stabilize(t.element, h));
        if (up != lambda3_pushforward(tau, h))
          return fail(r, "tau does not push forward by re-indexing",
                      {{"genus", str(g)}, {"target_genus", str(h)}, {"sample", t.label}, {"tau", format_lambda3(tau)},
                       {"tau_stabilized", format_lambda3(up)}});
      }
    }
  }
  r.detail = str(gens) + " stabilized generators, " + str(taus) + " stabilized Torelli samples";
}

void trivalent_enumeration(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.graph_max_vertices < 4) return skip(r, "vertex bound below 4");
  const auto two = enumerate_trivalent(2);
  if (two.size() != 2) return fail(r, "v=2 class count", {{"count", std::to_string(two.size())}});
  const std::size_t oracle = count_by_half_edge_pairing(4);
  const std::size_t four = enumerate_trivalent(4).size();
  if (four != oracle)
    return fail(r, "v=4 count differs from half-edge pairing", {{"enumerated", std::to_string(four)},
                                                                {"pairing_oracle", std::to_string(oracle)}});
  Rng rng = check_rng(cfg, 14);
  std::ostringstream counts;
  for (int v = 2; v <= std::min(cfg.graph_max_vertices, kMaxEnumerateVertices); v += 2) {
    const auto graphs = enumerate_trivalent(v);
    std::set<GraphCode> seen;
    for (const TrivalentGraph& g : graphs) {
      const GraphCode c = canonical_form(g);
      const Witness where{{"graph", format_graph(g)}};
      if (!has_valence_three(g) || !is_connected(g)) return fail(r, "invalid graph", where);
      if (c != graph_code(g)) return fail(r, "output is not in canonical form", where);
      if (canonical_form(canonical_graph(g)) != c) return fail(r, "canonical form is not idempotent", where);
      if (!seen.insert(c).second) return fail(r, "duplicate class", where);
      // A random relabelling canonicalizes to the same code.
      std::vector<int> perm(static_cast<std::size_t>(v));
      std::iota(perm.begin(), perm.end(), 0);
      for (int i = v - 1; i > 0; --i) std::swap(perm[static_cast<std::size_t>(i)], perm[draw_below(rng, static_cast<std::uint64_t>(i + 1))]);
      TrivalentGraph h = TrivalentGraph::empty(v);
      for (int i = 0; i < v; ++i) {
        const auto pi = static_cast<std::size_t>(perm[static_cast<std::size_t>(i)]);
        h.loops[pi] = g.loops[static_cast<std::size_t>(i)];
        for (int j = 0; j < v; ++j)
          h.mult[pi][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])] =
              g.mult[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      }
      if (canonical_form(h) != c) return fail(r, "relabelled graph canonicalizes differently", where);
      if (v <= 6 && canonical_form_brute(g) != c) return fail(r, "canonical form differs from brute-force minimum", where);
    }
    counts << (v > 2 ? " " : "") << "v" << v << "=" << graphs.size();
  }
  r.detail = counts.str() + "; pairing oracle at v=4: " + std::to_string(oracle);
}

void poincare_series_check(const VerifyConfig& cfg, CheckResult& r) {
  if (cfg.poincare_degree < 0) return skip(r, "degree bound disabled");
  const int d = cfg.poincare_degree;
  for (GraphDegree conv : {GraphDegree::Order, GraphDegree::TwiceOrder}) {
    const GradedSeries full = poincare_series(d, conv);
    const GradedSeries direct = monomial_count_series(d, conv);
    const GradedSeries c = c_only_series(d);
    if (full.coeffs.empty() || full.coeffs[0] != 1) return fail(r, "degree-0 coefficient is not 1");
    for (int i = 0; i <= d; ++i) {
      const auto is = static_cast<std::size_t>(i);
      const Witness where{{"convention", graph_degree_name(conv)}, {"degree", str(i)},
                          {"series", to_string(full.coeffs[is])}, {"monomials", to_string(direct.coeffs[is])},
                          {"c_only", to_string(c.coeffs[is])}};
      if (full.coeffs[is] != direct.coeffs[is]) return fail(r, "series differs from monomial enumeration", where);
      if (c.coeffs[is] > full.coeffs[is]) return fail(r, "c-only series exceeds the full series", where);
    }
  }
  r.detail = "degrees 0.." + str(d) + ", both conventions";
}

void degree_certification(const VerifyConfig& cfg, CheckResult& r) {
  const int n = cfg.degree_window;
  if (n < 2) return skip(r, "window N=" + str(n) + " below d + max generator degree + 1");
  struct Case {
    std::string name;
    FIPresentation f;
    int d;
  };
  const Case cases[] = {{"P0", FIPresentation::principal(0), 0},
                        {"P1", FIPresentation::principal(1), 1},
                        {"zero", FIPresentation::zero(), -1}};
  std::ostringstream out;
  for (const Case& c : cases) {
    const DegreeVerdict v = fi_degree_certify(c.f, c.d, n);
    if (v.kind != DegreeVerdict::Kind::Certified)
      return fail(r, "expected certification", {{"module", c.name}, {"degree", str(c.d)}, {"verdict", v.to_string()}});
    out << (out.tellp() ? "; " : "") << c.name << ": " << v.to_string();
  }
  r.detail = out.str();
}

// ---------------------------------------------------------------------------
// Module invariants

void word_group_laws(const VerifyConfig& cfg, CheckResult& r) {
  Rng rng = check_rng(cfg, 101);
  const int n = 3;
  for (int t = 0; t < 4 * cfg.invariant_samples; ++t) {
    const Word u = random_word(rng, n, 12), v = random_word(rng, n, 12), w = random_word(rng, n, 12);
    if (word_mul(word_mul(u, v), w) != word_mul(u, word_mul(v, w))) return fail(r, "associativity", {{"u", format_word(u)}});
    if (!word_mul(u, word_inv(u)).empty()) return fail(r, "inverse", {{"u", format_word(u)}});
    // Insert a cancelling pair anywhere: same reduced word.
    std::vector<Letter> letters = u.letters();
    const auto pos = static_cast<std::ptrdiff_t>(draw_below(rng, letters.size() + 1));
    const int a = static_cast<int>(draw_between(rng, 1, n)) * (draw_below(rng, 2) ? 1 : -1);
    letters.insert(letters.begin() + pos, {a, -a});
    if (Word(n, letters) != u) return fail(r, "reduction is not a normal form", {{"u", format_word(u)}});
    std::vector<Word> pi, qi;
    for (int i = 0; i < n; ++i) {
      pi.push_back(random_word(rng, n, 5));
      qi.push_back(random_word(rng, n, 5));
    }
    const FreeEndo phi(n, pi), psi(n, qi);
    if (endo_apply(endo_compose(phi, psi), w) != endo_apply(phi, endo_apply(psi, w)))
      return fail(r, "composition is not respected", {{"phi", format_endo(phi)}, {"psi", format_endo(psi)}, {"w", format_word(w)}});
  }
  r.detail = str(4 * cfg.invariant_samples) + " random triples";
}

void lcs_commutators(const VerifyConfig& cfg, CheckResult& r) {
  Rng rng = check_rng(cfg, 102);
  const int n = 3;
  for (int c = 1; c <= 5; ++c) {
    for (const Monomial& b : lyndon_basis(n, c)) {
      const Word w = bracket_word(b, n);
      const LcsClass cls = lcs_class(w, c + 1);
      if (cls.kind != LcsClass::Kind::Exact || cls.value != c || gr_image(w, c) != LieElement::basis(n, b))
        return fail(r, "basic commutator does not have exact class", {{"bracket", format_bracket(b)}, {"class", cls.to_string()}});
    }
    for (int t = 0; t < cfg.invariant_samples / 5 + 1; ++t) {
      const auto basis = lyndon_basis(n, c);
      Word w(n);
      for (int f = 0; f < 3; ++f) {
        const Word b = bracket_word(basis[draw_below(rng, basis.size())], n);
        w = word_mul(w, draw_below(rng, 2) ? b : word_inv(b));
      }
      if (!lcs_class(w, c).at_least(c)) return fail(r, "product of weight-c commutators below class c", {{"w", format_word(w)}});
    }
  }
  // gr_image is additive on gamma_k.
  for (int t = 0; t < cfg.invariant_samples; ++t) {
    const int k = static_cast<int>(draw_between(rng, 1, 4));
    const Word u = random_commutator(rng, n, k, 3), v = random_commutator(rng, n, k, 3);
    if (gr_image(word_mul(u, v), k) != gr_image(u, k) + gr_image(v, k))
      return fail(r, "gr_image is not additive", {{"u", format_word(u)}, {"v", format_word(v)}, {"k", str(k)}});
  }
  r.detail = "weights 1..5 on rank 3, " + str(cfg.invariant_samples) + " additive pairs";
}

FIInjection random_injection(Rng& rng, int n, int m) {
  const auto all = all_injections(n, m);
  return all[draw_below(rng, all.size())];
}

void lie_functoriality(const VerifyConfig& cfg, CheckResult& r) {
  Rng rng = check_rng(cfg, 103);
  for (int t = 0; t < cfg.invariant_samples; ++t) {
    const int n = static_cast<int>(draw_between(rng, 1, 3));
    const int m = n + static_cast<int>(draw_between(rng, 0, 1));
    const int l = m + static_cast<int>(draw_between(rng, 0, 1));
    const int k = static_cast<int>(draw_between(rng, 1, 4));
    const FIInjection f = random_injection(rng, n, m), g = random_injection(rng, m, l);
    const LieElement v = random_lie(rng, n, k, 3);
    if (lie_pushforward(compose(g, f), v) != lie_pushforward(g, lie_pushforward(f, v)))
      return fail(r, "pushforward is not functorial", {{"f", format_injection(f)}, {"g", format_injection(g)}, {"v", format_lie(v)}});
  }
  // gr_k F_n is generated by pushforwards from F_k.
  for (int n : {3, 4})
    for (int k : {2, 3}) {
      const auto target = lyndon_basis(n, k);
      IntMatrix rows(0, static_cast<int>(target.size()));
      for (const FIInjection& f : all_injections(k, n))
        for (const Monomial& b : lyndon_basis(k, k)) {
          const LieElement img = lie_pushforward(f, LieElement::basis(k, b));
          std::vector<Integer> row;
          for (const Monomial& t : target) row.push_back(img.coeff(t));
          rows.append_row(row);
        }
      if (Integer(matrix_rank(rows)) != witt_rank(n, k) || smith_invariants(rows) != std::vector<Integer>(target.size(), 1))
        return fail(r, "pushforwards do not span gr_k F_n", {{"n", str(n)}, {"k", str(k)}});
    }
  r.detail = str(cfg.invariant_samples) + " composable pairs; spans checked for n in {3,4}, k in {2,3}";
}

void pushforward_naturality(const VerifyConfig& cfg, CheckResult& r) {
  Rng rng = check_rng(cfg, 104);
  for (int t = 0; t < cfg.invariant_samples / 2 + 1; ++t) {
    const int n = static_cast<int>(draw_between(rng, 1, 2));
    const int m = n + static_cast<int>(draw_between(rng, 0, 1));
    const int k = static_cast<int>(draw_between(rng, 2, 3));
    const FIInjection f = random_injection(rng, n, m);
    const KernelHom h = random_kernel_hom(rng, n, k);
    const NilEndo phi = psi_inverse(h);
    const NilEndo pushed = fi_pushforward_aut(f, phi);
    std::vector<LieElement> cols(static_cast<std::size_t>(m), LieElement(m, k));
    for (int j = 1; j <= n; ++j)
      cols[static_cast<std::size_t>(f(j) - 1)] = lie_pushforward(f, h.columns()[static_cast<std::size_t>(j - 1)]);
    const Witness where{{"f", format_injection(f)}, {"k", str(k)}};
    if (psi_iso(pushed) != KernelHom(m, k, cols)) return fail(r, "pushforward does not commute with psi", where);
    // rho square, on a general automorphism given by words.
    std::vector<Word> images;
    for (int i = 1; i <= n; ++i) images.push_back(word_mul(Word::generator(n, i), random_commutator(rng, n, 2, 3)));
    const NilEndo a = NilEndo::from_free_endo(FreeEndo(n, images), k);
    if (rho_project(fi_pushforward_aut(f, a)) != fi_pushforward_aut(f, rho_project(a)))
      return fail(r, "pushforward does not commute with rho", where);
  }
  r.detail = str(cfg.invariant_samples / 2 + 1) + " random squares";
}

FIRelation random_relation(Rng& rng, const std::vector<int>& gens, int degree) {
  FIRelation rel{degree, {}};
  const int terms = static_cast<int>(draw_between(rng, 1, 2));
  for (int t = 0; t < terms; ++t) {
    const int gi = static_cast<int>(draw_below(rng, gens.size()));
    if (gens[static_cast<std::size_t>(gi)] > degree) continue;
    long c = draw_between(rng, -2, 2);
    if (c == 0) c = 1;
    rel.terms.push_back({gi, random_injection(rng, gens[static_cast<std::size_t>(gi)], degree), Integer(c)});
  }
  return rel;
}

void six_term_sequence(const VerifyConfig& cfg, CheckResult& r) {
  Rng rng = check_rng(cfg, 105);
  const int presentations = std::max(1, cfg.invariant_samples / 10);
  for (int t = 0; t < presentations; ++t) {
    std::vector<int> gens;
    const int ng = static_cast<int>(draw_between(rng, 1, 2));
    for (int i = 0; i < ng; ++i) gens.push_back(static_cast<int>(draw_between(rng, 0, 1)));
    std::vector<FIRelation> rels, extra;
    if (draw_below(rng, 2)) rels.push_back(random_relation(rng, gens, static_cast<int>(draw_between(rng, 1, 2))));
    extra.push_back(random_relation(rng, gens, static_cast<int>(draw_between(rng, 1, 2))));
    const FIPresentation f(gens, rels);
    for (int m = 0; m <= 3; ++m) {
      const int defect = six_term_rank_defect(f, extra, m);
      if (defect != 0) return fail(r, "six-term sequence ranks do not alternate to zero", {{"presentation", str(t)}, {"m", str(m)}, {"defect", str(defect)}});
    }
  }
  r.detail = str(presentations) + " random presentations, degrees 0..3";
}

void symplectic_functor(const VerifyConfig&, CheckResult& r) {
  int cases = 0;
  for (int n = 0; n <= 3; ++n)
    for (int m = n; m <= 4; ++m)
      for (const FIInjection& f : all_injections(n, m)) {
        const IntMatrix x = x_functor(f);
        ++cases;
        if (!preserves_form(x)) return fail(r, "X f does not preserve the form", {{"f", format_injection(f)}});
        if (!symplectic_complement(x).valid()) return fail(r, "complement certificate invalid", {{"f", format_injection(f)}});
      }
  r.detail = str(cases) + " injections with n <= 3, m <= 4";
}

void johnson_filtration(const VerifyConfig& cfg, CheckResult& r) {
  const int g = 2, kmax = 3;
  const TorelliSampling s = torelli_samples(g, 10, cfg.seed + 300);
  Rng rng = check_rng(cfg, 106);
  const auto& table = twist_generators(g);
  for (std::size_t i = 0; i < s.samples.size(); ++i) {
    const TorelliSample& a = s.samples[i];
    const JohnsonLevel la = johnson_level(a.element, kmax);
    if (johnson_level(a.inverse, kmax).level != la.level) return fail(r, "level of the inverse differs", {{"sample", a.label}});
    const TorelliSample& b = s.samples[draw_below(rng, s.samples.size())];
    if (max_image_length(a.element) <= 160 && max_image_length(b.element) <= 160) {
      const int lab = johnson_level(mc_compose(a.element, b.element), kmax).level;
      if (lab < std::min(la.level, johnson_level(b.element, kmax).level))
        return fail(r, "level of a product below the minimum", {{"a", a.label}, {"b", b.label}});
    }
    const TwistGenerator& gamma = table.generators[draw_below(rng, table.generators.size())];
    const MappingClass conj = mc_compose(mc_compose(gamma.twist, a.element), gamma.inverse);
    if (johnson_level(conj, kmax).level != la.level)
      return fail(r, "conjugation changes the level", {{"sample", a.label}, {"conjugator", gamma.name}});
  }
  r.detail = str(static_cast<int>(s.samples.size())) + " genus-2 samples, kmax " + str(kmax);
}

void tau_sign_regression(const VerifyConfig& cfg, CheckResult& r) {
  const DualityConvention other =
      cfg.tau_convention == DualityConvention::Symplectic ? DualityConvention::Symmetric : DualityConvention::Symplectic;
  const TorelliSampling s = torelli_samples(2, 8, cfg.seed);
  for (const TorelliSample& t : s.samples) {
    if (!t.bounding_pair) continue;
    try {
      johnson_tau(t.element, other);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NotInLambda3) {
        r.detail = "opposite duality sign rejected on " + t.label;
        return;
      }
      throw;
    }
  }
  fail(r, "opposite duality sign was not rejected on any bounding pair sample");
}

void sp_generation(const VerifyConfig&, CheckResult& r) {
  int found = 0;
  for (int g = 1; g <= 2; ++g)
    for (const SpMembership& m : sp_generation_certificate(g, 8)) {
      if (!m.found) return fail(r, "standard transvection not reached", {{"genus", str(g)}, {"target", m.target}});
      if (symplectic_rep(evaluate(m.word)) != m.matrix)
        return fail(r, "certificate word evaluates elsewhere", {{"genus", str(g)}, {"target", m.target}});
      ++found;
    }
  r.detail = str(found) + " standard transvections reached at genus <= 2";
}

void coh_maps_shape(const VerifyConfig&, CheckResult& r) {
  for (GraphDegree conv : {GraphDegree::Order, GraphDegree::TwiceOrder}) {
    const auto rows = cohomology_maps_table(10, conv);
    for (const CohMapsRow& row : rows) {
      if (row.degree % 2 == 1 && (row.dim_c != 0 || row.dim_full != 0 || row.dim_mmm != 0))
        return fail(r, "odd degree carries classes", {{"convention", graph_degree_name(conv)}, {"degree", str(row.degree)}});
      if (row.has_target && !row.hit)
        return fail(r, "MMM class not hit", {{"convention", graph_degree_name(conv)}, {"degree", str(row.degree)}});
    }
    if (rows[2].dim_mmm != 1 || rows[2].hit_by != "c1") return fail(r, "degree 2 row", {{"convention", graph_degree_name(conv)}});
    if (conv == GraphDegree::TwiceOrder && !rows[4].degree_consistent)
      return fail(r, "theta does not sit in degree 4 under twice-order");
  }
  if (poincare_series(2, GraphDegree::Order).coeffs[2] != 3) return fail(r, "degree-2 coefficient under order is not 3");
  r.detail = "degrees 0..10, both conventions";
}

using CheckFn = std::function<void(const VerifyConfig&, CheckResult&)>;

struct CheckEntry {
  CheckInfo info;
  CheckFn fn;
};

const std::vector<CheckEntry>& entries() {
  static const std::vector<CheckEntry> all = {
      {{"principal-projective-ranks", 1}, principal_projective_ranks},
      {{"binomial-rank-identity", 2}, binomial_rank_identity},
      {{"tensor-decomposition-ranks", 3}, tensor_decomposition_ranks},
      {{"duplication-round-trip", 4}, duplication_round_trip},
      {{"lyndon-witt-agreement", 5}, lyndon_witt_agreement},
      {{"magnus-faithfulness", 6}, magnus_faithfulness},
      {{"psi-isomorphism", 7}, psi_isomorphism},
      {{"kernel-rank-realization", 8}, kernel_rank_realization},
      {{"andreadakis-centrality", 9}, andreadakis_centrality},
      {{"mapping-class-validation", 10}, mapping_class_validation},
      {{"johnson-filtration-centrality", 11}, johnson_centrality},
      {{"johnson-homomorphism", 12}, johnson_homomorphism},
      {{"stabilization-coherence", 13}, stabilization_coherence},
      {{"trivalent-enumeration", 14}, trivalent_enumeration},
      {{"poincare-series", 15}, poincare_series_check},
      {{"degree-certification", 16}, degree_certification},
      {{"word-group-laws", 0}, word_group_laws},
      {{"lcs-basic-commutators", 0}, lcs_commutators},
      {{"lie-pushforward-functoriality", 0}, lie_functoriality},
      {{"aut-pushforward-naturality", 0}, pushforward_naturality},
      {{"six-term-sequence", 0}, six_term_sequence},
      {{"symplectic-functor", 0}, symplectic_functor},
      {{"johnson-level-filtration", 0}, johnson_filtration},
      {{"tau-sign-regression", 0}, tau_sign_regression},
      {{"sp-generation", 0}, sp_generation},
      {{"cohomology-maps-shape", 0}, coh_maps_shape},
  };
  return all;
}

const std::vector<std::pair<const char*, int VerifyConfig::*>>& int_fields() {
  static const std::vector<std::pair<const char*, int VerifyConfig::*>> f = {
      {"pp_max_n", &VerifyConfig::pp_max_n},
      {"pp_max_k", &VerifyConfig::pp_max_k},
      {"binom_max_nm", &VerifyConfig::binom_max_nm},
      {"binom_max_k", &VerifyConfig::binom_max_k},
      {"tensor_max_nm", &VerifyConfig::tensor_max_nm},
      {"tensor_max_k", &VerifyConfig::tensor_max_k},
      {"dup_max_n", &VerifyConfig::dup_max_n},
      {"dup_max_m", &VerifyConfig::dup_max_m},
      {"lyndon_max_n", &VerifyConfig::lyndon_max_n},
      {"lyndon_max_k", &VerifyConfig::lyndon_max_k},
      {"magnus_pairs", &VerifyConfig::magnus_pairs},
      {"magnus_max_k", &VerifyConfig::magnus_max_k},
      {"psi_max_n", &VerifyConfig::psi_max_n},
      {"psi_max_k", &VerifyConfig::psi_max_k},
      {"psi_homs", &VerifyConfig::psi_homs},
      {"kernel_max_n", &VerifyConfig::kernel_max_n},
      {"kernel_max_k", &VerifyConfig::kernel_max_k},
      {"andreadakis_pairs", &VerifyConfig::andreadakis_pairs},
      {"andreadakis_max_n", &VerifyConfig::andreadakis_max_n},
      {"andreadakis_max_k", &VerifyConfig::andreadakis_max_k},
      {"mc_max_genus", &VerifyConfig::mc_max_genus},
      {"surface_max_genus", &VerifyConfig::surface_max_genus},
      {"surface_max_k", &VerifyConfig::surface_max_k},
      {"surface_samples", &VerifyConfig::surface_samples},
      {"tau_pairs", &VerifyConfig::tau_pairs},
      {"graph_max_vertices", &VerifyConfig::graph_max_vertices},
      {"poincare_degree", &VerifyConfig::poincare_degree},
      {"degree_window", &VerifyConfig::degree_window},
      {"invariant_samples", &VerifyConfig::invariant_samples},
  };
  return f;
}

nlohmann::ordered_json config_json(const VerifyConfig& c) {
  nlohmann::ordered_json j;
  j["seed"] = c.seed;
  for (const auto& [key, field] : int_fields()) j[key] = c.*field;
  j["tau_convention"] = c.tau_convention == DualityConvention::Symplectic ? "symplectic" : "symmetric";
  return j;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skip: return "skip";
  }
  return "?";
}

bool VerifyReport::all_passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const CheckResult& c) { return failed(c); });
}

const std::vector<CheckInfo>& verify_checks() {
  static const std::vector<CheckInfo> infos = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

CheckResult run_check(const std::string& name, const VerifyConfig& cfg) {
  for (const auto& e : entries()) {
    if (e.info.name != name) continue;
    CheckResult r;
    r.name = e.info.name;
    r.criterion = e.info.criterion;
    try {
      e.fn(cfg, r);
    } catch (const std::exception& ex) {
      fail(r, "exception", {{"error", ex.what()}});
    }
    return r;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown check '" + name + "'");
}

VerifyReport verify_suite(const VerifyConfig& cfg) {
  VerifyReport rep;
  rep.config = cfg;
  for (const auto& info : verify_checks()) rep.checks.push_back(run_check(info.name, cfg));
  return rep;
}

void set_config_value(VerifyConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "tau_convention") {
    if (value == "symplectic")
      cfg.tau_convention = DualityConvention::Symplectic;
    else if (value == "symmetric")
      cfg.tau_convention = DualityConvention::Symmetric;
    else
      throw Error(ErrorKind::InvalidArgument, "tau_convention is symplectic or symmetric");
    return;
  }
  if (key == "seed") {
    cfg.seed = std::stoull(value);
    return;
  }
  for (const auto& [k, field] : int_fields())
    if (key == k) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != value.size() || value.empty()) throw Error(ErrorKind::InvalidArgument, "bound " + key + " needs an integer");
      cfg.*field = v;
      return;
    }
  throw Error(ErrorKind::InvalidArgument, "unknown verify bound '" + key + "'");
}

std::string report_json(const VerifyReport& r) {
  nlohmann::ordered_json j;
  j["config"] = config_json(r.config);
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  int counts[3] = {0, 0, 0};
  for (const CheckResult& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    if (c.criterion > 0) e["criterion"] = c.criterion;
    e["status"] = check_status_name(c.status);
    e["detail"] = c.detail;
    if (!c.witness.empty()) e["witness"] = c.witness;
    checks.push_back(std::move(e));
    ++counts[static_cast<int>(c.status)];
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"skip", counts[2]}, {"all_passed", r.all_passed()}};
  return j.dump(2);
}

std::string report_tsv(const VerifyReport& r) {
  std::ostringstream os;
  os << "check\tcriterion\tstatus\tdetail\n";
  for (const CheckResult& c : r.checks) {
    os << c.name << '\t' << (c.criterion ? std::to_string(c.criterion) : "-") << '\t' << check_status_name(c.status) << '\t'
       << c.detail;
    for (const auto& [k, v] : c.witness) os << "; " << k << "=" << v;
    os << '\n';
  }
  return os.str();
}

}  // namespace lcsfi
