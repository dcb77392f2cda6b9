#include "lcsfi/mcg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

#include "lcsfi/error.hpp"
#include "lcsfi/free_lie.hpp"
#include "lcsfi/nilpotent.hpp"
#include "lcsfi/random.hpp"
#include "lcsfi/symplectic.hpp"

namespace lcsfi {

namespace detail {
std::string_view twist_table_text(int genus);
}

Word boundary_word(int g) {
  if (g < 0) throw Error(ErrorKind::InvalidArgument, "negative genus");
  Word z(2 * g);
  for (int i = 1; i <= g; ++i)
    z = word_mul(z, commutator(Word::generator(2 * g, 2 * i - 1), Word::generator(2 * g, 2 * i)));
  return z;
}

IntMatrix abelianization(const FreeEndo& phi) {
  const int n = phi.rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j)
    for (Letter a : phi.images()[static_cast<std::size_t>(j)].letters()) m(std::abs(a) - 1, j) += a > 0 ? 1 : -1;
  return m;
}

MappingClass validate_mapping_class(const FreeEndo& phi, int g) {
  if (phi.rank() != 2 * g)
    throw Error(ErrorKind::RankMismatch, "genus " + std::to_string(g) + " needs rank " + std::to_string(2 * g));
  const Word z = boundary_word(g);
  const Word image = endo_apply(phi, z);
  if (image != z) throw Error(ErrorKind::BoundaryWordMoved, "boundary word maps to " + format_surface_word(image));
  if (!preserves_form(abelianization(phi)))
    throw Error(ErrorKind::NonSymplectic, "abelianization does not preserve the intersection form");
  return MappingClass(g, phi);
}

MappingClass mc_identity(int g) { return validate_mapping_class(FreeEndo::identity(2 * g), g); }

MappingClass mc_compose(const MappingClass& a, const MappingClass& b) {
  if (a.genus() != b.genus()) throw Error(ErrorKind::RankMismatch, "mapping classes of different genus");
  return validate_mapping_class(endo_compose(a.endo(), b.endo()), a.genus());
}

const TwistGenerator& TwistTable::find(std::string_view name) const {
  for (const auto& t : generators)
    if (t.name == name) return t;
  throw Error(ErrorKind::ParseError, "no twist named '" + std::string(name) + "' at genus " + std::to_string(genus));
}

namespace {

std::string trim(std::string_view s) {
  std::size_t a = 0;
  std::size_t b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

int surface_generator_index(const std::string& tok, int g) {
  const Word w = parse_surface_word(tok, g);
  if (w.length() != 1 || w.letters()[0] < 0) throw Error(ErrorKind::ParseError, "expected a generator name, got '" + tok + "'");
  return w.letters()[0];
}

// v with M = T_v, normalized so its first nonzero entry is positive.
std::vector<Integer> transvection_class(const IntMatrix& m) {
  const int n = m.rows();
  const IntMatrix d = m - IntMatrix::identity(n);
  for (int c = 0; c < n; ++c) {
    Integer g = 0;
    for (int r = 0; r < n; ++r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d(r, c).get_mpz_t());
    if (g == 0) continue;
    std::vector<Integer> v(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) v[static_cast<std::size_t>(r)] = d(r, c) / g;
    for (const Integer& x : v)
      if (x != 0) {
        if (x < 0)
          for (Integer& y : v) y = -y;
        break;
      }
    if (transvection(v) == m) return v;
    throw Error(ErrorKind::ParseError, "abelianization is not a transvection along a primitive class");
  }
  throw Error(ErrorKind::ParseError, "abelianization is the identity, not a transvection");
}

bool commute(const FreeEndo& a, const FreeEndo& b) { return endo_compose(a, b) == endo_compose(b, a); }

bool braid(const FreeEndo& a, const FreeEndo& b) {
  return endo_compose(endo_compose(a, b), a) == endo_compose(endo_compose(b, a), b);
}

}  // namespace

TwistTable parse_twist_table(std::string_view text) {
  struct Pending {
    std::string name;
    int genus = 0;
    std::vector<Word> fwd;
    std::vector<Word> inv;
  };
  std::vector<Pending> entries;
  bool in_inverse = false;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.rfind("curve ", 0) == 0) {
      std::istringstream ls(line);
      std::string kw, name, gkw;
      int g = -1;
      ls >> kw >> name >> gkw >> g;
      if (gkw != "genus" || g < 1) throw Error(ErrorKind::ParseError, where + "expected 'curve <name> genus <g>'");
      Pending p;
      p.name = name;
      p.genus = g;
      for (int i = 1; i <= 2 * g; ++i) {
        p.fwd.push_back(Word::generator(2 * g, i));
        p.inv.push_back(Word::generator(2 * g, i));
      }
      entries.push_back(std::move(p));
      in_inverse = false;
      continue;
    }
    if (entries.empty()) throw Error(ErrorKind::ParseError, where + "image line before any curve");
    if (line == "inverse") {
      in_inverse = true;
      continue;
    }
    const auto arrow = line.find("->");
    if (arrow == std::string::npos) throw Error(ErrorKind::ParseError, where + "expected '<generator> -> <word>'");
    Pending& p = entries.back();
    const int idx = surface_generator_index(trim(line.substr(0, arrow)), p.genus);
    const Word w = parse_surface_word(line.substr(arrow + 2), p.genus);
    (in_inverse ? p.inv : p.fwd)[static_cast<std::size_t>(idx - 1)] = w;
  }
  if (entries.empty()) throw Error(ErrorKind::ParseError, "table has no curves");

  TwistTable table;
  table.genus = entries.front().genus;
  for (Pending& p : entries) {
    if (p.genus != table.genus) throw Error(ErrorKind::ParseError, "curve " + p.name + " has a different genus");
    const int n = 2 * p.genus;
    FreeEndo f(n, p.fwd);
    FreeEndo fi(n, p.inv);
    TwistGenerator t{p.name, validate_mapping_class(f, p.genus), validate_mapping_class(fi, p.genus), {}};
    if (endo_compose(f, fi) != FreeEndo::identity(n) || endo_compose(fi, f) != FreeEndo::identity(n))
      throw Error(ErrorKind::ParseError, "curve " + p.name + ": inverse block is not the inverse");
    t.curve_class = transvection_class(abelianization(f));
    table.generators.push_back(std::move(t));
  }
  for (std::size_t i = 0; i < table.generators.size(); ++i)
    for (std::size_t j = i + 1; j < table.generators.size(); ++j) {
      const auto& a = table.generators[i];
      const auto& b = table.generators[j];
      const Integer w = abs(omega(a.curve_class, b.curve_class));
      bool ok = true;
      if (w == 0) ok = commute(a.twist.endo(), b.twist.endo());
      if (w == 1) ok = braid(a.twist.endo(), b.twist.endo());
      if (!ok)
        throw Error(ErrorKind::ParseError, "curves " + a.name + " and " + b.name + " fail the relation expected from their intersection number");
    }
  return table;
}

const TwistTable& twist_generators(int g) {
  if (g < 1 || g > 3) throw Error(ErrorKind::UnsupportedGenus, "bundled twist tables cover genus 1..3");
  static std::mutex mu;
  static std::map<int, TwistTable> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, parse_twist_table(detail::twist_table_text(g))).first;
  return it->second;
}

GeneratorWord parse_generator_word(std::string_view text, int g) {
  const TwistTable& table = twist_generators(g);
  GeneratorWord w;
  w.genus = g;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    bool inverse = std::isupper(static_cast<unsigned char>(tok[0])) != 0;
    std::string name = tok;
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
    int found = 0;
    for (std::size_t i = 0; i < table.generators.size(); ++i)
      if (table.generators[i].name == name) found = static_cast<int>(i) + 1;
    if (!found) throw Error(ErrorKind::ParseError, "unknown twist generator '" + tok + "'");
    w.letters.push_back(inverse ? -found : found);
  }
  return w;
}

std::string format_generator_word(const GeneratorWord& w) {
  const TwistTable& table = twist_generators(w.genus);
  std::string s;
  for (int a : w.letters) {
    std::string name = table.generators[static_cast<std::size_t>(std::abs(a) - 1)].name;
    if (a < 0) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    s += (s.empty() ? "" : " ") + name;
  }
  return s;
}

MappingClass evaluate(const GeneratorWord& w) {
  const TwistTable& table = twist_generators(w.genus);
  FreeEndo r = FreeEndo::identity(2 * w.genus);
  for (int a : w.letters) {
    const auto& t = table.generators[static_cast<std::size_t>(std::abs(a) - 1)];
    r = endo_compose(r, (a > 0 ? t.twist : t.inverse).endo());
  }
  return validate_mapping_class(r, w.genus);
}

MappingClass evaluate_inverse(const GeneratorWord& w) {
  GeneratorWord inv{w.genus, {}};
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) inv.letters.push_back(-*it);
  return evaluate(inv);
}

IntMatrix symplectic_rep(const MappingClass& phi) { return abelianization(phi.endo()); }

std::string JohnsonLevel::to_string() const { return saturated ? ">=" + std::to_string(level) : std::to_string(level); }

JohnsonLevel johnson_level(const MappingClass& phi, int kmax) {
  JohnsonLevel j;
  j.level = ia_level(phi.endo(), kmax);
  j.saturated = j.level >= kmax;
  return j;
}

MappingClass stabilize(const MappingClass& phi, int new_genus) {
  if (new_genus < phi.genus()) throw Error(ErrorKind::InvalidArgument, "cannot stabilize to a smaller genus");
  const int n = 2 * new_genus;
  std::vector<Word> images;
  for (const Word& w : phi.endo().images()) images.emplace_back(n, w.letters());
  for (int i = 2 * phi.genus() + 1; i <= n; ++i) images.push_back(Word::generator(n, i));
  return validate_mapping_class(FreeEndo(n, std::move(images)), new_genus);
}

Lambda3Element operator+(const Lambda3Element& a, const Lambda3Element& b) {
  if (a.genus != b.genus) throw Error(ErrorKind::RankMismatch, "Lambda^3 elements of different genus");
  Lambda3Element r = a;
  for (const auto& [k, c] : b.coords) {
    r.coords[k] += c;
    if (r.coords[k] == 0) r.coords.erase(k);
  }
  return r;
}

namespace {

std::string basis_label(int i) { return std::string(i % 2 ? "x" : "y") + std::to_string((i + 1) / 2); }

}  // namespace

std::string format_lambda3(const Lambda3Element& t) {
  if (t.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [k, c] : t.coords) {
    const Integer mag = abs(c);
    s += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    if (mag != 1) s += mag.get_str() + "*";
    s += basis_label(k[0]) + "^" + basis_label(k[1]) + "^" + basis_label(k[2]);
  }
  return s;
}

Lambda3Element lambda3_pushforward(const Lambda3Element& t, int new_genus) {
  if (new_genus < t.genus) throw Error(ErrorKind::InvalidArgument, "cannot push forward to a smaller genus");
  Lambda3Element r = t;
  r.genus = new_genus;
  return r;
}

Lambda3Element johnson_tau(const MappingClass& phi, DualityConvention conv) {
  const int g = phi.genus();
  const int n = 2 * g;
  if (symplectic_rep(phi) != IntMatrix::identity(n)) throw Error(ErrorKind::NotTorelli, "symplectic image is not the identity");

  // T in H (x) Λ²H, keyed by (i, a, b) with a < b.
  std::map<std::array<int, 3>, Integer> tensor;
  for (int z = 1; z <= n; ++z) {
    const Word d = word_mul(phi.endo().image(z), word_inv(Word::generator(n, z)));
    const LieElement t = gr_image(d, 2);
    const int handle = (z + 1) / 2;
    int h;
    int sign;
    if (z % 2 == 1) {
      h = 2 * handle;
      sign = conv == DualityConvention::Symplectic ? -1 : 1;
    } else {
      h = 2 * handle - 1;
      sign = 1;
    }
    for (const auto& [w, c] : t.coords()) {
      Integer& slot = tensor[{h, w[0], w[1]}];
      slot += sign * c;
      if (slot == 0) tensor.erase({h, w[0], w[1]});
    }
  }

  Lambda3Element out;
  out.genus = g;
  for (const auto& [k, c] : tensor)
    if (k[0] < k[1]) out.coords[k] = c;

  std::map<std::array<int, 3>, Integer> embedded;
  auto put = [&](int p, int q, int r, const Integer& c) {
    if (q > r) {
      std::swap(q, r);
      embedded[{p, q, r}] -= c;
    } else {
      embedded[{p, q, r}] += c;
    }
  };
  for (const auto& [k, c] : out.coords) {
    put(k[0], k[1], k[2], c);
    put(k[1], k[2], k[0], c);
    put(k[2], k[0], k[1], c);
  }
  std::erase_if(embedded, [](const auto& kv) { return kv.second == 0; });
  if (embedded != tensor) throw Error(ErrorKind::NotInLambda3, "degree-2 data does not lie in the image of Λ³H");
  return out;
}

TorelliSampling torelli_samples(int g, int count, std::uint64_t seed) {
  if (g < 0 || g > 3) throw Error(ErrorKind::UnsupportedGenus, "Torelli sampling covers genus 0..3");
  TorelliSampling out;
  auto have = [&](const MappingClass& m) {
    return std::any_of(out.samples.begin(), out.samples.end(), [&](const TorelliSample& s) { return s.element == m; });
  };
  auto add = [&](TorelliSample s) {
    if (static_cast<int>(out.samples.size()) >= count || have(s.element)) return;
    if (symplectic_rep(s.element) != IntMatrix::identity(2 * g)) return;
    out.samples.push_back(std::move(s));
  };

  add({"identity", {g, {}}, mc_identity(g), mc_identity(g), false, false});
  if (g == 0) {
    out.shortfall = std::max(0, count - static_cast<int>(out.samples.size()));
    return out;
  }

  const TwistTable& table = twist_generators(g);
  std::vector<TorelliSample> seeds;
  {
    const GeneratorWord sep = parse_generator_word("a1 b1 a1 b1 a1 b1 a1 b1 a1 b1 a1 b1", g);
    seeds.push_back({"separating twist (a1 b1)^6", sep, evaluate(sep), evaluate_inverse(sep), false, true});
  }
  if (g >= 2) {
    const GeneratorWord bp = parse_generator_word("d A2", 2);
    MappingClass e = evaluate(bp);
    MappingClass ei = evaluate_inverse(bp);
    if (g == 2) {
      seeds.push_back({"bounding pair d A2", bp, e, ei, true, false});
    } else {
      seeds.push_back({"bounding pair d A2 stabilized", {g, {}}, stabilize(e, g), stabilize(ei, g), true, false});
    }
  }
  for (const auto& s : seeds) add(s);
  for (const auto& s : seeds)
    add({s.label + " inverse", {g, {}}, s.inverse, s.element, s.bounding_pair, s.separating});

  Rng rng(seed);
  const int ngen = static_cast<int>(table.generators.size());
  auto random_gen_word = [&](int max_len) {
    GeneratorWord w{g, {}};
    const int len = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(max_len)));
    for (int i = 0; i < len; ++i) {
      const int a = 1 + static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(ngen)));
      w.letters.push_back(draw_below(rng, 2) ? a : -a);
    }
    return w;
  };

  constexpr std::size_t kProductLengthCap = 4096;
  auto longest = [](const MappingClass& m) {
    std::size_t l = 1;
    for (const Word& w : m.endo().images()) l = std::max(l, w.length());
    return l;
  };
  const int attempts = 40 * std::max(count, 1);
  for (int t = 0; t < attempts && static_cast<int>(out.samples.size()) < count; ++t) {
    const auto kind = draw_below(rng, 4);
    const TorelliSample& base = seeds[draw_below(rng, seeds.size())];
    if (kind <= 1) {
      // Conjugate of a known construction by a short generator word.
      const GeneratorWord gw = random_gen_word(2);
      const MappingClass c = evaluate(gw);
      const MappingClass ci = evaluate_inverse(gw);
      const bool flip = kind == 1;
      const MappingClass& e = flip ? base.inverse : base.element;
      const MappingClass& ei = flip ? base.element : base.inverse;
      add({"conjugate of " + base.label + (flip ? " inverse" : "") + " by " + format_generator_word(gw), {g, {}},
           mc_compose(mc_compose(c, e), ci), mc_compose(mc_compose(c, ei), ci), base.bounding_pair, base.separating});
    } else if (kind == 2 && out.samples.size() >= 2) {
      // Product of two samples found so far.
      const std::size_t i = draw_below(rng, out.samples.size());
      const std::size_t j = draw_below(rng, out.samples.size());
      const TorelliSample a = out.samples[i];
      const TorelliSample b = out.samples[j];
      // Repeated products grow word length geometrically; keep them bounded.
      if (longest(a.element) * longest(b.element) > kProductLengthCap ||
          longest(a.inverse) * longest(b.inverse) > kProductLengthCap)
        continue;
      add({"product of #" + std::to_string(i) + " and #" + std::to_string(j), {g, {}},
           mc_compose(a.element, b.element), mc_compose(b.inverse, a.inverse), false,
           a.separating && b.separating});
    } else {
      // Short random generator word, kept only if it acts trivially on homology.
      const GeneratorWord gw = random_gen_word(4);
      const MappingClass e = evaluate(gw);
      if (symplectic_rep(e) != IntMatrix::identity(2 * g) || e == mc_identity(g)) continue;
      add({"word " + format_generator_word(gw), gw, e, evaluate_inverse(gw), false, false});
    }
  }
  out.shortfall = std::max(0, count - static_cast<int>(out.samples.size()));
  return out;
}

std::vector<SpMembership> sp_generation_certificate(int g, int max_depth) {
  const TwistTable& table = twist_generators(g);
  const int n = 2 * g;
  std::vector<SpMembership> targets;
  for (int i = 1; i <= g; ++i) {
    std::vector<Integer> x(static_cast<std::size_t>(n)), y(static_cast<std::size_t>(n));
    x[static_cast<std::size_t>(2 * i - 2)] = 1;
    y[static_cast<std::size_t>(2 * i - 1)] = 1;
    targets.push_back({"T(x" + std::to_string(i) + ")", transvection(x), false, {g, {}}});
    targets.push_back({"T(y" + std::to_string(i) + ")", transvection(y), false, {g, {}}});
  }
  for (int i = 1; i < g; ++i) {
    std::vector<Integer> v(static_cast<std::size_t>(n));
    v[static_cast<std::size_t>(2 * i - 2)] = 1;
    v[static_cast<std::size_t>(2 * i)] = -1;
    targets.push_back({"T(x" + std::to_string(i) + "-x" + std::to_string(i + 1) + ")", transvection(v), false, {g, {}}});
  }

  using Key = std::vector<long>;
  auto key_of = [&](const IntMatrix& m) {
    Key k;
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) k.push_back(m(r, c).get_si());
    return k;
  };
  // Letters: distinct generator matrices and their inverses.
  struct Step {
    int letter;
    IntMatrix m;
  };
  std::vector<Step> steps;
  std::set<Key> step_keys;
  for (std::size_t i = 0; i < table.generators.size(); ++i) {
    const int a = static_cast<int>(i) + 1;
    for (int s : {a, -a}) {
      const auto& t = table.generators[i];
      IntMatrix m = symplectic_rep(s > 0 ? t.twist : t.inverse);
      if (step_keys.insert(key_of(m)).second) steps.push_back({s, std::move(m)});
    }
  }

  std::map<Key, std::vector<int>> seen;
  std::deque<std::pair<IntMatrix, std::vector<int>>> queue;
  seen.emplace(key_of(IntMatrix::identity(n)), std::vector<int>{});
  queue.emplace_back(IntMatrix::identity(n), std::vector<int>{});
  auto remaining = [&] {
    return std::any_of(targets.begin(), targets.end(), [](const SpMembership& t) { return !t.found; });
  };
  auto check = [&](const Key& k, const std::vector<int>& word) {
    for (auto& t : targets)
      if (!t.found && key_of(t.matrix) == k) {
        t.found = true;
        t.word = {g, word};
      }
  };
  check(key_of(IntMatrix::identity(n)), {});
  while (!queue.empty() && remaining()) {
    auto [m, word] = std::move(queue.front());
    queue.pop_front();
    if (static_cast<int>(word.size()) >= max_depth) continue;
    for (const Step& s : steps) {
      IntMatrix next = m * s.m;
      Key k = key_of(next);
      if (seen.count(k)) continue;
      std::vector<int> w = word;
      w.push_back(s.letter);
      check(k, w);
      seen.emplace(k, w);
      queue.emplace_back(std::move(next), std::move(w));
    }
  }
  return targets;
}

}  // namespace lcsfi
