#include "lcsfi/free_lie.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <sstream>

#include "lcsfi/error.hpp"

namespace lcsfi {

namespace {

std::size_t ipow(int n, int d) {
  std::size_t r = 1;
  for (int i = 0; i < d; ++i) r *= static_cast<std::size_t>(n);
  return r;
}

std::size_t monomial_index(const Monomial& m, int n) {
  std::size_t idx = 0;
  for (int a : m) idx = idx * static_cast<std::size_t>(n) + static_cast<std::size_t>(a - 1);
  return idx;
}

Monomial monomial_at(std::size_t idx, int d, int n) {
  Monomial m(static_cast<std::size_t>(d));
  for (int i = d - 1; i >= 0; --i) {
    m[static_cast<std::size_t>(i)] = static_cast<int>(idx % static_cast<std::size_t>(n)) + 1;
    idx /= static_cast<std::size_t>(n);
  }
  return m;
}

void check_compatible(const TruncPoly& a, const TruncPoly& b) {
  if (a.rank() != b.rank()) throw Error(ErrorKind::RankMismatch, "polynomials over different alphabets");
}

}  // namespace

TruncPoly::TruncPoly(int rank, int cutoff) : rank_(rank), cutoff_(cutoff) {
  if (rank < 0 || cutoff < 0) throw Error(ErrorKind::InvalidArgument, "negative rank or cutoff");
  parts_.resize(static_cast<std::size_t>(cutoff) + 1);
  for (int d = 0; d <= cutoff; ++d) parts_[static_cast<std::size_t>(d)].resize(ipow(rank, d));
}

TruncPoly TruncPoly::one(int rank, int cutoff) {
  TruncPoly p(rank, cutoff);
  p.parts_[0][0] = 1;
  return p;
}

Integer TruncPoly::coeff(const Monomial& m) const {
  if (static_cast<int>(m.size()) > cutoff_) return 0;
  return parts_[m.size()][monomial_index(m, rank_)];
}

void TruncPoly::add_term(const Monomial& m, const Integer& c) {
  if (static_cast<int>(m.size()) > cutoff_) return;
  for (int a : m)
    if (a < 1 || a > rank_) throw Error(ErrorKind::MalformedWord, "monomial letter outside rank");
  parts_[m.size()][monomial_index(m, rank_)] += c;
}

bool TruncPoly::degree_is_zero(int d) const {
  if (d < 0 || d > cutoff_) return true;
  const auto& v = parts_[static_cast<std::size_t>(d)];
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

bool TruncPoly::is_zero() const {
  for (int d = 0; d <= cutoff_; ++d)
    if (!degree_is_zero(d)) return false;
  return true;
}

int TruncPoly::lowest_positive_degree() const {
  for (int d = 1; d <= cutoff_; ++d)
    if (!degree_is_zero(d)) return d;
  return cutoff_ + 1;
}

TruncPoly TruncPoly::truncated(int k) const {
  TruncPoly p(rank_, k);
  for (int d = 0; d <= std::min(k, cutoff_); ++d) p.parts_[static_cast<std::size_t>(d)] = parts_[static_cast<std::size_t>(d)];
  return p;
}

TruncPoly TruncPoly::homogeneous_part(int d) const {
  TruncPoly p(rank_, cutoff_);
  if (d >= 0 && d <= cutoff_) p.parts_[static_cast<std::size_t>(d)] = parts_[static_cast<std::size_t>(d)];
  return p;
}

std::vector<std::pair<Monomial, Integer>> TruncPoly::terms() const {
  std::vector<std::pair<Monomial, Integer>> out;
  for (int d = 0; d <= cutoff_; ++d) {
    const auto& v = parts_[static_cast<std::size_t>(d)];
    for (std::size_t i = 0; i < v.size(); ++i)
      if (v[i] != 0) out.emplace_back(monomial_at(i, d, rank_), v[i]);
  }
  return out;
}

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b) {
  check_compatible(a, b);
  TruncPoly r(a.rank(), std::min(a.cutoff(), b.cutoff()));
  for (int d = 0; d <= r.cutoff(); ++d) {
    auto& out = r.degree(d);
    const auto& x = a.degree(d);
    const auto& y = b.degree(d);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
  }
  return r;
}

TruncPoly operator-(const TruncPoly& a, const TruncPoly& b) {
  check_compatible(a, b);
  TruncPoly r(a.rank(), std::min(a.cutoff(), b.cutoff()));
  for (int d = 0; d <= r.cutoff(); ++d) {
    auto& out = r.degree(d);
    const auto& x = a.degree(d);
    const auto& y = b.degree(d);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
  }
  return r;
}

TruncPoly operator*(const TruncPoly& a, const TruncPoly& b) {
  check_compatible(a, b);
  const int k = std::min(a.cutoff(), b.cutoff());
  const int n = a.rank();
  TruncPoly r(n, k);
  for (int i = 0; i <= k; ++i) {
    const auto& x = a.degree(i);
    for (int j = 0; i + j <= k; ++j) {
      const auto& y = b.degree(j);
      auto& out = r.degree(i + j);
      const std::size_t stride = ipow(n, j);
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p] == 0) continue;
        const std::size_t base = p * stride;
        for (std::size_t q = 0; q < y.size(); ++q)
          if (y[q] != 0) out[base + q] += x[p] * y[q];
      }
    }
  }
  return r;
}

TruncPoly operator*(const Integer& c, const TruncPoly& a) {
  TruncPoly r = a;
  for (int d = 0; d <= r.cutoff(); ++d)
    for (auto& x : r.degree(d)) x *= c;
  return r;
}

std::string format_poly(const TruncPoly& p) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (m.empty()) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    for (int a : m) out << 'X' << a;
  }
  return first ? "0" : out.str();
}

void mul_letter(TruncPoly& p, Letter a) {
  const int n = p.rank();
  const std::size_t i = static_cast<std::size_t>(std::abs(a) - 1);
  if (a > 0) {
    for (int d = p.cutoff(); d >= 1; --d) {
      const auto& prev = p.degree(d - 1);
      auto& cur = p.degree(d);
      for (std::size_t idx = 0; idx < prev.size(); ++idx)
        if (prev[idx] != 0) cur[idx * static_cast<std::size_t>(n) + i] += prev[idx];
    }
  } else {
    // Q = P (1 + X_i)^{-1} satisfies Q_d = P_d - Q_{d-1} X_i.
    for (int d = 1; d <= p.cutoff(); ++d) {
      const auto& prev = p.degree(d - 1);
      auto& cur = p.degree(d);
      for (std::size_t idx = 0; idx < prev.size(); ++idx)
        if (prev[idx] != 0) cur[idx * static_cast<std::size_t>(n) + i] -= prev[idx];
    }
  }
}

TruncPoly relabel(const TruncPoly& p, const FIInjection& f) {
  if (f.source() != p.rank()) throw Error(ErrorKind::RankMismatch, "injection source differs from polynomial rank");
  TruncPoly r(f.target(), p.cutoff());
  for (auto [m, c] : p.terms()) {
    for (int& a : m) a = f(a);
    r.add_term(m, c);
  }
  return r;
}

TruncPoly magnus_expand(const Word& w, int cutoff) {
  if (cutoff < 0) throw Error(ErrorKind::InvalidArgument, "negative cutoff");
  TruncPoly p = TruncPoly::one(w.rank(), cutoff);
  for (Letter a : w.letters()) mul_letter(p, a);
  return p;
}

std::string LcsClass::to_string() const {
  switch (kind) {
    case Kind::Exact: return std::to_string(value);
    case Kind::AtLeast: return ">=" + std::to_string(value);
    case Kind::Identity: return "identity";
  }
  return "";
}

LcsClass lcs_class(const Word& w, int kmax) {
  if (kmax < 1) throw Error(ErrorKind::InvalidArgument, "kmax must be at least 1");
  if (w.empty()) return {LcsClass::Kind::Identity, 0};
  const int d = magnus_expand(w, kmax).lowest_positive_degree();
  if (d <= kmax) return {LcsClass::Kind::Exact, d};
  return {LcsClass::Kind::AtLeast, kmax + 1};
}

bool is_lyndon(const Monomial& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!std::lexicographical_compare(w.begin(), w.end(), w.begin() + static_cast<std::ptrdiff_t>(i), w.end()))
      return false;
  return true;
}

std::vector<Monomial> lyndon_basis(int n, int k) {
  std::vector<Monomial> out;
  if (n < 1 || k < 1) return out;
  // Duval's generation in lexicographic order.
  Monomial w{1};
  while (!w.empty()) {
    if (static_cast<int>(w.size()) == k) out.push_back(w);
    const std::size_t len = w.size();
    while (static_cast<int>(w.size()) < k) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == n) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  return out;
}

Integer witt_rank(int n, int k) {
  if (n < 1 || k < 1) return 0;
  auto mobius = [](int d) {
    int r = 1;
    for (int p = 2; p * p <= d; ++p) {
      if (d % p) continue;
      d /= p;
      if (d % p == 0) return 0;
      r = -r;
    }
    if (d > 1) r = -r;
    return r;
  };
  Integer sum = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k / d));
    sum += mu * p;
  }
  return sum / k;
}

std::pair<Monomial, Monomial> standard_factorization(const Monomial& w) {
  if (w.size() < 2 || !is_lyndon(w)) throw Error(ErrorKind::InvalidArgument, "standard factorization needs a Lyndon word of length >= 2");
  for (std::size_t i = 1; i < w.size(); ++i) {
    Monomial v(w.begin() + static_cast<std::ptrdiff_t>(i), w.end());
    if (is_lyndon(v)) return {Monomial(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i)), v};
  }
  throw Error(ErrorKind::InvalidArgument, "no Lyndon suffix");
}

std::string format_bracket(const Monomial& w) {
  if (w.size() == 1) return "x" + std::to_string(w[0]);
  auto [u, v] = standard_factorization(w);
  return "[" + format_bracket(u) + "," + format_bracket(v) + "]";
}

LieElement::LieElement(int rank, int weight, std::map<Monomial, Integer> coords) : rank_(rank), weight_(weight) {
  for (auto& [w, c] : coords) {
    if (static_cast<int>(w.size()) != weight || !is_lyndon(w))
      throw Error(ErrorKind::InvalidArgument, "Lie coordinates must be indexed by Lyndon words of the weight");
    for (int a : w)
      if (a < 1 || a > rank) throw Error(ErrorKind::MalformedWord, "Lyndon word letter outside rank");
    add(w, c);
  }
}

LieElement LieElement::basis(int rank, const Monomial& lyndon) {
  return LieElement(rank, static_cast<int>(lyndon.size()), {{lyndon, Integer(1)}});
}

Integer LieElement::coeff(const Monomial& lyndon) const {
  auto it = coords_.find(lyndon);
  return it == coords_.end() ? Integer(0) : it->second;
}

void LieElement::add(const Monomial& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = coords_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coords_.erase(it);
  }
}

LieElement& LieElement::operator+=(const LieElement& o) {
  if (rank_ != o.rank_ || weight_ != o.weight_) throw Error(ErrorKind::RankMismatch, "Lie elements of different rank or weight");
  for (const auto& [w, c] : o.coords_) add(w, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& o) {
  if (rank_ != o.rank_ || weight_ != o.weight_) throw Error(ErrorKind::RankMismatch, "Lie elements of different rank or weight");
  for (const auto& [w, c] : o.coords_) add(w, -c);
  return *this;
}

LieElement operator*(const Integer& c, const LieElement& a) {
  LieElement r(a.rank(), a.weight());
  for (const auto& [w, x] : a.coords()) r.add(w, c * x);
  return r;
}

std::string format_lie(const LieElement& v) {
  if (v.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [w, c] : v.coords()) {
    const Integer mag = abs(c);
    out << (first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + "));
    first = false;
    if (mag != 1) out << mag.get_str() << '*';
    out << format_bracket(w);
  }
  return out.str();
}

namespace {

using SparsePoly = std::vector<std::pair<Monomial, Integer>>;

SparsePoly sparse_commutator(const SparsePoly& a, const SparsePoly& b) {
  std::map<Monomial, Integer> acc;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial ab = ma;
      ab.insert(ab.end(), mb.begin(), mb.end());
      acc[ab] += ca * cb;
      Monomial ba = mb;
      ba.insert(ba.end(), ma.begin(), ma.end());
      acc[ba] -= ca * cb;
    }
  SparsePoly out;
  for (auto& [m, c] : acc)
    if (c != 0) out.emplace_back(m, c);
  return out;
}

// Read-mostly cache of bracket expansions, keyed by Lyndon word.
const SparsePoly& cached_expansion(const Monomial& w) {
  static std::mutex mu;
  static std::map<Monomial, SparsePoly> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
  }
  SparsePoly e;
  if (w.size() == 1) {
    e.emplace_back(w, Integer(1));
  } else {
    auto [u, v] = standard_factorization(w);
    e = sparse_commutator(cached_expansion(u), cached_expansion(v));
  }
  std::lock_guard lock(mu);
  return cache.try_emplace(w, std::move(e)).first->second;
}

}  // namespace

TruncPoly bracket_expansion(const Monomial& lyndon, int rank) {
  TruncPoly p(rank, static_cast<int>(lyndon.size()));
  for (const auto& [m, c] : cached_expansion(lyndon)) p.add_term(m, c);
  return p;
}

TruncPoly lie_expand(const LieElement& v, int cutoff) {
  TruncPoly p(v.rank(), cutoff);
  if (v.weight() > cutoff) return p;
  for (const auto& [w, c] : v.coords())
    for (const auto& [m, x] : cached_expansion(w)) p.add_term(m, c * x);
  return p;
}

LieElement lie_rewrite(const TruncPoly& p, int k) {
  if (k < 1 || k > p.cutoff()) throw Error(ErrorKind::InvalidArgument, "rewrite degree outside the polynomial's range");
  for (int d = 0; d <= p.cutoff(); ++d)
    if (d != k && !p.degree_is_zero(d))
      throw Error(ErrorKind::InvalidArgument, "polynomial is not homogeneous of degree " + std::to_string(k));
  const int n = p.rank();
  std::vector<Integer> residual = p.degree(k);
  std::map<Monomial, Integer> coords;
  for (std::size_t idx = 0; idx < residual.size(); ++idx) {
    if (residual[idx] == 0) continue;
    Monomial w = monomial_at(idx, k, n);
    if (!is_lyndon(w)) throw Error(ErrorKind::NotLieElement, "leading monomial is not a Lyndon word");
    const Integer c = residual[idx];
    for (const auto& [m, x] : cached_expansion(w)) residual[monomial_index(m, n)] -= c * x;
    coords.emplace(std::move(w), c);
  }
  return LieElement(n, k, std::move(coords));
}

LieElement gr_image(const Word& w, int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "weight must be at least 1");
  const TruncPoly p = magnus_expand(w, k);
  if (p.lowest_positive_degree() < k)
    throw Error(ErrorKind::NotInLayer, "word has class " + std::to_string(p.lowest_positive_degree()) + " < " + std::to_string(k));
  return lie_rewrite(p.homogeneous_part(k), k);
}

LieElement lie_pushforward(const FIInjection& f, const LieElement& v) {
  if (f.source() != v.rank()) throw Error(ErrorKind::RankMismatch, "injection source differs from Lie element rank");
  if (v.is_zero()) return LieElement(f.target(), v.weight());
  return lie_rewrite(relabel(lie_expand(v, v.weight()), f), v.weight());
}

Word bracket_word(const Monomial& lyndon, int rank) {
  if (lyndon.size() == 1) return Word::generator(rank, lyndon[0]);
  auto [u, v] = standard_factorization(lyndon);
  return commutator(bracket_word(u, rank), bracket_word(v, rank));
}

Word lie_lift(const LieElement& v) {
  Word w(v.rank());
  for (const auto& [l, c] : v.coords()) w = word_mul(w, word_pow(bracket_word(l, v.rank()), c.get_si()));
  return w;
}

}  // namespace lcsfi
