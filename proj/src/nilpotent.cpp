#include "lcsfi/nilpotent.hpp"

#include <algorithm>
#include <cstdlib>

#include "lcsfi/error.hpp"

namespace lcsfi {

namespace {

void check_same(const NilElement& a, const NilElement& b) {
  if (a.rank() != b.rank() || a.cls() != b.cls())
    throw Error(ErrorKind::RankMismatch, "nilpotent elements of different rank or class");
}

// Product truncated at `cutoff`, independent of the operands' own cutoffs.
TruncPoly mul_to(const TruncPoly& a, const TruncPoly& b, int cutoff) {
  const int n = a.rank();
  TruncPoly r(n, cutoff);
  for (int i = 0; i <= std::min(cutoff, a.cutoff()); ++i) {
    const auto& x = a.degree(i);
    for (int j = 0; i + j <= cutoff && j <= b.cutoff(); ++j) {
      const auto& y = b.degree(j);
      auto& out = r.degree(i + j);
      const std::size_t stride = y.size();
      for (std::size_t p = 0; p < x.size(); ++p) {
        if (x[p] == 0) continue;
        for (std::size_t q = 0; q < stride; ++q)
          if (y[q] != 0) out[p * stride + q] += x[p] * y[q];
      }
    }
  }
  return r;
}

// Left derivative: the part of p whose monomials start with letter j, with that letter removed.
TruncPoly left_derivative(const TruncPoly& p, int j, int cutoff) {
  const int n = p.rank();
  TruncPoly q(n, cutoff);
  for (int d = 0; d <= cutoff && d + 1 <= p.cutoff(); ++d) {
    const auto& src = p.degree(d + 1);
    auto& dst = q.degree(d);
    const std::size_t block = dst.size();
    std::copy(src.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * block),
              src.begin() + static_cast<std::ptrdiff_t>((static_cast<std::size_t>(j) + 1) * block), dst.begin());
  }
  return q;
}

// p(Y_1, ..., Y_n) truncated at `cutoff`, where Y_i have no constant term.
TruncPoly substitute(const std::vector<TruncPoly>& y, const TruncPoly& p, int cutoff) {
  const int n = p.rank();
  TruncPoly r(static_cast<int>(y.empty() ? n : y.front().rank()), cutoff);
  r.degree(0)[0] = p.degree(0)[0];
  if (cutoff == 0) return r;
  for (int j = 0; j < n; ++j) {
    TruncPoly q = left_derivative(p, j, cutoff - 1);
    if (q.is_zero()) continue;
    TruncPoly s = substitute(y, q, cutoff - 1);
    r = r + mul_to(y[static_cast<std::size_t>(j)], s, cutoff);
  }
  return r;
}

NilElement generator_power_product(const std::vector<Integer>& exponents, int cls) {
  const int n = static_cast<int>(exponents.size());
  Word w(n);
  for (int i = 0; i < n; ++i)
    w = word_mul(w, word_pow(Word::generator(n, i + 1), exponents[static_cast<std::size_t>(i)].get_si()));
  return nil_from_word(w, cls);
}

}  // namespace

NilElement NilElement::identity(int rank, int cls) { return NilElement(TruncPoly::one(rank, cls)); }

NilElement NilElement::from_word(const Word& w, int cls) {
  if (cls < 1) throw Error(ErrorKind::InvalidArgument, "nilpotency class must be at least 1");
  return NilElement(magnus_expand(w, cls));
}

bool NilElement::is_identity() const { return expansion_ == TruncPoly::one(rank(), cls()); }

NilElement nil_from_word(const Word& w, int cls) { return NilElement::from_word(w, cls); }

NilElement nil_mul(const NilElement& a, const NilElement& b) {
  check_same(a, b);
  return NilElement(a.expansion_ * b.expansion_);
}

NilElement nil_inv(const NilElement& a) {
  // (1 + u)^{-1} = 1 - u + u^2 - ..., finite since u has no constant term.
  const int k = a.cls();
  TruncPoly u = a.expansion_ - TruncPoly::one(a.rank(), k);
  TruncPoly term = TruncPoly::one(a.rank(), k);
  TruncPoly sum = term;
  for (int i = 1; i <= k; ++i) {
    term = term * u;
    sum = (i % 2 ? sum - term : sum + term);
  }
  return NilElement(std::move(sum));
}

NilElement nil_truncate(const NilElement& a, int cls) {
  if (cls < 1 || cls > a.cls()) throw Error(ErrorKind::InvalidArgument, "cannot truncate to that class");
  return NilElement(a.expansion_.truncated(cls));
}

NilElement nil_relabel(const FIInjection& f, const NilElement& a) { return NilElement(relabel(a.expansion_, f)); }

NilEndo::NilEndo(int rank, int cls, std::vector<NilElement> images) : rank_(rank), cls_(cls), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank) throw Error(ErrorKind::RankMismatch, "wrong number of images");
  for (const NilElement& a : images_)
    if (a.rank() != rank || a.cls() != cls) throw Error(ErrorKind::RankMismatch, "image has wrong rank or class");
}

NilEndo NilEndo::identity(int rank, int cls) {
  std::vector<NilElement> images;
  for (int i = 1; i <= rank; ++i) images.push_back(nil_from_word(Word::generator(rank, i), cls));
  return NilEndo(rank, cls, std::move(images));
}

NilEndo NilEndo::from_free_endo(const FreeEndo& phi, int cls) {
  std::vector<NilElement> images;
  for (const Word& w : phi.images()) images.push_back(nil_from_word(w, cls));
  return NilEndo(phi.rank(), cls, std::move(images));
}

bool NilEndo::is_identity() const { return *this == identity(rank_, cls_); }

NilElement nilendo_apply(const NilEndo& phi, const NilElement& a) {
  if (phi.rank() != a.rank() || phi.cls() != a.cls())
    throw Error(ErrorKind::RankMismatch, "endomorphism and element differ in rank or class");
  std::vector<TruncPoly> y;
  y.reserve(phi.images().size());
  for (const NilElement& im : phi.images()) y.push_back(im.expansion() - TruncPoly::one(phi.rank(), phi.cls()));
  return NilElement(substitute(y, a.expansion(), a.cls()));
}

NilEndo nilendo_compose(const NilEndo& phi, const NilEndo& psi) {
  if (phi.rank() != psi.rank() || phi.cls() != psi.cls())
    throw Error(ErrorKind::RankMismatch, "cannot compose endomorphisms of different rank or class");
  std::vector<NilElement> images;
  for (const NilElement& a : psi.images()) images.push_back(nilendo_apply(phi, a));
  return NilEndo(phi.rank(), phi.cls(), std::move(images));
}

IntMatrix abelianization(const NilEndo& phi) {
  const int n = phi.rank();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const auto& lin = phi.images()[static_cast<std::size_t>(j)].expansion().degree(1);
    for (int i = 0; i < n; ++i) m(i, j) = lin[static_cast<std::size_t>(i)];
  }
  return m;
}

AutomorphismCheck is_automorphism(const NilEndo& phi) {
  AutomorphismCheck c;
  c.determinant = determinant(abelianization(phi));
  c.invertible = abs(c.determinant) == 1;
  if (c.invertible) c.inverse = aut_inverse(phi);
  return c;
}

NilEndo aut_inverse(const NilEndo& phi) {
  const int n = phi.rank();
  const int k = phi.cls();
  const IntMatrix m = abelianization(phi);
  const RowEchelon e = row_echelon(m, true);
  if (e.rank != n || e.h != IntMatrix::identity(n))
    throw Error(ErrorKind::NotAutomorphism, "abelianization is not invertible over Z");
  const IntMatrix& minv = e.u;  // U M = I

  std::vector<NilElement> images;
  for (int j = 0; j < n; ++j) {
    std::vector<Integer> col(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) col[static_cast<std::size_t>(i)] = minv(i, j);
    images.push_back(generator_power_product(col, k));
  }
  NilEndo psi(n, k, std::move(images));

  for (int c = 2; c <= k; ++c) {
    const NilEndo chi = nilendo_compose(phi, psi);
    std::vector<NilElement> corrected;
    for (int i = 1; i <= n; ++i) {
      const NilElement gen = nil_from_word(Word::generator(n, i), k);
      const NilElement err = nil_mul(chi.image(i), nil_inv(gen));
      const TruncPoly& p = err.expansion();
      if (p.lowest_positive_degree() < c) throw Error(ErrorKind::NotAutomorphism, "inverse lifting lost a layer");
      const LieElement layer = lie_rewrite(p.truncated(c).homogeneous_part(c), c);
      const NilElement fix = nilendo_apply(psi, nil_from_word(lie_lift(layer), k));
      corrected.push_back(nil_mul(psi.image(i), nil_inv(fix)));
    }
    psi = NilEndo(n, k, std::move(corrected));
  }
  if (!nilendo_compose(phi, psi).is_identity())
    throw Error(ErrorKind::NotAutomorphism, "inverse lifting did not converge");
  return psi;
}

NilEndo rho_project(const NilEndo& phi) {
  if (phi.cls() < 2) throw Error(ErrorKind::InvalidArgument, "rho needs class at least 2");
  std::vector<NilElement> images;
  for (const NilElement& a : phi.images()) images.push_back(nil_truncate(a, phi.cls() - 1));
  return NilEndo(phi.rank(), phi.cls() - 1, std::move(images));
}

KernelHom::KernelHom(int rank, int weight, std::vector<LieElement> columns)
    : rank_(rank), weight_(weight), columns_(std::move(columns)) {
  if (static_cast<int>(columns_.size()) != rank) throw Error(ErrorKind::RankMismatch, "wrong number of columns");
  for (const LieElement& v : columns_)
    if (v.rank() != rank || v.weight() != weight) throw Error(ErrorKind::RankMismatch, "column has wrong rank or weight");
}

KernelHom KernelHom::zero(int rank, int weight) {
  return KernelHom(rank, weight, std::vector<LieElement>(static_cast<std::size_t>(rank), LieElement(rank, weight)));
}

bool KernelHom::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const LieElement& v) { return v.is_zero(); });
}

KernelHom operator+(const KernelHom& a, const KernelHom& b) {
  if (a.rank_ != b.rank_ || a.weight_ != b.weight_) throw Error(ErrorKind::RankMismatch, "homs of different shape");
  std::vector<LieElement> cols;
  for (std::size_t i = 0; i < a.columns_.size(); ++i) cols.push_back(a.columns_[i] + b.columns_[i]);
  return KernelHom(a.rank_, a.weight_, std::move(cols));
}

KernelHom psi_iso(const NilEndo& phi) {
  const int n = phi.rank();
  const int k = phi.cls();
  std::vector<LieElement> cols;
  for (int i = 1; i <= n; ++i) {
    const NilElement d = nil_mul(phi.image(i), nil_inv(nil_from_word(Word::generator(n, i), k)));
    if (d.expansion().lowest_positive_degree() < k)
      throw Error(ErrorKind::NotInKernel, "image of x" + std::to_string(i) + " moves below degree " + std::to_string(k));
    cols.push_back(lie_rewrite(d.expansion().homogeneous_part(k), k));
  }
  return KernelHom(n, k, std::move(cols));
}

NilEndo psi_inverse(const KernelHom& h) {
  const int n = h.rank();
  const int k = h.weight();
  std::vector<NilElement> images;
  for (int i = 1; i <= n; ++i) {
    const Word w = word_mul(Word::generator(n, i), lie_lift(h.columns()[static_cast<std::size_t>(i - 1)]));
    images.push_back(nil_from_word(w, k));
  }
  return NilEndo(n, k, std::move(images));
}

std::vector<Integer> kernel_hom_coords(const KernelHom& h) {
  const auto basis = lyndon_basis(h.rank(), h.weight());
  std::vector<Integer> out;
  for (const LieElement& col : h.columns())
    for (const Monomial& b : basis) out.push_back(col.coeff(b));
  return out;
}

NilEndo fi_pushforward_aut(const FIInjection& f, const NilEndo& phi) {
  if (f.source() != phi.rank()) throw Error(ErrorKind::RankMismatch, "injection source differs from endomorphism rank");
  const int m = f.target();
  std::vector<NilElement> images;
  for (int i = 1; i <= m; ++i) images.push_back(nil_from_word(Word::generator(m, i), phi.cls()));
  for (int j = 1; j <= f.source(); ++j) images[static_cast<std::size_t>(f(j) - 1)] = nil_relabel(f, phi.image(j));
  return NilEndo(m, phi.cls(), std::move(images));
}

int ia_level(const FreeEndo& phi, int cutoff) {
  if (cutoff < 1) throw Error(ErrorKind::InvalidArgument, "cutoff must be at least 1");
  int level = cutoff;
  for (int i = 1; i <= phi.rank(); ++i) {
    const Word d = word_mul(phi.image(i), word_inv(Word::generator(phi.rank(), i)));
    const LcsClass c = lcs_class(d, cutoff + 1);
    if (c.kind == LcsClass::Kind::Exact) level = std::min(level, c.value - 1);
  }
  return level;
}

int ia_level(const NilEndo& phi) {
  const int n = phi.rank();
  int level = phi.cls();
  for (int i = 1; i <= n; ++i) {
    const NilElement d = nil_mul(phi.image(i), nil_inv(nil_from_word(Word::generator(n, i), phi.cls())));
    level = std::min(level, d.expansion().lowest_positive_degree() - 1);
  }
  return level;
}

NilEndo nilendo_commutator(const NilEndo& a, const NilEndo& b) {
  return nilendo_compose(nilendo_compose(a, b), nilendo_compose(aut_inverse(a), aut_inverse(b)));
}

}  // namespace lcsfi
