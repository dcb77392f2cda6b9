#pragma once

#include <optional>
#include <vector>

#include "lcsfi/free_lie.hpp"
#include "lcsfi/intmat.hpp"
#include "lcsfi/words.hpp"

namespace lcsfi {

class NilEndo;

/// Element of N_n(k) = F_n / gamma_{k+1}, held as its truncated Magnus expansion.
class NilElement {
 public:
  NilElement() = default;
  static NilElement identity(int rank, int cls);
  static NilElement from_word(const Word& w, int cls);

  int rank() const noexcept { return expansion_.rank(); }
  int cls() const noexcept { return expansion_.cutoff(); }
  const TruncPoly& expansion() const noexcept { return expansion_; }
  bool is_identity() const;

  friend bool operator==(const NilElement&, const NilElement&) = default;

 private:
  explicit NilElement(TruncPoly p) : expansion_(std::move(p)) {}
  friend NilElement nil_mul(const NilElement&, const NilElement&);
  friend NilElement nil_inv(const NilElement&);
  friend NilElement nil_truncate(const NilElement&, int);
  friend NilElement nil_relabel(const FIInjection&, const NilElement&);
  friend NilElement nilendo_apply(const NilEndo&, const NilElement&);

  TruncPoly expansion_;
};

NilElement nil_from_word(const Word& w, int cls);
NilElement nil_mul(const NilElement& a, const NilElement& b);
NilElement nil_inv(const NilElement& a);
NilElement nil_truncate(const NilElement& a, int cls);
NilElement nil_relabel(const FIInjection& f, const NilElement& a);

/// Endomorphism of N_n(k), by the images of the generators.
class NilEndo {
 public:
  NilEndo() = default;
  NilEndo(int rank, int cls, std::vector<NilElement> images);

  static NilEndo identity(int rank, int cls);
  static NilEndo from_free_endo(const FreeEndo& phi, int cls);

  int rank() const noexcept { return rank_; }
  int cls() const noexcept { return cls_; }
  const std::vector<NilElement>& images() const noexcept { return images_; }
  const NilElement& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }
  bool is_identity() const;

  friend bool operator==(const NilEndo&, const NilEndo&) = default;

 private:
  int rank_ = 0;
  int cls_ = 0;
  std::vector<NilElement> images_;
};

NilElement nilendo_apply(const NilEndo& phi, const NilElement& a);
// (phi o psi): psi first.
NilEndo nilendo_compose(const NilEndo& phi, const NilEndo& psi);

// Column j = image of x_j in N_n(1) = Z^n.
IntMatrix abelianization(const NilEndo& phi);

struct AutomorphismCheck {
  bool invertible = false;
  Integer determinant;
  std::optional<NilEndo> inverse;
};

AutomorphismCheck is_automorphism(const NilEndo& phi);
NilEndo aut_inverse(const NilEndo& phi);
NilEndo rho_project(const NilEndo& phi);

/// Hom(Z^n, gr_k F_n): one Lie element per generator.
class KernelHom {
 public:
  KernelHom() = default;
  KernelHom(int rank, int weight, std::vector<LieElement> columns);

  static KernelHom zero(int rank, int weight);

  int rank() const noexcept { return rank_; }
  int weight() const noexcept { return weight_; }
  const std::vector<LieElement>& columns() const noexcept { return columns_; }
  bool is_zero() const;

  friend KernelHom operator+(const KernelHom& a, const KernelHom& b);
  friend bool operator==(const KernelHom&, const KernelHom&) = default;

 private:
  int rank_ = 0;
  int weight_ = 0;
  std::vector<LieElement> columns_;
};

KernelHom psi_iso(const NilEndo& phi);
NilEndo psi_inverse(const KernelHom& h);
// Coordinates of h in the basis e_i (x) b over generators i and Lyndon words b.
std::vector<Integer> kernel_hom_coords(const KernelHom& h);

NilEndo fi_pushforward_aut(const FIInjection& f, const NilEndo& phi);

// Largest k <= cutoff with phi(x_i) x_i^{-1} in gamma_{k+1} for all i.
int ia_level(const FreeEndo& phi, int cutoff);
// Same, read off a class-K endomorphism; capped at K.
int ia_level(const NilEndo& phi);

// Commutator [a, b] = a b a^{-1} b^{-1} of automorphisms.
NilEndo nilendo_commutator(const NilEndo& a, const NilEndo& b);

}  // namespace lcsfi
