#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lcsfi/injection.hpp"
#include "lcsfi/integer.hpp"
#include "lcsfi/words.hpp"

namespace lcsfi {

// Monomial X_{a_1} ... X_{a_d}; letters 1-based.
using Monomial = std::vector<int>;

/// Noncommutative polynomial in X_1..X_n truncated above degree `cutoff`.
/// Stored densely per degree; the index of a monomial is its letter string
/// read in base n, so index order is lexicographic order.
class TruncPoly {
 public:
  TruncPoly() = default;
  TruncPoly(int rank, int cutoff);

  static TruncPoly one(int rank, int cutoff);

  int rank() const noexcept { return rank_; }
  int cutoff() const noexcept { return cutoff_; }

  const std::vector<Integer>& degree(int d) const { return parts_.at(static_cast<std::size_t>(d)); }
  std::vector<Integer>& degree(int d) { return parts_.at(static_cast<std::size_t>(d)); }

  Integer coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Integer& c);

  bool is_zero() const;
  bool degree_is_zero(int d) const;
  // Smallest d >= 1 with a nonzero degree-d part, or cutoff + 1.
  int lowest_positive_degree() const;

  TruncPoly truncated(int k) const;
  TruncPoly homogeneous_part(int d) const;

  // Sparse view, sorted by degree then lexicographically.
  std::vector<std::pair<Monomial, Integer>> terms() const;

  friend bool operator==(const TruncPoly&, const TruncPoly&) = default;

 private:
  int rank_ = 0;
  int cutoff_ = 0;
  std::vector<std::vector<Integer>> parts_;
};

TruncPoly operator+(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator-(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator*(const TruncPoly& a, const TruncPoly& b);
TruncPoly operator*(const Integer& c, const TruncPoly& a);
std::string format_poly(const TruncPoly& p);

// Right multiplication by 1 + X_i (letter > 0) or its inverse (letter < 0), in place.
void mul_letter(TruncPoly& p, Letter a);
// Letter relabeling X_i -> X_{f(i)}.
TruncPoly relabel(const TruncPoly& p, const FIInjection& f);

TruncPoly magnus_expand(const Word& w, int cutoff);

/// Lower central series class of a word, within a cutoff.
struct LcsClass {
  enum class Kind { Exact, AtLeast, Identity };
  Kind kind = Kind::Identity;
  int value = 0;  // exact class, or the lower bound for AtLeast

  bool at_least(int c) const { return kind == Kind::Identity || value >= c; }
  std::string to_string() const;
  friend bool operator==(const LcsClass&, const LcsClass&) = default;
};

LcsClass lcs_class(const Word& w, int kmax);

bool is_lyndon(const Monomial& w);
std::vector<Monomial> lyndon_basis(int n, int k);
Integer witt_rank(int n, int k);
// Standard bracketing: right factor is the longest proper Lyndon suffix.
std::pair<Monomial, Monomial> standard_factorization(const Monomial& lyndon);
std::string format_bracket(const Monomial& lyndon);

/// Element of gr_k F_n in Lyndon coordinates.
class LieElement {
 public:
  LieElement() = default;
  LieElement(int rank, int weight) : rank_(rank), weight_(weight) {}
  LieElement(int rank, int weight, std::map<Monomial, Integer> coords);

  static LieElement basis(int rank, const Monomial& lyndon);

  int rank() const noexcept { return rank_; }
  int weight() const noexcept { return weight_; }
  const std::map<Monomial, Integer>& coords() const noexcept { return coords_; }
  Integer coeff(const Monomial& lyndon) const;
  bool is_zero() const noexcept { return coords_.empty(); }

  LieElement& operator+=(const LieElement& o);
  LieElement& operator-=(const LieElement& o);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(const Integer& c, const LieElement& a);
  friend bool operator==(const LieElement&, const LieElement&) = default;

 private:
  void add(const Monomial& w, const Integer& c);

  int rank_ = 0;
  int weight_ = 0;
  std::map<Monomial, Integer> coords_;
};

std::string format_lie(const LieElement& v);

// Expansion of the standard bracket of a Lyndon word, homogeneous in degree |w|.
TruncPoly bracket_expansion(const Monomial& lyndon, int rank);
TruncPoly lie_expand(const LieElement& v, int cutoff);

LieElement lie_rewrite(const TruncPoly& p, int k);
LieElement gr_image(const Word& w, int k);
LieElement lie_pushforward(const FIInjection& f, const LieElement& v);

// Commutator word of a Lyndon bracket, and a word in gamma_k whose
// gr_image is v.
Word bracket_word(const Monomial& lyndon, int rank);
Word lie_lift(const LieElement& v);

}  // namespace lcsfi
