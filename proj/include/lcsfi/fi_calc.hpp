#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "lcsfi/injection.hpp"
#include "lcsfi/intmat.hpp"

namespace lcsfi {

struct FITerm {
  int gen = 0;  // 0-based generator index
  FIInjection inj;
  Integer coeff;
};

struct FIRelation {
  int degree = 0;
  std::vector<FITerm> terms;
};

/// Finite presentation  ⊕ P^{m_j} -> ⊕ P^{n_i} -> F -> 0.
class FIPresentation {
 public:
  FIPresentation() = default;
  FIPresentation(std::vector<int> generators, std::vector<FIRelation> relations);

  static FIPresentation principal(int n);
  static FIPresentation zero() { return {}; }

  const std::vector<int>& generators() const noexcept { return generators_; }
  const std::vector<FIRelation>& relations() const noexcept { return relations_; }
  int max_generator_degree() const;

 private:
  std::vector<int> generators_;
  std::vector<FIRelation> relations_;
};

// Free abelian group ⊕_i Z[Inj(n_i, m)]: block offsets and total rank.
struct FreeLevel {
  std::vector<std::size_t> offsets;
  std::size_t rank = 0;
};

FreeLevel free_level(const std::vector<int>& generators, int m);
// Rows: every pushforward of every relation into degree m.
IntMatrix relation_rows(const FIPresentation& f, int m);

struct PPEval {
  AbelianGroup group;
  std::vector<FIInjection> basis;
};

PPEval pp_eval(int n, int m);
AbelianGroup fi_eval(const FIPresentation& f, int m);

// Post-composition with i -> i (i <= s), i -> i+1 (i > s) on the free level,
// as a row map Z^{rank_m} -> Z^{rank_{m+1}}.
IntMatrix free_shift_rows(const std::vector<int>& generators, int m, int s);

// Column convention: column j is the image of basis element j of F_m.
IntMatrix fi_shift_maps(const FIPresentation& f, int m);

struct KerCoker {
  AbelianGroup kernel;
  AbelianGroup cokernel;
};

KerCoker fi_ker_coker(const FIPresentation& f, int m);

/// Module built from a presentation by Ker, Coker and quotient-kernels,
/// evaluated degreewise as a subquotient A_m / B_m of a free level.
class FIModuleExpr {
 public:
  struct Subquotient {
    IntMatrix a;  // row basis of the numerator lattice
    IntMatrix b;  // generators of the denominator lattice, inside span(a)
    int shift = 0;
  };

  static std::shared_ptr<FIModuleExpr> base(FIPresentation f);
  // Kernel of F -> F / extra, for extra relations on the same generators.
  static std::shared_ptr<FIModuleExpr> relation_kernel(FIPresentation f, std::vector<FIRelation> extra);
  static std::shared_ptr<FIModuleExpr> quotient(FIPresentation f, std::vector<FIRelation> extra);
  static std::shared_ptr<FIModuleExpr> ker(std::shared_ptr<FIModuleExpr> inner);
  static std::shared_ptr<FIModuleExpr> coker(std::shared_ptr<FIModuleExpr> inner);

  const Subquotient& eval(int m);
  AbelianGroup value(int m);
  int max_generator_degree() const;

 private:
  enum class Kind { Base, RelationKernel, Ker, Coker };
  FIModuleExpr() = default;

  Kind kind_ = Kind::Base;
  FIPresentation pres_;
  std::vector<FIRelation> extra_;
  std::shared_ptr<FIModuleExpr> inner_;
  std::mutex mu_;
  std::map<int, Subquotient> memo_;
};

struct DegreeVerdict {
  enum class Kind { Certified, Refuted, Inconclusive };
  Kind kind = Kind::Inconclusive;
  int degree = 0;
  int window = 0;
  int witness = -1;      // degree m where a required vanishing failed
  std::string path;      // Ker/Coker path to the failing module
  std::string to_string() const;
};

DegreeVerdict fi_degree_certify(const FIPresentation& f, int d, int n_bound);
DegreeVerdict fi_degree_certify(const std::shared_ptr<FIModuleExpr>& f, int d, int n_bound);

// Alternating rank sum of the six-term sequence for 0 -> K -> F -> Q -> 0 at degree m.
int six_term_rank_defect(const FIPresentation& f, const std::vector<FIRelation>& extra, int m);

struct TensorSummand {
  std::vector<int> n_subset;  // N ⊆ {1..n}
  std::vector<int> m_subset;  // M ⊆ {1..m}
  std::vector<int> sigma;     // sigma[i] = image of n_subset[i]
  int degree = 0;
};

std::vector<TensorSummand> tensor_decompose(int n, int m);

struct RankIdentity {
  Integer lhs;
  Integer rhs;
  Integer decomposition_sum;
  bool holds() const { return lhs == rhs && rhs == decomposition_sum; }
};

RankIdentity tensor_rank_identity(int n, int m, int k);

struct DupReduction {
  int slot = 0;       // least i with i and i+m both missed
  FIInjection g;      // (m-1) -> m, order preserving, missing slot
  FIInjection f_prime;  // n -> 2(m-1)
};

// f : n -> 2m with m > n.
DupReduction dup_reduce(const FIInjection& f);

}  // namespace lcsfi
