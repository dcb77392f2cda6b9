#include "doctest.h"

#include <set>

#include "lcsfi/error.hpp"
#include "lcsfi/fi_calc.hpp"
#include "lcsfi/random.hpp"

using namespace lcsfi;

namespace {
// One generator in degree 1 with the relation 2 * id.
FIPresentation two_torsion() {
  return FIPresentation({1}, {FIRelation{1, {FITerm{0, FIInjection::identity(1), 2}}}});
}
}  // namespace

TEST_CASE("injections") {
  CHECK(all_injections(2, 3).size() == 6);
  CHECK(injection_count(3, 2) == 0);
  CHECK(injection_count(0, 5) == 1);
  const FIInjection f(4, {3, 1});
  CHECK(all_injections(2, 4)[injection_index(f)] == f);
  CHECK(compose(FIInjection(5, {1, 2, 5, 4}), f) == FIInjection(5, {5, 1}));
  CHECK(disjoint_union(FIInjection(2, {2}), FIInjection(2, {1})) == FIInjection(4, {2, 3}));
  CHECK_THROWS_AS(FIInjection(2, {1, 1}), Error);
}

TEST_CASE("principal projectives") {
  CHECK(pp_eval(2, 4).group.free_rank == 12);
  CHECK(pp_eval(0, 6).group.free_rank == 1);
  CHECK(pp_eval(3, 2).group.is_zero());
  CHECK(fi_eval(FIPresentation::principal(2), 3).free_rank == 6);
}

TEST_CASE("evaluation with torsion") {
  const AbelianGroup g = fi_eval(two_torsion(), 2);
  CHECK(g.free_rank == 0);
  CHECK(g.torsion == std::vector<Integer>{2, 2});
  CHECK(fi_eval(two_torsion(), 0).is_zero());
  CHECK(fi_eval(FIPresentation::principal(3), 2).is_zero());
}

TEST_CASE("shift maps and Ker/Coker") {
  const IntMatrix s0 = fi_shift_maps(FIPresentation::principal(0), 4);
  CHECK(s0 == IntMatrix::identity(1));
  const IntMatrix s1 = fi_shift_maps(FIPresentation::principal(1), 1);
  CHECK(s1.rows() == 2);
  CHECK(s1.cols() == 1);
  CHECK(s1(0, 0) == 0);
  CHECK(s1(1, 0) == 1);

  for (int m = 0; m <= 4; ++m) {
    const KerCoker p0 = fi_ker_coker(FIPresentation::principal(0), m);
    CHECK(p0.kernel.is_zero());
    CHECK(p0.cokernel.is_zero());
    const KerCoker z = fi_ker_coker(FIPresentation::zero(), m);
    CHECK(z.kernel.is_zero());
    CHECK(z.cokernel.is_zero());
  }
  for (int m = 1; m <= 4; ++m) {
    const KerCoker p1 = fi_ker_coker(FIPresentation::principal(1), m);
    CHECK(p1.kernel.is_zero());
    CHECK(p1.cokernel.free_rank == 1);
    CHECK(p1.cokernel.torsion.empty());
  }
}

TEST_CASE("degree certification") {
  using K = DegreeVerdict::Kind;
  CHECK(fi_degree_certify(FIPresentation::zero(), -1, 10).kind == K::Certified);
  CHECK(fi_degree_certify(FIPresentation::principal(0), 0, 10).kind == K::Certified);
  const DegreeVerdict r = fi_degree_certify(FIPresentation::principal(0), -1, 10);
  CHECK(r.kind == K::Refuted);
  CHECK(r.witness >= 0);
  CHECK(fi_degree_certify(FIPresentation::principal(1), 1, 15).kind == K::Certified);
  CHECK(fi_degree_certify(FIPresentation::principal(2), 1, 12).kind == K::Refuted);
  CHECK(fi_degree_certify(FIPresentation::principal(2), 2, 12).kind == K::Certified);
  CHECK(fi_degree_certify(FIPresentation::principal(1), 1, 15).to_string().find("certified") == 0);
}

TEST_CASE("six-term sequence on a quotient") {
  const std::vector<FIRelation> extra{FIRelation{1, {FITerm{0, FIInjection::identity(1), 3}}}};
  for (int m = 0; m <= 4; ++m) CHECK(six_term_rank_defect(FIPresentation::principal(1), extra, m) == 0);
}

TEST_CASE("tensor products") {
  const auto t11 = tensor_decompose(1, 1);
  REQUIRE(t11.size() == 2);
  std::multiset<int> d11;
  for (const auto& s : t11) d11.insert(s.degree);
  CHECK(d11 == std::multiset<int>{1, 2});

  const auto t0 = tensor_decompose(0, 3);
  REQUIRE(t0.size() == 1);
  CHECK(t0[0].degree == 3);

  std::multiset<int> d21;
  for (const auto& s : tensor_decompose(2, 1)) d21.insert(s.degree);
  CHECK(d21 == std::multiset<int>{2, 2, 3});

  const RankIdentity r = tensor_rank_identity(1, 1, 2);
  CHECK(r.lhs == 4);
  CHECK(r.holds());
  CHECK(tensor_rank_identity(3, 2, 1).lhs == 0);
  CHECK(tensor_rank_identity(3, 2, 1).holds());
  CHECK(tensor_rank_identity(2, 2, 5).holds());
}

TEST_CASE("duplication reduction") {
  const DupReduction d = dup_reduce(FIInjection(4, {1}));
  CHECK(d.slot == 2);
  CHECK(d.g == FIInjection(2, {1}));
  CHECK(d.f_prime == FIInjection(2, {1}));

  const DupReduction e = dup_reduce(FIInjection(2, {}));
  CHECK(e.slot == 1);
  CHECK(e.g.source() == 0);
  CHECK(e.f_prime.source() == 0);

  Rng rng(19);
  for (int t = 0; t < 100; ++t) {
    const int n = static_cast<int>(draw_between(rng, 0, 3));
    const int m = static_cast<int>(draw_between(rng, n + 1, 5));
    const auto all = all_injections(n, 2 * m);
    const FIInjection f = all[draw_below(rng, all.size())];
    const DupReduction r = dup_reduce(f);
    CHECK(compose(disjoint_union(r.g, r.g), r.f_prime) == f);
  }
  CHECK_THROWS_AS(dup_reduce(FIInjection(4, {1, 2})), Error);
}
