#include "doctest.h"

#include "lcsfi/error.hpp"
#include "lcsfi/nilpotent.hpp"
#include "lcsfi/random.hpp"

using namespace lcsfi;

namespace {
// x1 -> x1 [x1,x2], x2 -> x2
FreeEndo twisted() { return parse_endo("2; x1 x1 x2 X1 X2; x2"); }
}  // namespace

TEST_CASE("nilpotent elements") {
  CHECK(nil_from_word(Word(2), 3).is_identity());
  const Word c = commutator(Word::generator(2, 1), Word::generator(2, 2));
  CHECK(nil_from_word(c, 1).is_identity());
  const NilElement e = nil_from_word(c, 2);
  CHECK(e.expansion() == magnus_expand(c, 2));

  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    const NilElement a = nil_from_word(random_word(rng, 2, 12), 3);
    CHECK(nil_mul(a, NilElement::identity(2, 3)) == a);
    CHECK(nil_mul(a, nil_inv(a)).is_identity());
  }
}

TEST_CASE("endomorphisms of N_n(k)") {
  const NilEndo phi = NilEndo::from_free_endo(parse_endo("2; x1 x2; x2"), 2);
  const NilElement x1 = nil_from_word(Word::generator(2, 1), 2);
  CHECK(nilendo_apply(phi, x1) == nil_from_word(Word(2, {1, 2}), 2));
  CHECK(nilendo_apply(NilEndo::identity(2, 2), x1) == x1);

  CHECK(is_automorphism(NilEndo::identity(2, 3)).invertible);
  const AutomorphismCheck sq = is_automorphism(NilEndo::from_free_endo(parse_endo("2; x1 x1; x2"), 2));
  CHECK_FALSE(sq.invertible);
  CHECK(sq.determinant == 2);
  const AutomorphismCheck tw = is_automorphism(NilEndo::from_free_endo(twisted(), 2));
  CHECK(tw.invertible);
  REQUIRE(tw.inverse.has_value());
}

TEST_CASE("inverses") {
  CHECK(aut_inverse(NilEndo::identity(2, 3)).is_identity());
  for (int k = 1; k <= 4; ++k) {
    const NilEndo phi = NilEndo::from_free_endo(twisted(), k);
    const NilEndo inv = aut_inverse(phi);
    CHECK(nilendo_compose(phi, inv).is_identity());
    CHECK(nilendo_compose(inv, phi).is_identity());
  }
  const NilEndo cyc = NilEndo::from_free_endo(parse_endo("3; x2; x3; x1"), 3);
  CHECK(aut_inverse(cyc) == NilEndo::from_free_endo(parse_endo("3; x3; x1; x2"), 3));
  CHECK_THROWS_AS(aut_inverse(NilEndo::from_free_endo(parse_endo("2; x1 x1; x2"), 2)), Error);
}

TEST_CASE("projection and psi") {
  CHECK(rho_project(NilEndo::identity(2, 3)).is_identity());
  const NilEndo phi = NilEndo::from_free_endo(twisted(), 2);
  const NilEndo down = rho_project(phi);
  CHECK(down.cls() == 1);
  CHECK(down.is_identity());

  CHECK(psi_iso(NilEndo::identity(2, 2)).is_zero());
  const KernelHom h = psi_iso(phi);
  CHECK(h.columns()[0] == LieElement::basis(2, {1, 2}));
  CHECK(h.columns()[1].is_zero());
  CHECK(psi_inverse(h) == phi);
  CHECK(psi_inverse(KernelHom::zero(2, 2)).is_identity());
  CHECK_THROWS_AS(psi_iso(NilEndo::from_free_endo(parse_endo("2; x2; x1"), 2)), Error);
}

TEST_CASE("pushforward along injections") {
  const NilEndo phi = NilEndo::from_free_endo(twisted(), 3);
  CHECK(fi_pushforward_aut(FIInjection::identity(2), phi) == phi);
  const NilEndo id1 = NilEndo::identity(1, 2);
  CHECK(fi_pushforward_aut(FIInjection(2, {2}), id1).is_identity());
  CHECK(fi_pushforward_aut(FIInjection(2, {2}), id1).rank() == 2);
}

TEST_CASE("IA levels") {
  CHECK(ia_level(FreeEndo::identity(2), 5) == 5);
  CHECK(ia_level(parse_endo("2; x2; x1"), 5) == 0);
  CHECK(ia_level(twisted(), 5) == 1);
  // x1 -> x1 [[x1,x2],x2] sits one level deeper
  const FreeEndo deep(2, {word_mul(Word::generator(2, 1),
                                   commutator(commutator(Word::generator(2, 1), Word::generator(2, 2)),
                                              Word::generator(2, 2))),
                          Word::generator(2, 2)});
  CHECK(ia_level(deep, 5) == 2);
  CHECK(ia_level(NilEndo::from_free_endo(deep, 4)) == 2);
}

TEST_CASE("commutators of IA automorphisms go deeper") {
  const NilEndo a = NilEndo::from_free_endo(twisted(), 4);
  const NilEndo b = NilEndo::from_free_endo(parse_endo("2; x1; x2 x2 x1 X2 X1"), 4);
  CHECK(ia_level(nilendo_commutator(a, b)) >= 2);
}
