#include "doctest.h"

#include "lcsfi/error.hpp"
#include "lcsfi/free_lie.hpp"
#include "lcsfi/random.hpp"

using namespace lcsfi;

namespace {
Word gen(int n, int i) { return Word::generator(n, i); }
}  // namespace

TEST_CASE("lyndon basis and witt ranks") {
  CHECK(lyndon_basis(2, 1) == std::vector<Monomial>{{1}, {2}});
  CHECK(lyndon_basis(2, 2) == std::vector<Monomial>{{1, 2}});
  CHECK(lyndon_basis(2, 3) == std::vector<Monomial>{{1, 1, 2}, {1, 2, 2}});
  CHECK(witt_rank(2, 2) == 1);
  CHECK(witt_rank(5, 1) == 5);
  CHECK(witt_rank(2, 4) == 3);
  CHECK(witt_rank(3, 6) == 116);
  for (int n = 1; n <= 3; ++n)
    for (int k = 1; k <= 6; ++k) CHECK(Integer(lyndon_basis(n, k).size()) == witt_rank(n, k));
  CHECK(is_lyndon({1, 1, 2}));
  CHECK_FALSE(is_lyndon({2, 1}));
  CHECK_FALSE(is_lyndon({1, 2, 1, 2}));
  CHECK(format_bracket({1, 1, 2}) == "[x1,[x1,x2]]");
}

TEST_CASE("magnus expansion") {
  CHECK(magnus_expand(Word(2), 4) == TruncPoly::one(2, 4));
  const TruncPoly c = magnus_expand(commutator(gen(2, 1), gen(2, 2)), 2);
  CHECK(c.coeff({}) == 1);
  CHECK(c.coeff({1, 2}) == 1);
  CHECK(c.coeff({2, 1}) == -1);
  CHECK(c.coeff({1}) == 0);
  CHECK(c.terms().size() == 3);

  const TruncPoly x = magnus_expand(gen(2, 1), 3);
  CHECK(x.terms().size() == 2);
  CHECK(format_poly(x) == "1 + X1");

  const TruncPoly xi = magnus_expand(Word(1, {-1}), 3);
  CHECK(xi.coeff({1, 1, 1}) == -1);
  CHECK(xi.coeff({1, 1}) == 1);
}

TEST_CASE("lower central series class") {
  const Word x1 = gen(2, 1), x2 = gen(2, 2);
  CHECK(lcs_class(x1, 4).to_string() == "1");
  CHECK(lcs_class(commutator(x1, x2), 4).to_string() == "2");
  CHECK(lcs_class(commutator(commutator(x1, x2), x1), 4).to_string() == "3");
  CHECK(lcs_class(Word(2), 4).to_string() == "identity");
  CHECK(lcs_class(commutator(commutator(commutator(x1, x2), x1), x2), 3).to_string() == ">=4");
}

TEST_CASE("graded images and rewriting") {
  const Word x1 = gen(2, 1), x2 = gen(2, 2);
  const LieElement b = gr_image(commutator(x1, x2), 2);
  CHECK(b == LieElement::basis(2, {1, 2}));
  CHECK(gr_image(x1, 1) == LieElement::basis(2, {1}));
  CHECK(gr_image(word_mul(commutator(x1, x2), commutator(x2, x1)), 2).is_zero());
  CHECK_THROWS_AS(gr_image(x1, 2), Error);

  TruncPoly p(2, 2);
  p.add_term({1, 2}, 1);
  p.add_term({2, 1}, -1);
  CHECK(lie_rewrite(p, 2) == LieElement::basis(2, {1, 2}));
  CHECK(lie_rewrite(TruncPoly(2, 2), 2).is_zero());
  TruncPoly bad(2, 2);
  bad.add_term({1, 2}, 1);
  CHECK_THROWS_AS(lie_rewrite(bad, 2), Error);
}

TEST_CASE("pushforward along injections") {
  const LieElement v = LieElement::basis(2, {1, 2});
  CHECK(lie_pushforward(FIInjection::identity(2), v) == v);
  CHECK(lie_pushforward(FIInjection(2, {2}), LieElement::basis(1, {1})) == LieElement::basis(2, {2}));
  const LieElement swapped = lie_pushforward(FIInjection(2, {2, 1}), v);
  CHECK(swapped.coeff({1, 2}) == -1);
}

TEST_CASE("lifts realize Lie elements") {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    std::map<Monomial, Integer> coords;
    for (const Monomial& w : lyndon_basis(3, 3)) coords[w] = draw_between(rng, -2, 2);
    std::erase_if(coords, [](const auto& kv) { return kv.second == 0; });
    const LieElement v(3, 3, coords);
    CHECK(gr_image(lie_lift(v), 3) == v);
    CHECK(lie_rewrite(lie_expand(v, 3).homogeneous_part(3), 3) == v);
  }
}
