#include "doctest.h"

#include <random>

#include "lcsfi/error.hpp"
#include "lcsfi/random.hpp"
#include "lcsfi/words.hpp"

using namespace lcsfi;

TEST_CASE("free reduction") {
  CHECK(Word(2, {1, -1}).empty());
  CHECK(Word(2, {1, 2, -2, -1}).empty());
  CHECK(Word(2, {1, 2, -1}).letters() == std::vector<int>{1, 2, -1});
  CHECK_THROWS_AS(Word(2, {0}), Error);
  CHECK_THROWS_AS(Word(2, {3}), Error);
}

TEST_CASE("multiplication, inverse and commutators") {
  CHECK(word_mul(Word(1, {1}), Word(1, {-1})).empty());
  CHECK(word_mul(Word(3, {1, 2}), Word(3, {-2, 3})).letters() == std::vector<int>{1, 3});
  CHECK(word_mul(Word(2), Word(2, {2})) == Word(2, {2}));
  CHECK(word_inv(Word(2, {1, 2})).letters() == std::vector<int>{-2, -1});
  CHECK(word_inv(Word(2)).empty());
  CHECK(word_inv(Word(1, {-1})) == Word(1, {1}));

  const Word x1 = Word::generator(3, 1), x2 = Word::generator(3, 2), x3 = Word::generator(3, 3);
  CHECK(commutator(x1, x1).empty());
  CHECK(commutator(Word::generator(2, 1), Word::generator(2, 2)).letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(commutator(commutator(x1, x2), x3).length() == 10);
}

TEST_CASE("endomorphisms") {
  const FreeEndo phi(2, {Word(2, {1, 2}), Word(2, {2})});
  CHECK(endo_apply(phi, Word(2, {1, -2})) == Word(2, {1}));
  CHECK(endo_apply(phi, Word(2)).empty());
  CHECK(endo_apply(FreeEndo::identity(2), Word(2, {1, -2, 2, 2})) == Word(2, {1, 2}));
  CHECK(endo_compose(phi, FreeEndo::identity(2)) == phi);

  const FreeEndo psi(2, {Word(2, {1, -2}), Word(2, {2})});
  CHECK(endo_compose(phi, psi) == FreeEndo::identity(2));

  const FreeEndo swap(2, {Word(2, {2}), Word(2, {1})});
  CHECK(endo_compose(swap, swap) == FreeEndo::identity(2));
}

TEST_CASE("parsing round trips") {
  const Word w = parse_word("x1 x2 X1 X2", 2);
  CHECK(w.letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(parse_word(format_word(w), 2) == w);
  CHECK_THROWS_AS(parse_word("x3", 2), Error);
  const FreeEndo phi = parse_endo("2; x1 x2; x2");
  CHECK(phi.rank() == 2);
  CHECK(parse_endo(format_endo(phi)) == phi);
  CHECK(format_surface_word(parse_surface_word("x1 y1 X1 Y1", 1)) == "x1 y1 X1 Y1");
}

TEST_CASE("group laws on random words") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const Word a = random_word(rng, 3, 20), b = random_word(rng, 3, 20), c = random_word(rng, 3, 20);
    CHECK(word_mul(word_mul(a, b), c) == word_mul(a, word_mul(b, c)));
    CHECK(word_mul(a, word_inv(a)).empty());
    CHECK(word_inv(word_mul(a, b)) == word_mul(word_inv(b), word_inv(a)));
  }
}
