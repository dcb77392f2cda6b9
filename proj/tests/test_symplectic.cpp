#include "doctest.h"

#include "lcsfi/error.hpp"
#include "lcsfi/random.hpp"
#include "lcsfi/symplectic.hpp"

using namespace lcsfi;

namespace {
bool column_supported_on(const IntMatrix& basis, std::initializer_list<int> rows) {
  for (int i = 0; i < basis.rows(); ++i) {
    bool allowed = false;
    for (int r : rows) allowed = allowed || r == i;
    if (allowed) continue;
    for (int j = 0; j < basis.cols(); ++j)
      if (basis(i, j) != 0) return false;
  }
  return true;
}
}  // namespace

TEST_CASE("the X functor") {
  CHECK(x_functor(FIInjection::identity(3)) == IntMatrix::identity(6));
  const IntMatrix x = x_functor(FIInjection(2, {2}));
  CHECK(x == IntMatrix(4, 2, {0, 0, 0, 0, 1, 0, 0, 1}));

  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const int n = static_cast<int>(draw_between(rng, 0, 2));
    const int m = static_cast<int>(draw_between(rng, n, 3));
    const int p = static_cast<int>(draw_between(rng, m, 4));
    const auto fs = all_injections(n, m);
    const auto gs = all_injections(m, p);
    const FIInjection f = fs[draw_below(rng, fs.size())];
    const FIInjection g = gs[draw_below(rng, gs.size())];
    CHECK(x_functor(compose(g, f)) == x_functor(g) * x_functor(f));
    CHECK(preserves_form(x_functor(f)));
  }
}

TEST_CASE("symplectic complements") {
  const ComplementCertificate std_incl = symplectic_complement(x_functor(FIInjection::standard(1, 2)));
  CHECK(std_incl.valid());
  CHECK(column_supported_on(std_incl.basis, {2, 3}));

  const ComplementCertificate shifted = symplectic_complement(x_functor(FIInjection(2, {2})));
  CHECK(shifted.valid());
  CHECK(column_supported_on(shifted.basis, {0, 1}));

  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    IntMatrix s = IntMatrix::identity(6);
    for (int r = 0; r < 4; ++r) {
      std::vector<Integer> v(6);
      for (auto& c : v) c = draw_between(rng, -1, 1);
      s = transvection(v) * s;
    }
    REQUIRE(preserves_form(s));
    CHECK(symplectic_complement(s * x_functor(FIInjection::standard(1, 3))).valid());
  }
  CHECK_THROWS_AS(symplectic_complement(IntMatrix(4, 2, {2, 0, 0, 1, 0, 0, 0, 0})), Error);
}

TEST_CASE("block extension and Sp matrices") {
  const IntMatrix t = transvection({1, 0});
  const IntMatrix e = block_extend(t, 2);
  CHECK(e.rows() == 4);
  CHECK(e(0, 0) == t(0, 0));
  CHECK(e(1, 0) == t(1, 0));
  CHECK(e(2, 2) == 1);
  CHECK(e(3, 3) == 1);
  CHECK(preserves_form(e));
  CHECK_THROWS_AS(SpMatrix(IntMatrix(2, 2, {2, 0, 0, 1})), Error);
}
