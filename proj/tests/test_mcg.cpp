#include "doctest.h"

#include "lcsfi/error.hpp"
#include "lcsfi/mcg.hpp"
#include "lcsfi/random.hpp"
#include "lcsfi/symplectic.hpp"

using namespace lcsfi;

namespace {
MappingClass mc(const char* word, int g) { return evaluate(parse_generator_word(word, g)); }
}  // namespace

TEST_CASE("boundary word") {
  CHECK(boundary_word(0).empty());
  CHECK(boundary_word(1).letters() == std::vector<int>{1, 2, -1, -2});
  CHECK(boundary_word(2).length() == 8);
  CHECK(format_surface_word(boundary_word(2)) == "x1 y1 X1 Y1 x2 y2 X2 Y2");
}

TEST_CASE("validation") {
  CHECK(validate_mapping_class(FreeEndo::identity(4), 2) == mc_identity(2));
  CHECK_THROWS_AS(validate_mapping_class(parse_endo("2; x2 x1; x2"), 1), Error);
  for (int g = 1; g <= 3; ++g)
    for (const TwistGenerator& t : twist_generators(g).generators) {
      CHECK(endo_apply(t.twist.endo(), boundary_word(g)) == boundary_word(g));
      CHECK(preserves_form(symplectic_rep(t.twist)));
      CHECK(mc_compose(t.twist, t.inverse) == mc_identity(g));
    }
}

TEST_CASE("relations among twists") {
  const MappingClass a = mc("a1", 1), b = mc("b1", 1);
  CHECK(mc_compose(mc_compose(a, b), a) == mc_compose(mc_compose(b, a), b));
  const MappingClass a1 = mc("a1", 2), a2 = mc("a2", 2);
  CHECK(mc_compose(a1, a2) == mc_compose(a2, a1));
  CHECK(mc("a1 A1 b2", 2) == mc("b2", 2));
  CHECK(evaluate_inverse(parse_generator_word("a1 b1 c1", 2)) == mc("C1 B1 A1", 2));
}

TEST_CASE("symplectic representation") {
  CHECK(symplectic_rep(mc_identity(2)) == IntMatrix::identity(4));
  const IntMatrix a = symplectic_rep(mc("a1", 1));
  CHECK(a == transvection(twist_generators(1).find("a1").curve_class));
  Rng rng(4);
  const auto& gens = twist_generators(2).generators;
  for (int t = 0; t < 50; ++t) {
    std::string u, v;
    for (int i = 0; i < 4; ++i) u += gens[draw_below(rng, gens.size())].name + " ";
    for (int i = 0; i < 4; ++i) v += gens[draw_below(rng, gens.size())].name + " ";
    CHECK(symplectic_rep(mc_compose(mc(u.c_str(), 2), mc(v.c_str(), 2))) ==
          symplectic_rep(mc(u.c_str(), 2)) * symplectic_rep(mc(v.c_str(), 2)));
  }
  for (const SpMembership& s : sp_generation_certificate(2, 8)) CHECK(s.found);
}

TEST_CASE("Johnson levels") {
  CHECK(johnson_level(mc_identity(2), 3).saturated);
  CHECK(johnson_level(mc_identity(2), 3).to_string() == ">=3");
  CHECK(johnson_level(mc("a1", 2), 3).level == 0);
  const MappingClass sep = mc("a1 b1 a1 b1 a1 b1 a1 b1 a1 b1 a1 b1", 2);
  CHECK(johnson_level(sep, 3).level >= 2);
  const MappingClass bp = mc("d A2", 2);
  CHECK(johnson_level(bp, 3).level == 1);
  CHECK(johnson_level(mc("a2 D", 2), 3).level == 1);
}

TEST_CASE("Johnson homomorphism") {
  CHECK(johnson_tau(mc_identity(2)).is_zero());
  const MappingClass sep = mc("a1 b1 a1 b1 a1 b1 a1 b1 a1 b1 a1 b1", 2);
  CHECK(johnson_tau(sep).is_zero());
  const MappingClass bp = mc("d A2", 2);
  const Lambda3Element t = johnson_tau(bp);
  CHECK_FALSE(t.is_zero());
  for (const auto& [idx, c] : t.coords) {
    CHECK(idx[0] < idx[1]);
    CHECK(idx[1] < idx[2]);
  }
  CHECK(johnson_tau(mc_compose(bp, bp)) == t + t);
  CHECK(johnson_tau(mc("a2 D", 2)) + t == Lambda3Element{2, {}});
  CHECK_THROWS_AS(johnson_tau(bp, DualityConvention::Symmetric), Error);
  CHECK_THROWS_AS(johnson_tau(mc("a1", 2)), Error);
  CHECK(johnson_tau(stabilize(bp, 3)) == lambda3_pushforward(t, 3));
}

TEST_CASE("stabilization") {
  CHECK(stabilize(mc_identity(1), 3) == mc_identity(3));
  const MappingClass a = mc("a1", 1);
  const MappingClass s = stabilize(a, 2);
  CHECK(format_surface_word(s.endo().image(1)) == format_surface_word(a.endo().image(1)));
  CHECK(format_surface_word(s.endo().image(2)) == format_surface_word(a.endo().image(2)));
  CHECK(s.endo().image(3) == Word::generator(4, 3));
  CHECK(s.endo().image(4) == Word::generator(4, 4));
  CHECK(symplectic_rep(s) == block_extend(symplectic_rep(a), 2));
}

TEST_CASE("Torelli samples") {
  const TorelliSampling t = torelli_samples(2, 12, 7);
  CHECK_FALSE(t.samples.empty());
  bool saw_bp = false;
  for (const TorelliSample& s : t.samples) {
    CHECK(symplectic_rep(s.element) == IntMatrix::identity(4));
    CHECK(mc_compose(s.element, s.inverse) == mc_identity(2));
    if (s.bounding_pair) {
      saw_bp = true;
      CHECK(johnson_level(s.element, 2).level == 1);
    }
  }
  CHECK(saw_bp);
  const TorelliSampling again = torelli_samples(2, 12, 7);
  REQUIRE(again.samples.size() == t.samples.size());
  for (std::size_t i = 0; i < t.samples.size(); ++i) CHECK(again.samples[i].element == t.samples[i].element);
  CHECK(torelli_samples(0, 3, 1).samples.size() == 1);
}

TEST_CASE("x1 -> x1 y1 fixes the boundary word") {
  // It is the inverse of the b1 twist.
  CHECK(validate_mapping_class(parse_endo("2; x1 x2; x2"), 1) == mc("B1", 1));
}
