#pragma once

#include <cstdint>
#include <random>

#include "lcsfi/words.hpp"

namespace lcsfi {

using Rng = std::mt19937_64;

// Uniform in [0, n). std::uniform_int_distribution is implementation-defined,
// so draws are done by rejection to keep output identical across toolchains.
inline std::uint64_t draw_below(Rng& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = Rng::max() - (Rng::max() % n);
  for (;;) {
    const std::uint64_t x = rng();
    if (x < limit) return x % n;
  }
}

inline long draw_between(Rng& rng, long lo, long hi) {
  return lo + static_cast<long>(draw_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Letter string of geometric length (continue with
// probability 7/8), capped at max_len, then freely reduced.
inline Word random_word(Rng& rng, int rank, int max_len) {
  std::vector<Letter> letters;
  while (static_cast<int>(letters.size()) < max_len && draw_below(rng, 8) != 0) {
    const int g = static_cast<int>(draw_below(rng, static_cast<std::uint64_t>(rank))) + 1;
    letters.push_back(draw_below(rng, 2) ? g : -g);
  }
  return Word(rank, letters);
}

}  // namespace lcsfi
