#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcsfi {

// Signed letter: +i is generator x_i, -i its inverse (1-indexed).
using Letter = int;

/// Freely reduced word in the free group F_n.
class Word {
 public:
  explicit Word(int rank = 0) : rank_(rank) {}

  // Reduces on construction; throws MalformedWord on 0 or |letter| > rank.
  Word(int rank, std::span<const Letter> letters);
  Word(int rank, std::initializer_list<Letter> letters)
      : Word(rank, std::span<const Letter>(letters.begin(), letters.size())) {}

  static Word generator(int rank, int index);

  int rank() const noexcept { return rank_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
    return a.letters_ <=> b.letters_;
  }

 private:
  int rank_;
  std::vector<Letter> letters_;
};

Word free_reduce(std::span<const Letter> letters, int rank);
Word word_mul(const Word& u, const Word& v);
Word word_inv(const Word& u);
Word word_pow(const Word& u, long exponent);
Word commutator(const Word& x, const Word& y);

/// Endomorphism of F_n, given by the images of the generators.
class FreeEndo {
 public:
  FreeEndo() = default;
  FreeEndo(int rank, std::vector<Word> images);

  static FreeEndo identity(int rank);

  int rank() const noexcept { return rank_; }
  const std::vector<Word>& images() const noexcept { return images_; }
  const Word& image(int generator) const { return images_.at(static_cast<std::size_t>(generator - 1)); }

  friend bool operator==(const FreeEndo&, const FreeEndo&) = default;

 private:
  int rank_ = 0;
  std::vector<Word> images_;
};

Word endo_apply(const FreeEndo& phi, const Word& w);
// (phi o psi): apply psi first.
FreeEndo endo_compose(const FreeEndo& phi, const FreeEndo& psi);

// Text forms. Plain grammar: x<k> / X<k>; endo: "n; w_1; ...; w_n".
Word parse_word(std::string_view text, int rank);
std::string format_word(const Word& w);
FreeEndo parse_endo(std::string_view text);
std::string format_endo(const FreeEndo& phi);

// Surface grammar for rank 2g: x<i>, y<i> and inverses X<i>, Y<i>,
// with x_i -> letter 2i-1 and y_i -> letter 2i.
Word parse_surface_word(std::string_view text, int genus);
std::string format_surface_word(const Word& w);

}  // namespace lcsfi
