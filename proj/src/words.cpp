#include "lcsfi/words.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "lcsfi/error.hpp"

namespace lcsfi {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedWord: return "malformed-word";
    case ErrorKind::RankMismatch: return "rank-mismatch";
    case ErrorKind::NotInLayer: return "not-in-layer";
    case ErrorKind::NotLieElement: return "not-a-lie-element";
    case ErrorKind::NotInKernel: return "not-in-kernel";
    case ErrorKind::NotAutomorphism: return "not-an-automorphism";
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::WindowTooSmall: return "window-too-small";
    case ErrorKind::NotFormPreserving: return "not-form-preserving";
    case ErrorKind::BoundaryWordMoved: return "boundary-word-moved";
    case ErrorKind::NonSymplectic: return "non-symplectic-abelianization";
    case ErrorKind::UnsupportedGenus: return "unsupported-genus";
    case ErrorKind::NotTorelli: return "not-torelli";
    case ErrorKind::NotInLambda3: return "not-in-lambda3";
    case ErrorKind::ParseError: return "parse-error";
  }
  return "error";
}

namespace {

void check_same_rank(const Word& u, const Word& v) {
  if (u.rank() != v.rank())
    throw Error(ErrorKind::RankMismatch,
                "words of rank " + std::to_string(u.rank()) + " and " + std::to_string(v.rank()));
}

// Appends letters to an already reduced buffer, cancelling at the seam.
void append_reduced(std::vector<Letter>& out, std::span<const Letter> letters) {
  for (Letter a : letters) {
    if (!out.empty() && out.back() == -a)
      out.pop_back();
    else
      out.push_back(a);
  }
}

}  // namespace

Word::Word(int rank, std::span<const Letter> letters) : rank_(rank) {
  if (rank < 0) throw Error(ErrorKind::MalformedWord, "negative rank");
  for (Letter a : letters) {
    if (a == 0 || std::abs(a) > rank)
      throw Error(ErrorKind::MalformedWord,
                  "letter " + std::to_string(a) + " outside rank " + std::to_string(rank));
  }
  append_reduced(letters_, letters);
}

Word Word::generator(int rank, int index) { return Word(rank, {index}); }

Word free_reduce(std::span<const Letter> letters, int rank) { return Word(rank, letters); }

Word word_mul(const Word& u, const Word& v) {
  check_same_rank(u, v);
  std::vector<Letter> buf = u.letters();
  append_reduced(buf, v.letters());
  return Word(u.rank(), buf);
}

Word word_inv(const Word& u) {
  std::vector<Letter> buf(u.letters().rbegin(), u.letters().rend());
  for (Letter& a : buf) a = -a;
  return Word(u.rank(), buf);
}

Word word_pow(const Word& u, long exponent) {
  const Word base = exponent < 0 ? word_inv(u) : u;
  Word r(u.rank());
  for (long i = 0; i < std::labs(exponent); ++i) r = word_mul(r, base);
  return r;
}

Word commutator(const Word& x, const Word& y) {
  check_same_rank(x, y);
  return word_mul(word_mul(x, y), word_mul(word_inv(x), word_inv(y)));
}

FreeEndo::FreeEndo(int rank, std::vector<Word> images) : rank_(rank), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != rank)
    throw Error(ErrorKind::RankMismatch, "endomorphism of rank " + std::to_string(rank) + " needs " +
                                             std::to_string(rank) + " images");
  for (const Word& w : images_)
    if (w.rank() != rank) throw Error(ErrorKind::RankMismatch, "image word has wrong rank");
}

FreeEndo FreeEndo::identity(int rank) {
  std::vector<Word> images;
  images.reserve(static_cast<std::size_t>(rank));
  for (int i = 1; i <= rank; ++i) images.push_back(Word::generator(rank, i));
  return FreeEndo(rank, std::move(images));
}

Word endo_apply(const FreeEndo& phi, const Word& w) {
  if (phi.rank() != w.rank())
    throw Error(ErrorKind::RankMismatch, "endomorphism and word ranks differ");
  std::vector<Word> inverses(phi.images().size(), Word(phi.rank()));
  std::vector<bool> have_inverse(phi.images().size(), false);
  std::vector<Letter> buf;
  for (Letter a : w.letters()) {
    const auto idx = static_cast<std::size_t>(std::abs(a) - 1);
    if (a > 0) {
      append_reduced(buf, phi.images()[idx].letters());
    } else {
      if (!have_inverse[idx]) {
        inverses[idx] = word_inv(phi.images()[idx]);
        have_inverse[idx] = true;
      }
      append_reduced(buf, inverses[idx].letters());
    }
  }
  return Word(w.rank(), buf);
}

FreeEndo endo_compose(const FreeEndo& phi, const FreeEndo& psi) {
  if (phi.rank() != psi.rank())
    throw Error(ErrorKind::RankMismatch, "cannot compose endomorphisms of different rank");
  std::vector<Word> images;
  images.reserve(psi.images().size());
  for (const Word& w : psi.images()) images.push_back(endo_apply(phi, w));
  return FreeEndo(phi.rank(), std::move(images));
}

namespace {

struct Token {
  char symbol;
  int index;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const char c = text[i++];
    if (!std::isalpha(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::ParseError, std::string("unexpected character '") + c + "'");
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw Error(ErrorKind::ParseError, std::string("letter '") + c + "' lacks an index");
    tokens.push_back({c, std::atoi(std::string(text.substr(start, i - start)).c_str())});
  }
  return tokens;
}

}  // namespace

Word parse_word(std::string_view text, int rank) {
  std::vector<Letter> letters;
  for (const Token& t : tokenize(text)) {
    if (t.symbol != 'x' && t.symbol != 'X')
      throw Error(ErrorKind::ParseError, std::string("unknown letter '") + t.symbol + "'");
    if (t.index < 1 || t.index > rank)
      throw Error(ErrorKind::MalformedWord,
                  "generator index " + std::to_string(t.index) + " outside rank " + std::to_string(rank));
    letters.push_back(t.symbol == 'x' ? t.index : -t.index);
  }
  return Word(rank, letters);
}

std::string format_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (Letter a : w.letters()) {
    if (!first) out << ' ';
    first = false;
    out << (a > 0 ? 'x' : 'X') << std::abs(a);
  }
  return out.str();
}

FreeEndo parse_endo(std::string_view text) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == ';') {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  const std::string head = parts.front();
  char* end = nullptr;
  const long rank = std::strtol(head.c_str(), &end, 10);
  if (end == head.c_str() || rank < 0)
    throw Error(ErrorKind::ParseError, "endomorphism text must start with the rank");
  for (const char* p = end; *p; ++p)
    if (!std::isspace(static_cast<unsigned char>(*p)))
      throw Error(ErrorKind::ParseError, "trailing characters after rank");
  if (static_cast<long>(parts.size()) - 1 != rank)
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(rank) + " images, got " +
                                           std::to_string(parts.size() - 1));
  std::vector<Word> images;
  for (std::size_t i = 1; i < parts.size(); ++i) images.push_back(parse_word(parts[i], static_cast<int>(rank)));
  return FreeEndo(static_cast<int>(rank), std::move(images));
}

std::string format_endo(const FreeEndo& phi) {
  std::string s = std::to_string(phi.rank());
  for (const Word& w : phi.images()) s += "; " + format_word(w);
  return s;
}

Word parse_surface_word(std::string_view text, int genus) {
  std::vector<Letter> letters;
  for (const Token& t : tokenize(text)) {
    if (t.index < 1 || t.index > genus)
      throw Error(ErrorKind::MalformedWord,
                  "handle index " + std::to_string(t.index) + " outside genus " + std::to_string(genus));
    switch (t.symbol) {
      case 'x': letters.push_back(2 * t.index - 1); break;
      case 'X': letters.push_back(-(2 * t.index - 1)); break;
      case 'y': letters.push_back(2 * t.index); break;
      case 'Y': letters.push_back(-2 * t.index); break;
      default: throw Error(ErrorKind::ParseError, std::string("unknown surface letter '") + t.symbol + "'");
    }
  }
  return Word(2 * genus, letters);
}

std::string format_surface_word(const Word& w) {
  std::ostringstream out;
  bool first = true;
  for (Letter a : w.letters()) {
    if (!first) out << ' ';
    first = false;
    const int g = std::abs(a);
    const bool is_x = g % 2 == 1;
    const char c = is_x ? (a > 0 ? 'x' : 'X') : (a > 0 ? 'y' : 'Y');
    out << c << (g + 1) / 2;
  }
  return out.str();
}

}  // namespace lcsfi
