#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "lcsfi/intmat.hpp"
#include "lcsfi/words.hpp"

namespace lcsfi {

Word boundary_word(int g);

// Column j = exponent-sum vector of the image of generator j.
IntMatrix abelianization(const FreeEndo& phi);

/// Automorphism of F_{2g} fixing the boundary word, with symplectic abelianization.
class MappingClass {
 public:
  MappingClass() = default;

  int genus() const noexcept { return genus_; }
  const FreeEndo& endo() const noexcept { return endo_; }

  friend bool operator==(const MappingClass&, const MappingClass&) = default;

 private:
  MappingClass(int g, FreeEndo e) : genus_(g), endo_(std::move(e)) {}
  friend MappingClass validate_mapping_class(const FreeEndo& phi, int g);

  int genus_ = 0;
  FreeEndo endo_;
};

MappingClass validate_mapping_class(const FreeEndo& phi, int g);
MappingClass mc_identity(int g);
// (a o b): b first.
MappingClass mc_compose(const MappingClass& a, const MappingClass& b);

struct TwistGenerator {
  std::string name;
  MappingClass twist;
  MappingClass inverse;
  std::vector<Integer> curve_class;  // primitive homology class v with abelianization T_v
};

struct TwistTable {
  int genus = 0;
  std::vector<TwistGenerator> generators;
  const TwistGenerator& find(std::string_view name) const;
};

// Parses and validates a table: each entry fixes the boundary word, has its
// inverse, abelianizes to a transvection, and pairs with every other entry by
// braid or commutation according to the intersection form.
TwistTable parse_twist_table(std::string_view text);
const TwistTable& twist_generators(int g);

/// Signed generator word in a twist table: entry i > 0 is generator i, i < 0 its inverse.
struct GeneratorWord {
  int genus = 0;
  std::vector<int> letters;  // 1-based indices into the table
};

GeneratorWord parse_generator_word(std::string_view text, int g);
std::string format_generator_word(const GeneratorWord& w);
MappingClass evaluate(const GeneratorWord& w);
MappingClass evaluate_inverse(const GeneratorWord& w);

IntMatrix symplectic_rep(const MappingClass& phi);

struct JohnsonLevel {
  int level = 0;
  bool saturated = false;  // level reached kmax; only ">= kmax" is known
  std::string to_string() const;
};

JohnsonLevel johnson_level(const MappingClass& phi, int kmax);
MappingClass stabilize(const MappingClass& phi, int new_genus);

/// Element of Λ³H_g: coordinates over strictly increasing basis triples,
/// basis labels 1..2g with x_i = 2i-1, y_i = 2i.
struct Lambda3Element {
  int genus = 0;
  std::map<std::array<int, 3>, Integer> coords;

  bool is_zero() const { return coords.empty(); }
  friend Lambda3Element operator+(const Lambda3Element& a, const Lambda3Element& b);
  friend bool operator==(const Lambda3Element&, const Lambda3Element&) = default;
};

std::string format_lambda3(const Lambda3Element& t);
Lambda3Element lambda3_pushforward(const Lambda3Element& t, int new_genus);

// Identification of H* with H. Symplectic: z* = (z, -). Symmetric flips the
// sign on the x-generators and exists only to exercise the containment check.
enum class DualityConvention { Symplectic, Symmetric };

Lambda3Element johnson_tau(const MappingClass& phi, DualityConvention conv = DualityConvention::Symplectic);

struct TorelliSample {
  std::string label;
  GeneratorWord word;  // empty letters with a label means a built-in construction
  MappingClass element;
  MappingClass inverse;
  bool bounding_pair = false;
  bool separating = false;
};

struct TorelliSampling {
  std::vector<TorelliSample> samples;
  int shortfall = 0;
};

// Deterministic given (g, count, seed).
TorelliSampling torelli_samples(int g, int count, std::uint64_t seed);

// Standard Sp(2g, Z) transvections T_{x_i}, T_{y_i}, T_{x_i - x_{i+1}}, each
// with a generator word reaching it (empty letters if not found within depth).
struct SpMembership {
  std::string target;
  IntMatrix matrix;
  bool found = false;
  GeneratorWord word;
};

std::vector<SpMembership> sp_generation_certificate(int g, int max_depth);

}  // namespace lcsfi
