#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "lcsfi/integer.hpp"

namespace lcsfi {

/// Injection {1..n} -> {1..m}, stored as the value list f(1), ..., f(n).
class FIInjection {
 public:
  FIInjection() = default;
  FIInjection(int target, std::vector<int> values);

  static FIInjection identity(int n);
  // i -> i as a map n -> m.
  static FIInjection standard(int n, int m);

  int source() const noexcept { return static_cast<int>(values_.size()); }
  int target() const noexcept { return target_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i - 1)); }
  bool in_image(int j) const;

  friend bool operator==(const FIInjection&, const FIInjection&) = default;
  friend auto operator<=>(const FIInjection&, const FIInjection&) = default;

 private:
  int target_ = 0;
  std::vector<int> values_;
};

// (g o f)
FIInjection compose(const FIInjection& g, const FIInjection& f);
// f ⊔ g : n+n' -> m+m', second block shifted by m.
FIInjection disjoint_union(const FIInjection& f, const FIInjection& g);

// All injections n -> m in lexicographic order of value lists.
std::vector<FIInjection> all_injections(int n, int m);
Integer injection_count(int n, int m);
// Position of f in all_injections(f.source(), f.target()).
std::size_t injection_index(const FIInjection& f);

std::string format_injection(const FIInjection& f);

}  // namespace lcsfi
