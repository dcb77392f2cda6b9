#include "lcsfi/injection.hpp"

#include <algorithm>

#include "lcsfi/error.hpp"

namespace lcsfi {

FIInjection::FIInjection(int target, std::vector<int> values) : target_(target), values_(std::move(values)) {
  std::vector<bool> seen(static_cast<std::size_t>(std::max(target, 0)) + 1, false);
  for (int v : values_) {
    if (v < 1 || v > target)
      throw Error(ErrorKind::InvalidArgument, "injection value " + std::to_string(v) + " outside 1.." + std::to_string(target));
    if (seen[static_cast<std::size_t>(v)]) throw Error(ErrorKind::InvalidArgument, "injection repeats value " + std::to_string(v));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

FIInjection FIInjection::identity(int n) { return standard(n, n); }

FIInjection FIInjection::standard(int n, int m) {
  if (n > m) throw Error(ErrorKind::InvalidArgument, "no injection from a larger set");
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return FIInjection(m, std::move(v));
}

bool FIInjection::in_image(int j) const { return std::find(values_.begin(), values_.end(), j) != values_.end(); }

FIInjection compose(const FIInjection& g, const FIInjection& f) {
  if (f.target() != g.source()) throw Error(ErrorKind::RankMismatch, "injections are not composable");
  std::vector<int> v;
  v.reserve(f.values().size());
  for (int x : f.values()) v.push_back(g(x));
  return FIInjection(g.target(), std::move(v));
}

FIInjection disjoint_union(const FIInjection& f, const FIInjection& g) {
  std::vector<int> v = f.values();
  for (int x : g.values()) v.push_back(x + f.target());
  return FIInjection(f.target() + g.target(), std::move(v));
}

std::vector<FIInjection> all_injections(int n, int m) {
  std::vector<FIInjection> out;
  if (n < 0 || n > m) return out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(m, cur);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[static_cast<std::size_t>(v)] = false;
    }
  };
  rec(rec);
  return out;
}

Integer injection_count(int n, int m) {
  if (n < 0 || n > m) return 0;
  Integer r = 1;
  for (int i = 0; i < n; ++i) r *= m - i;
  return r;
}

std::size_t injection_index(const FIInjection& f) {
  // Mixed radix: slot i has (m - i) choices among unused values.
  const int m = f.target();
  const int n = f.source();
  std::size_t idx = 0;
  std::vector<bool> used(static_cast<std::size_t>(m) + 1, false);
  for (int i = 0; i < n; ++i) {
    const int v = f.values()[static_cast<std::size_t>(i)];
    std::size_t smaller = 0;
    for (int u = 1; u < v; ++u)
      if (!used[static_cast<std::size_t>(u)]) ++smaller;
    idx = idx * static_cast<std::size_t>(m - i) + smaller;
    used[static_cast<std::size_t>(v)] = true;
  }
  return idx;
}

std::string format_injection(const FIInjection& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.values().size(); ++i) s += (i ? "," : "") + std::to_string(f.values()[i]);
  return s + "]->" + std::to_string(f.target());
}

}  // namespace lcsfi
