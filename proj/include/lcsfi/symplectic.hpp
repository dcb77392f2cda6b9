#pragma once

#include <vector>

#include "lcsfi/injection.hpp"
#include "lcsfi/intmat.hpp"

namespace lcsfi {

// Basis a_1, b_1, ..., a_g, b_g with (a_i, b_j) = delta_ij.
IntMatrix symplectic_form(int g);
Integer omega(const std::vector<Integer>& u, const std::vector<Integer>& v);

// F^T J_m F == J_n for a 2m x 2n matrix F.
bool preserves_form(const IntMatrix& f);

/// Element of Sp(2g, Z).
class SpMatrix {
 public:
  SpMatrix() = default;
  explicit SpMatrix(IntMatrix m);  // throws NotFormPreserving

  static SpMatrix identity(int g) { return SpMatrix(IntMatrix::identity(2 * g)); }

  int genus() const noexcept { return m_.rows() / 2; }
  const IntMatrix& matrix() const noexcept { return m_; }
  friend SpMatrix operator*(const SpMatrix& a, const SpMatrix& b) { return SpMatrix(a.m_ * b.m_); }
  friend bool operator==(const SpMatrix&, const SpMatrix&) = default;

 private:
  IntMatrix m_;
};

// u -> u + (v, u) v
IntMatrix transvection(const std::vector<Integer>& v);
IntMatrix block_extend(const IntMatrix& m, int new_genus);

// X f(a_i) = a_{f(i)}, X f(b_i) = b_{f(i)}: a 2m x 2n matrix.
IntMatrix x_functor(const FIInjection& f);

struct ComplementCertificate {
  IntMatrix basis;           // 2m x 2(m-n); columns a'_1, b'_1, ...
  Integer joint_determinant;  // det [im f | C]
  bool orthogonal = false;    // (C, im f) = 0
  bool standard_form = false;  // C^T J C = J_{m-n}
  bool valid() const { return abs(joint_determinant) == 1 && orthogonal && standard_form; }
};

ComplementCertificate symplectic_complement(const IntMatrix& f);

}  // namespace lcsfi
