#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcsfi/integer.hpp"

namespace lcsfi {

/// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  IntMatrix(int rows, int cols, std::initializer_list<long> entries);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<Integer>>& rows, int cols);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  Integer& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const Integer& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  std::vector<Integer> row(int i) const;
  void append_row(const std::vector<Integer>& r);
  IntMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
std::vector<Integer> vec_mul(const std::vector<Integer>& x, const IntMatrix& m);
std::string format_matrix(const IntMatrix& m);

// Row-style Hermite form: H = U*M with U unimodular, nonzero rows first with
// strictly increasing pivot columns, positive pivots, entries above a pivot
// reduced into [0, pivot).
struct RowEchelon {
  IntMatrix h;
  IntMatrix u;
  int rank = 0;
  std::vector<int> pivots;
};

RowEchelon row_echelon(const IntMatrix& m, bool want_transform = true);
int matrix_rank(const IntMatrix& m);
Integer determinant(const IntMatrix& m);

// Basis (as rows) of { x : x*M = 0 }, saturated in Z^rows.
IntMatrix left_kernel(const IntMatrix& m);

// Nonzero Smith invariants d_1 | d_2 | ..., all positive.
std::vector<Integer> smith_invariants(const IntMatrix& m);

// Basis rows for the row span of m.
IntMatrix row_basis(const IntMatrix& m);

// Coordinates c with c*basis = v, if v lies in the row lattice of basis.
std::optional<std::vector<Integer>> lattice_coords(const RowEchelon& basis_form, const std::vector<Integer>& v);

/// Finitely generated abelian group Z^r ⊕ ⊕ Z/d_i.
struct AbelianGroup {
  int free_rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return free_rank == 0 && torsion.empty(); }
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of the relation rows inside Z^ambient.
AbelianGroup cokernel_of_rows(const IntMatrix& relations, int ambient);

// A / B for row lattices B ⊆ A in a common ambient lattice. Throws if B ⊄ A.
AbelianGroup subquotient(const IntMatrix& a, const IntMatrix& b);

}  // namespace lcsfi
