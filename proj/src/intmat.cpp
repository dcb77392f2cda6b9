#include "lcsfi/intmat.hpp"

#include <algorithm>
#include <sstream>

#include "lcsfi/error.hpp"

namespace lcsfi {

IntMatrix::IntMatrix(int rows, int cols, std::initializer_list<long> entries) : IntMatrix(rows, cols) {
  if (entries.size() != data_.size()) throw Error(ErrorKind::InvalidArgument, "matrix literal has wrong size");
  std::size_t i = 0;
  for (long e : entries) data_[i++] = e;
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows, int cols) {
  IntMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

std::vector<Integer> IntMatrix::row(int i) const {
  auto first = data_.begin() + static_cast<std::ptrdiff_t>(i * cols_);
  return std::vector<Integer>(first, first + cols_);
}

void IntMatrix::append_row(const std::vector<Integer>& r) {
  if (static_cast<int>(r.size()) != cols_) throw Error(ErrorKind::InvalidArgument, "row length mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool IntMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Integer& x) { return x == 0; });
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::InvalidArgument, "matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::InvalidArgument, "shape mismatch");
  IntMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::InvalidArgument, "shape mismatch");
  IntMatrix c = a;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

std::vector<Integer> vec_mul(const std::vector<Integer>& x, const IntMatrix& m) {
  if (static_cast<int>(x.size()) != m.rows()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  std::vector<Integer> y(static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i) {
    if (x[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) y[static_cast<std::size_t>(j)] += x[static_cast<std::size_t>(i)] * m(i, j);
  }
  return y;
}

std::string format_matrix(const IntMatrix& m) {
  std::ostringstream out;
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) out << (j ? "\t" : "") << m(i, j).get_str();
    out << '\n';
  }
  return out.str();
}

namespace {

void swap_rows(IntMatrix& m, int a, int b) {
  if (a == b) return;
  for (int j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// row_a <- row_a - q * row_b
void sub_row(IntMatrix& m, int a, int b, const Integer& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols(); ++j)
    if (m(b, j) != 0) m(a, j) -= q * m(b, j);
}

void negate_row(IntMatrix& m, int a) {
  for (int j = 0; j < m.cols(); ++j) m(a, j) = -m(a, j);
}

// (row_a, row_b) <- (s*row_a + t*row_b, -(b/g)*row_a + (a/g)*row_b); unimodular.
void combine_rows(IntMatrix& m, int a, int b, const Integer& s, const Integer& t, const Integer& bg,
                  const Integer& ag) {
  for (int j = 0; j < m.cols(); ++j) {
    Integer x = m(a, j);
    Integer y = m(b, j);
    if (x == 0 && y == 0) continue;
    m(a, j) = s * x + t * y;
    m(b, j) = ag * y - bg * x;
  }
}

}  // namespace

RowEchelon row_echelon(const IntMatrix& m, bool want_transform) {
  RowEchelon e;
  e.h = m;
  if (want_transform) e.u = IntMatrix::identity(m.rows());
  IntMatrix& h = e.h;
  int r = 0;
  for (int col = 0; col < h.cols() && r < h.rows(); ++col) {
    for (int i = r + 1; i < h.rows(); ++i) {
      if (h(i, col) == 0) continue;
      if (h(r, col) == 0) {
        swap_rows(h, r, i);
        if (want_transform) swap_rows(e.u, r, i);
        continue;
      }
      const Integer a = h(r, col);
      const Integer b = h(i, col);
      if (b % a == 0) {
        const Integer q = b / a;
        sub_row(h, i, r, q);
        if (want_transform) sub_row(e.u, i, r, q);
        continue;
      }
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      const Integer ag = a / g;
      const Integer bg = b / g;
      combine_rows(h, r, i, s, t, bg, ag);
      if (want_transform) combine_rows(e.u, r, i, s, t, bg, ag);
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      negate_row(h, r);
      if (want_transform) negate_row(e.u, r);
    }
    for (int i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), h(i, col).get_mpz_t(), h(r, col).get_mpz_t());
      sub_row(h, i, r, q);
      if (want_transform) sub_row(e.u, i, r, q);
    }
    e.pivots.push_back(col);
    ++r;
  }
  e.rank = r;
  return e;
}

int matrix_rank(const IntMatrix& m) { return row_echelon(m, false).rank; }

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of a non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      swap_rows(a, k, p);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMatrix left_kernel(const IntMatrix& m) {
  const RowEchelon e = row_echelon(m, true);
  IntMatrix k(0, m.rows());
  for (int i = e.rank; i < m.rows(); ++i) k.append_row(e.u.row(i));
  return k;
}

IntMatrix row_basis(const IntMatrix& m) {
  const RowEchelon e = row_echelon(m, false);
  IntMatrix b(0, m.cols());
  for (int i = 0; i < e.rank; ++i) b.append_row(e.h.row(i));
  return b;
}

std::vector<Integer> smith_invariants(const IntMatrix& m) {
  // Alternate row and column Hermite reduction until diagonal.
  IntMatrix cur = row_basis(m);
  for (;;) {
    bool diagonal = true;
    for (int i = 0; i < cur.rows() && diagonal; ++i)
      for (int j = 0; j < cur.cols(); ++j)
        if (i != j && cur(i, j) != 0) {
          diagonal = false;
          break;
        }
    if (diagonal) break;
    cur = row_basis(cur.transpose());
  }
  std::vector<Integer> d;
  for (int i = 0; i < std::min(cur.rows(), cur.cols()); ++i)
    if (cur(i, i) != 0) d.push_back(abs(cur(i, i)));
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Integer g, l;
      mpz_gcd(g.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), d[i].get_mpz_t(), d[j].get_mpz_t());
      d[i] = g;
      d[j] = l;
    }
  return d;
}

std::optional<std::vector<Integer>> lattice_coords(const RowEchelon& form, const std::vector<Integer>& v) {
  if (static_cast<int>(v.size()) != form.h.cols()) throw Error(ErrorKind::InvalidArgument, "vector length mismatch");
  std::vector<Integer> residual = v;
  std::vector<Integer> y(static_cast<std::size_t>(form.rank));
  for (int i = 0; i < form.rank; ++i) {
    const int p = form.pivots[static_cast<std::size_t>(i)];
    const Integer& piv = form.h(i, p);
    Integer& r = residual[static_cast<std::size_t>(p)];
    if (r == 0) continue;
    if (r % piv != 0) return std::nullopt;
    const Integer q = r / piv;
    y[static_cast<std::size_t>(i)] = q;
    for (int j = p; j < form.h.cols(); ++j)
      if (form.h(i, j) != 0) residual[static_cast<std::size_t>(j)] -= q * form.h(i, j);
  }
  for (const Integer& r : residual)
    if (r != 0) return std::nullopt;
  if (form.u.rows() == 0) return y;
  std::vector<Integer> c(static_cast<std::size_t>(form.u.cols()));
  for (int i = 0; i < form.rank; ++i) {
    if (y[static_cast<std::size_t>(i)] == 0) continue;
    for (int j = 0; j < form.u.cols(); ++j) c[static_cast<std::size_t>(j)] += y[static_cast<std::size_t>(i)] * form.u(i, j);
  }
  return c;
}

std::string AbelianGroup::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  if (free_rank > 0) s = free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank);
  for (const Integer& t : torsion) s += (s.empty() ? "" : " + ") + std::string("Z/") + t.get_str();
  return s;
}

AbelianGroup cokernel_of_rows(const IntMatrix& relations, int ambient) {
  AbelianGroup g;
  const auto d = smith_invariants(relations);
  g.free_rank = ambient - static_cast<int>(d.size());
  for (const Integer& x : d)
    if (x != 1) g.torsion.push_back(x);
  return g;
}

AbelianGroup subquotient(const IntMatrix& a, const IntMatrix& b) {
  RowEchelon form = row_echelon(a, false);
  form.h = row_basis(a);
  form.u = IntMatrix();
  IntMatrix coords(0, form.rank);
  for (int i = 0; i < b.rows(); ++i) {
    auto c = lattice_coords(form, b.row(i));
    if (!c) throw Error(ErrorKind::InvalidArgument, "subquotient: relation lattice not contained in generator lattice");
    coords.append_row(*c);
  }
  return cokernel_of_rows(coords, form.rank);
}

}  // namespace lcsfi
