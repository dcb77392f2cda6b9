#include "lcsfi/symplectic.hpp"

#include "lcsfi/error.hpp"

namespace lcsfi {

IntMatrix symplectic_form(int g) {
  IntMatrix j(2 * g, 2 * g);
  for (int i = 0; i < g; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return j;
}

Integer omega(const std::vector<Integer>& u, const std::vector<Integer>& v) {
  if (u.size() != v.size() || u.size() % 2) throw Error(ErrorKind::InvalidArgument, "form needs equal even lengths");
  Integer s = 0;
  for (std::size_t i = 0; i + 1 < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

bool preserves_form(const IntMatrix& f) {
  if (f.rows() % 2 || f.cols() % 2) return false;
  return f.transpose() * symplectic_form(f.rows() / 2) * f == symplectic_form(f.cols() / 2);
}

SpMatrix::SpMatrix(IntMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || !preserves_form(m_))
    throw Error(ErrorKind::NotFormPreserving, "matrix does not preserve the symplectic form");
}

IntMatrix transvection(const std::vector<Integer>& v) {
  const int n = static_cast<int>(v.size());
  if (n % 2) throw Error(ErrorKind::InvalidArgument, "transvection vector must have even length");
  const std::vector<Integer> vj = vec_mul(v, symplectic_form(n / 2));
  IntMatrix t = IntMatrix::identity(n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t(r, c) += v[static_cast<std::size_t>(r)] * vj[static_cast<std::size_t>(c)];
  return t;
}

IntMatrix block_extend(const IntMatrix& m, int new_genus) {
  if (m.rows() != m.cols() || m.rows() > 2 * new_genus) throw Error(ErrorKind::InvalidArgument, "cannot extend to a smaller genus");
  IntMatrix out = IntMatrix::identity(2 * new_genus);
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

IntMatrix x_functor(const FIInjection& f) {
  IntMatrix x(2 * f.target(), 2 * f.source());
  for (int j = 1; j <= f.source(); ++j) {
    x(2 * (f(j) - 1), 2 * (j - 1)) = 1;
    x(2 * (f(j) - 1) + 1, 2 * (j - 1) + 1) = 1;
  }
  return x;
}

ComplementCertificate symplectic_complement(const IntMatrix& f) {
  if (!preserves_form(f)) throw Error(ErrorKind::NotFormPreserving, "input does not preserve the symplectic form");
  const int m = f.rows() / 2;
  std::vector<std::vector<Integer>> vecs;
  const IntMatrix k = left_kernel(symplectic_form(m) * f);
  for (int i = 0; i < k.rows(); ++i) vecs.push_back(k.row(i));

  std::vector<std::vector<Integer>> cols;
  while (!vecs.empty()) {
    const std::vector<Integer> v = vecs.front();
    // w with (v, w) = 1, by extended gcd over the pairings.
    std::vector<Integer> w(v.size());
    Integer g = 0;
    for (const auto& u : vecs) {
      const Integer p = omega(v, u);
      if (p == 0) continue;
      Integer ng, s, t;
      mpz_gcdext(ng.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), p.get_mpz_t());
      for (std::size_t i = 0; i < w.size(); ++i) w[i] = s * w[i] + t * u[i];
      g = ng;
    }
    if (g != 1) throw Error(ErrorKind::NotFormPreserving, "form restricted to the complement is not unimodular");
    IntMatrix rest(0, static_cast<int>(v.size()));
    for (const auto& u : vecs) {
      const Integer uw = omega(u, w);
      const Integer uv = omega(u, v);
      std::vector<Integer> p = u;
      for (std::size_t i = 0; i < p.size(); ++i) p[i] += -uw * v[i] + uv * w[i];
      rest.append_row(p);
    }
    cols.push_back(v);
    cols.push_back(w);
    const IntMatrix b = row_basis(rest);
    vecs.clear();
    for (int i = 0; i < b.rows(); ++i) vecs.push_back(b.row(i));
  }

  ComplementCertificate cert;
  cert.basis = IntMatrix(2 * m, static_cast<int>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (int r = 0; r < 2 * m; ++r) cert.basis(r, static_cast<int>(c)) = cols[c][static_cast<std::size_t>(r)];
  IntMatrix joint(2 * m, 2 * m);
  for (int r = 0; r < 2 * m; ++r) {
    for (int c = 0; c < f.cols(); ++c) joint(r, c) = f(r, c);
    for (int c = 0; c < cert.basis.cols(); ++c) joint(r, f.cols() + c) = cert.basis(r, c);
  }
  cert.joint_determinant = determinant(joint);
  const IntMatrix j = symplectic_form(m);
  cert.orthogonal = (f.transpose() * j * cert.basis).is_zero();
  cert.standard_form = cert.basis.transpose() * j * cert.basis == symplectic_form(cert.basis.cols() / 2);
  return cert;
}

}  // namespace lcsfi
