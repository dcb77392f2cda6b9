#include "lcsfi/fi_calc.hpp"

#include <algorithm>
#include <numeric>

#include "lcsfi/error.hpp"

namespace lcsfi {

FIPresentation::FIPresentation(std::vector<int> generators, std::vector<FIRelation> relations)
    : generators_(std::move(generators)), relations_(std::move(relations)) {
  for (int n : generators_)
    if (n < 0) throw Error(ErrorKind::InvalidArgument, "generator degree must be nonnegative");
  for (const FIRelation& r : relations_) {
    for (const FITerm& t : r.terms) {
      if (t.gen < 0 || t.gen >= static_cast<int>(generators_.size()))
        throw Error(ErrorKind::InvalidArgument, "relation term names a missing generator");
      if (t.inj.source() != generators_[static_cast<std::size_t>(t.gen)])
        throw Error(ErrorKind::InvalidArgument, "relation injection source differs from generator degree");
      if (t.inj.target() != r.degree)
        throw Error(ErrorKind::InvalidArgument, "relation terms must share the relation degree");
    }
  }
}

FIPresentation FIPresentation::principal(int n) { return FIPresentation({n}, {}); }

int FIPresentation::max_generator_degree() const {
  return generators_.empty() ? 0 : *std::max_element(generators_.begin(), generators_.end());
}

FreeLevel free_level(const std::vector<int>& generators, int m) {
  FreeLevel lvl;
  for (int n : generators) {
    lvl.offsets.push_back(lvl.rank);
    lvl.rank += injection_count(n, m).get_ui();
  }
  return lvl;
}

IntMatrix relation_rows(const FIPresentation& f, int m) {
  const FreeLevel lvl = free_level(f.generators(), m);
  IntMatrix rows(0, static_cast<int>(lvl.rank));
  for (const FIRelation& r : f.relations()) {
    for (const FIInjection& h : all_injections(r.degree, m)) {
      std::vector<Integer> row(lvl.rank);
      bool nonzero = false;
      for (const FITerm& t : r.terms) {
        const std::size_t col = lvl.offsets[static_cast<std::size_t>(t.gen)] + injection_index(compose(h, t.inj));
        row[col] += t.coeff;
      }
      for (const Integer& x : row) nonzero = nonzero || x != 0;
      if (nonzero) rows.append_row(row);
    }
  }
  return rows;
}

PPEval pp_eval(int n, int m) {
  PPEval e;
  e.basis = all_injections(n, m);
  e.group.free_rank = static_cast<int>(e.basis.size());
  return e;
}

AbelianGroup fi_eval(const FIPresentation& f, int m) {
  return cokernel_of_rows(relation_rows(f, m), static_cast<int>(free_level(f.generators(), m).rank));
}

IntMatrix free_shift_rows(const std::vector<int>& generators, int m, int s) {
  const FreeLevel src = free_level(generators, m);
  const FreeLevel dst = free_level(generators, m + 1);
  IntMatrix rows(static_cast<int>(src.rank), static_cast<int>(dst.rank));
  for (std::size_t i = 0; i < generators.size(); ++i) {
    std::size_t r = src.offsets[i];
    for (const FIInjection& f : all_injections(generators[i], m)) {
      std::vector<int> v = f.values();
      for (int& x : v)
        if (x > s) ++x;
      const FIInjection g(m + 1, std::move(v));
      rows(static_cast<int>(r), static_cast<int>(dst.offsets[i] + injection_index(g))) = 1;
      ++r;
    }
  }
  return rows;
}

IntMatrix fi_shift_maps(const FIPresentation& f, int m) { return free_shift_rows(f.generators(), m, 0).transpose(); }

namespace {

IntMatrix stack(const IntMatrix& top, const IntMatrix& bottom) {
  IntMatrix out = top;
  for (int i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

std::vector<FIRelation> concat(const std::vector<FIRelation>& a, const std::vector<FIRelation>& b) {
  std::vector<FIRelation> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace

KerCoker fi_ker_coker(const FIPresentation& f, int m) {
  auto base = FIModuleExpr::base(f);
  return {FIModuleExpr::ker(base)->value(m), FIModuleExpr::coker(base)->value(m)};
}

std::shared_ptr<FIModuleExpr> FIModuleExpr::base(FIPresentation f) {
  std::shared_ptr<FIModuleExpr> e(new FIModuleExpr());
  e->kind_ = Kind::Base;
  e->pres_ = std::move(f);
  return e;
}

std::shared_ptr<FIModuleExpr> FIModuleExpr::relation_kernel(FIPresentation f, std::vector<FIRelation> extra) {
  std::shared_ptr<FIModuleExpr> e(new FIModuleExpr());
  e->kind_ = Kind::RelationKernel;
  e->pres_ = std::move(f);
  e->extra_ = std::move(extra);
  return e;
}

std::shared_ptr<FIModuleExpr> FIModuleExpr::quotient(FIPresentation f, std::vector<FIRelation> extra) {
  return base(FIPresentation(f.generators(), concat(f.relations(), extra)));
}

std::shared_ptr<FIModuleExpr> FIModuleExpr::ker(std::shared_ptr<FIModuleExpr> inner) {
  std::shared_ptr<FIModuleExpr> e(new FIModuleExpr());
  e->kind_ = Kind::Ker;
  e->pres_ = inner->pres_;
  e->inner_ = std::move(inner);
  return e;
}

std::shared_ptr<FIModuleExpr> FIModuleExpr::coker(std::shared_ptr<FIModuleExpr> inner) {
  std::shared_ptr<FIModuleExpr> e(new FIModuleExpr());
  e->kind_ = Kind::Coker;
  e->pres_ = inner->pres_;
  e->inner_ = std::move(inner);
  return e;
}

int FIModuleExpr::max_generator_degree() const { return pres_.max_generator_degree(); }

const FIModuleExpr::Subquotient& FIModuleExpr::eval(int m) {
  {
    std::lock_guard lock(mu_);
    auto it = memo_.find(m);
    if (it != memo_.end()) return it->second;
  }
  Subquotient sq;
  const auto& gens = pres_.generators();
  switch (kind_) {
    case Kind::Base: {
      const int r = static_cast<int>(free_level(gens, m).rank);
      sq.a = IntMatrix::identity(r);
      sq.b = relation_rows(pres_, m);
      break;
    }
    case Kind::RelationKernel: {
      const FIPresentation q(gens, concat(pres_.relations(), extra_));
      sq.a = row_basis(relation_rows(q, m));
      sq.b = relation_rows(pres_, m);
      break;
    }
    case Kind::Ker: {
      const Subquotient here = inner_->eval(m);
      const Subquotient& next = inner_->eval(m + 1);
      const IntMatrix s = free_shift_rows(gens, m + here.shift, here.shift);
      const IntMatrix as = here.a * s;
      // (x, y) with x A S + y B' = 0; the new numerator is { x A }.
      const IntMatrix kern = left_kernel(stack(as, next.b));
      IntMatrix xa(0, here.a.cols());
      for (int i = 0; i < kern.rows(); ++i) {
        std::vector<Integer> x(static_cast<std::size_t>(here.a.rows()));
        for (int j = 0; j < here.a.rows(); ++j) x[static_cast<std::size_t>(j)] = kern(i, j);
        xa.append_row(vec_mul(x, here.a));
      }
      sq.a = row_basis(xa);
      sq.b = here.b;
      sq.shift = here.shift;
      break;
    }
    case Kind::Coker: {
      const Subquotient here = inner_->eval(m);
      const Subquotient& next = inner_->eval(m + 1);
      const IntMatrix s = free_shift_rows(gens, m + here.shift, here.shift);
      sq.a = next.a;
      sq.b = stack(next.b, here.a * s);
      sq.shift = here.shift + 1;
      break;
    }
  }
  std::lock_guard lock(mu_);
  return memo_.try_emplace(m, std::move(sq)).first->second;
}

AbelianGroup FIModuleExpr::value(int m) {
  const Subquotient& sq = eval(m);
  if (sq.a.cols() == 0 || sq.a.rows() == 0) return {};
  return subquotient(sq.a, sq.b.cols() == sq.a.cols() ? sq.b : IntMatrix(0, sq.a.cols()));
}

std::string DegreeVerdict::to_string() const {
  switch (kind) {
    case Kind::Certified:
      return "certified degree <= " + std::to_string(degree) + " on window [" + std::to_string(degree + 1) + ", " +
             std::to_string(window) + "]";
    case Kind::Refuted:
      return "refuted: " + (path.empty() ? std::string("F") : path) + " nonzero at m=" + std::to_string(witness);
    case Kind::Inconclusive:
      return "inconclusive: window [" + std::to_string(degree + 1) + ", " + std::to_string(window) +
             "] too short at " + path;
  }
  return "";
}

namespace {

// Vanishing checks over [low, high]; high shrinks by one per Ker/Coker level.
DegreeVerdict certify_rec(const std::shared_ptr<FIModuleExpr>& f, int e, int low, int high, const std::string& path) {
  DegreeVerdict v;
  if (e < 0) {
    if (high < low) {
      v.kind = DegreeVerdict::Kind::Inconclusive;
      v.path = path.empty() ? "F" : path;
      return v;
    }
    for (int m = low; m <= high; ++m) {
      if (!f->value(m).is_zero()) {
        v.kind = DegreeVerdict::Kind::Refuted;
        v.witness = m;
        v.path = path;
        return v;
      }
    }
    v.kind = DegreeVerdict::Kind::Certified;
    return v;
  }
  const std::string prefix = path.empty() ? "" : path + " ";
  DegreeVerdict k = certify_rec(FIModuleExpr::ker(f), -1, low, high - 1, prefix + "Ker");
  if (k.kind == DegreeVerdict::Kind::Refuted) return k;
  DegreeVerdict c = certify_rec(FIModuleExpr::coker(f), e - 1, low, high - 1, prefix + "Coker");
  if (c.kind == DegreeVerdict::Kind::Refuted) return c;
  if (k.kind == DegreeVerdict::Kind::Inconclusive) return k;
  return c;
}

}  // namespace

DegreeVerdict fi_degree_certify(const std::shared_ptr<FIModuleExpr>& f, int d, int n_bound) {
  if (d < -1) throw Error(ErrorKind::InvalidArgument, "degree must be at least -1");
  if (n_bound < d + f->max_generator_degree() + 1)
    throw Error(ErrorKind::WindowTooSmall, "need N >= d + max generator degree + 1 = " +
                                               std::to_string(d + f->max_generator_degree() + 1));
  DegreeVerdict v = certify_rec(f, d, d + 1, n_bound, "");
  v.degree = d;
  v.window = n_bound;
  return v;
}

DegreeVerdict fi_degree_certify(const FIPresentation& f, int d, int n_bound) {
  return fi_degree_certify(FIModuleExpr::base(f), d, n_bound);
}

int six_term_rank_defect(const FIPresentation& f, const std::vector<FIRelation>& extra, int m) {
  auto k = FIModuleExpr::relation_kernel(f, extra);
  auto full = FIModuleExpr::base(f);
  auto q = FIModuleExpr::quotient(f, extra);
  const int terms[6] = {
      FIModuleExpr::ker(k)->value(m).free_rank,   FIModuleExpr::ker(full)->value(m).free_rank,
      FIModuleExpr::ker(q)->value(m).free_rank,   FIModuleExpr::coker(k)->value(m).free_rank,
      FIModuleExpr::coker(full)->value(m).free_rank, FIModuleExpr::coker(q)->value(m).free_rank,
  };
  int defect = 0;
  for (int i = 0; i < 6; ++i) defect += (i % 2 ? -terms[i] : terms[i]);
  return defect;
}

namespace {

void subsets(int n, int a, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == a) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i <= n; ++i) {
    cur.push_back(i);
    subsets(n, a, i + 1, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int a) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  subsets(n, a, 1, cur, out);
  return out;
}

}  // namespace

std::vector<TensorSummand> tensor_decompose(int n, int m) {
  std::vector<TensorSummand> out;
  for (int a = 0; a <= std::min(n, m); ++a) {
    const auto ns = subsets(n, a);
    const auto ms = subsets(m, a);
    for (const auto& nsub : ns)
      for (const auto& msub : ms) {
        std::vector<int> sigma = msub;
        do {
          out.push_back({nsub, msub, sigma, n + m - a});
        } while (std::next_permutation(sigma.begin(), sigma.end()));
      }
  }
  return out;
}

RankIdentity tensor_rank_identity(int n, int m, int k) {
  RankIdentity r;
  for (int a = 0; a <= std::min(n, m); ++a)
    r.lhs += factorial(a) * factorial(n + m - a) * binomial(n, a) * binomial(m, a) * binomial(k, n + m - a);
  r.rhs = factorial(n) * factorial(m) * binomial(k, n) * binomial(k, m);
  for (const TensorSummand& s : tensor_decompose(n, m)) r.decomposition_sum += injection_count(s.degree, k);
  return r;
}

DupReduction dup_reduce(const FIInjection& f) {
  const int n = f.source();
  if (f.target() % 2 != 0) throw Error(ErrorKind::InvalidArgument, "duplication needs an even target 2m");
  const int m = f.target() / 2;
  if (m <= n) throw Error(ErrorKind::InvalidArgument, "duplication needs m > n");
  DupReduction r;
  for (int i = 1; i <= m; ++i)
    if (!f.in_image(i) && !f.in_image(i + m)) {
      r.slot = i;
      break;
    }
  const int i = r.slot;
  std::vector<int> g;
  for (int j = 1; j <= m - 1; ++j) g.push_back(j < i ? j : j + 1);
  r.g = FIInjection(m, std::move(g));
  std::vector<int> fp;
  for (int v : f.values()) {
    if (v < i)
      fp.push_back(v);
    else if (v < i + m)
      fp.push_back(v - 1);
    else
      fp.push_back(v - 2);
  }
  r.f_prime = FIInjection(2 * (m - 1), std::move(fp));
  if (compose(disjoint_union(r.g, r.g), r.f_prime) != f)
    throw Error(ErrorKind::InvalidArgument, "duplication witnesses failed to recompose");
  return r;
}

}  // namespace lcsfi
