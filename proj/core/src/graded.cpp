#include "liaison/graded.hpp"

#include <algorithm>
#include <map>

namespace liaison {

GradedFreeModule GradedFreeModule::shifted(int h) const {
  std::vector<int> t = twists_;
  for (int& x : t) x += h;
  return GradedFreeModule(std::move(t));
}

GradedFreeModule GradedFreeModule::dual(int h) const {
  std::vector<int> t;
  t.reserve(twists_.size());
  for (int x : twists_) t.push_back(-x - h);
  return GradedFreeModule(std::move(t));
}

GradedFreeModule GradedFreeModule::direct_sum(const GradedFreeModule& o) const {
  std::vector<int> t = twists_;
  t.insert(t.end(), o.twists_.begin(), o.twists_.end());
  return GradedFreeModule(std::move(t));
}

bool GradedFreeModule::same_twists_up_to_order(const GradedFreeModule& o) const {
  std::vector<int> a = twists_, b = o.twists_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

GradedMatrix::GradedMatrix(PolyRing ring, GradedFreeModule source, GradedFreeModule target)
    : ring_(std::move(ring)),
      src_(std::move(source)),
      tgt_(std::move(target)),
      cols_(src_.rank()),
      entries_(static_cast<size_t>(src_.rank()) * tgt_.rank(), Polynomial::zero(ring_)) {}

GradedMatrix GradedMatrix::identity(const PolyRing& r, const GradedFreeModule& m) {
  GradedMatrix out(r, m, m);
  for (int i = 0; i < m.rank(); ++i) out.set(i, i, Polynomial::constant(r, r.field().one()));
  return out;
}

GradedMatrix GradedMatrix::zero_map(const PolyRing& r, const GradedFreeModule& src,
                                    const GradedFreeModule& tgt) {
  return GradedMatrix(r, src, tgt);
}

void GradedMatrix::set(int i, int j, Polynomial p) {
  require_same_ring(ring_, p.ring());
  entries_[static_cast<size_t>(i) * cols_ + j] = std::move(p);
}

bool GradedMatrix::is_homogeneous() const {
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) {
      const Polynomial& p = at(i, j);
      if (p.is_zero()) continue;
      if (!p.is_homogeneous() || p.degree() != src_.twist(j) - tgt_.twist(i)) return false;
    }
  return true;
}

void GradedMatrix::require_homogeneous(const char* where) const {
  if (!is_homogeneous())
    throw InternalError(std::string("inhomogeneous graded matrix in ") + where);
}

bool GradedMatrix::is_zero() const {
  for (const auto& p : entries_)
    if (!p.is_zero()) return false;
  return true;
}

std::vector<Polynomial> GradedMatrix::column(int j) const {
  std::vector<Polynomial> out;
  out.reserve(rows());
  for (int i = 0; i < rows(); ++i) out.push_back(at(i, j));
  return out;
}

std::vector<Polynomial> GradedMatrix::row(int i) const {
  std::vector<Polynomial> out;
  out.reserve(cols());
  for (int j = 0; j < cols(); ++j) out.push_back(at(i, j));
  return out;
}

GradedMatrix GradedMatrix::dual(int h) const {
  GradedMatrix out(ring_, tgt_.dual(h), src_.dual(h));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out.set(j, i, at(i, j));
  return out;
}

GradedMatrix GradedMatrix::shifted(int h) const {
  GradedMatrix out(ring_, src_.shifted(h), tgt_.shifted(h));
  for (int i = 0; i < rows(); ++i)
    for (int j = 0; j < cols(); ++j) out.set(i, j, at(i, j));
  return out;
}

GradedMatrix GradedMatrix::select_columns(const std::vector<int>& js) const {
  std::vector<int> tw;
  for (int j : js) tw.push_back(src_.twist(j));
  GradedMatrix out(ring_, GradedFreeModule(std::move(tw)), tgt_);
  for (int i = 0; i < rows(); ++i)
    for (size_t k = 0; k < js.size(); ++k) out.set(i, static_cast<int>(k), at(i, js[k]));
  return out;
}

GradedMatrix GradedMatrix::select_rows(const std::vector<int>& is) const {
  std::vector<int> tw;
  for (int i : is) tw.push_back(tgt_.twist(i));
  GradedMatrix out(ring_, src_, GradedFreeModule(std::move(tw)));
  for (size_t k = 0; k < is.size(); ++k)
    for (int j = 0; j < cols(); ++j) out.set(static_cast<int>(k), j, at(is[k], j));
  return out;
}

GradedMatrix matrix_compose(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (b.target() != a.source())
    throw PreconditionError("matrix_compose: twist mismatch between inner modules");
  GradedMatrix out(a.ring(), b.source(), a.target());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      Polynomial acc = Polynomial::zero(a.ring());
      for (int k = 0; k < a.cols(); ++k) acc = poly_add(acc, poly_mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, std::move(acc));
    }
  return out;
}

GradedMatrix matrix_direct_sum(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  GradedMatrix out(a.ring(), a.source().direct_sum(b.source()), a.target().direct_sum(b.target()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, a.cols() + j, b.at(i, j));
  return out;
}

GradedMatrix matrix_hconcat(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.target() != b.target()) throw PreconditionError("matrix_hconcat: target mismatch");
  GradedMatrix out(a.ring(), a.source().direct_sum(b.source()), a.target());
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
    for (int j = 0; j < b.cols(); ++j) out.set(i, a.cols() + j, b.at(i, j));
  }
  return out;
}

GradedMatrix matrix_vconcat(const GradedMatrix& a, const GradedMatrix& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.source() != b.source()) throw PreconditionError("matrix_vconcat: source mismatch");
  GradedMatrix out(a.ring(), a.source(), a.target().direct_sum(b.target()));
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, a.at(i, j));
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) out.set(a.rows() + i, j, b.at(i, j));
  return out;
}

GradedMatrix matrix_neg(const GradedMatrix& a) {
  GradedMatrix out(a.ring(), a.source(), a.target());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) out.set(i, j, poly_neg(a.at(i, j)));
  return out;
}

namespace {

// Fraction-free elimination over the polynomial ring. Mutates a copy of the
// entry grid; returns the rank. Divisions are exact by the Bareiss identity.
int bareiss_rank(const PolyRing& ring, std::vector<std::vector<Polynomial>> m) {
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  Polynomial prev = Polynomial::constant(ring, ring.field().one());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pr = -1;
    for (int i = rank; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[rank]);
    const Polynomial pivot = m[rank][col];
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        Polynomial num = poly_sub(poly_mul(pivot, m[i][j]), poly_mul(m[i][col], m[rank][j]));
        auto q = poly_exact_divide(num, prev);
        if (!q) throw InternalError("Bareiss division was not exact");
        m[i][j] = std::move(*q);
      }
      m[i][col] = Polynomial::zero(ring);
    }
    prev = pivot;
    ++rank;
  }
  return rank;
}

}  // namespace

int poly_matrix_rank(const GradedMatrix& m) {
  std::vector<std::vector<Polynomial>> grid;
  grid.reserve(m.rows());
  for (int i = 0; i < m.rows(); ++i) grid.push_back(m.row(i));
  return bareiss_rank(m.ring(), std::move(grid));
}

Polynomial poly_matrix_minor(const GradedMatrix& m, const std::vector<int>& rows,
                             const std::vector<int>& cols) {
  const PolyRing& ring = m.ring();
  int n = static_cast<int>(rows.size());
  if (n != static_cast<int>(cols.size())) throw PreconditionError("minor needs a square selection");
  if (n == 0) return Polynomial::constant(ring, ring.field().one());
  std::vector<std::vector<Polynomial>> a(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i].push_back(m.at(rows[i], cols[j]));
  // Bareiss determinant with row-swap sign tracking.
  Polynomial prev = Polynomial::constant(ring, ring.field().one());
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int pr = -1;
      for (int i = k + 1; i < n; ++i)
        if (!a[i][k].is_zero()) {
          pr = i;
          break;
        }
      if (pr < 0) return Polynomial::zero(ring);
      std::swap(a[k], a[pr]);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Polynomial num = poly_sub(poly_mul(a[k][k], a[i][j]), poly_mul(a[i][k], a[k][j]));
        auto q = poly_exact_divide(num, prev);
        if (!q) throw InternalError("Bareiss division was not exact");
        a[i][j] = std::move(*q);
      }
    prev = a[k][k];
  }
  Polynomial det = a[n - 1][n - 1];
  return negate ? poly_neg(det) : det;
}

int free_module_dim_in_degree(const PolyRing& r, const GradedFreeModule& m, int d) {
  int total = 0;
  for (int i = 0; i < m.rank(); ++i) {
    int e = d - m.twist(i);
    if (e >= 0) {
      // dim S_e = C(e + nvars - 1, nvars - 1)
      long long num = 1, den = 1;
      for (int k = 1; k <= r.nvars() - 1; ++k) {
        num *= e + k;
        den *= k;
      }
      total += static_cast<int>(num / den);
    }
  }
  return total;
}

DenseMatrix degree_piece(const GradedMatrix& m, int d) {
  const PolyRing& ring = m.ring();
  const auto& F = ring.field();
  // Index monomial bases per twist value.
  auto basis_for = [&](const GradedFreeModule& mod) {
    std::vector<std::pair<int, Monomial>> basis;  // (component, monomial)
    for (int i = 0; i < mod.rank(); ++i)
      for (auto& mo : monomials_of_degree(ring.nvars(), d - mod.twist(i)))
        basis.emplace_back(i, mo);
    return basis;
  };
  auto src_basis = basis_for(m.source());
  auto tgt_basis = basis_for(m.target());
  std::map<std::pair<int, std::vector<int>>, int> tgt_index;
  for (size_t k = 0; k < tgt_basis.size(); ++k)
    tgt_index[{tgt_basis[k].first, tgt_basis[k].second.e}] = static_cast<int>(k);
  DenseMatrix out(F, static_cast<int>(tgt_basis.size()), static_cast<int>(src_basis.size()));
  for (size_t j = 0; j < src_basis.size(); ++j) {
    auto [sc, sm] = src_basis[j];
    for (int i = 0; i < m.rows(); ++i) {
      const Polynomial& p = m.at(i, sc);
      for (const auto& t : p.terms()) {
        auto it = tgt_index.find({i, mono_mul(t.mono, sm).e});
        if (it == tgt_index.end()) throw InternalError("degree_piece: inhomogeneous entry");
        out.at(it->second, static_cast<int>(j)) = F.add(out.at(it->second, static_cast<int>(j)), t.coeff);
      }
    }
  }
  return out;
}

}  // namespace liaison
