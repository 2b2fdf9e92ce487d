#include "ybco/ybcoh.hpp"

#include "ybco/errors.hpp"

namespace ybco {

namespace {

void require_r(const TensorOperator& R) {
  if (R.m_out() != 2 || R.m_in() != 2) throw ShapeError("ybcoh: R must act on V(x)V");
}

void require_field(const Ring& r) {
  if (!r->is_field()) {
    throw NotAField("ybcoh: linear solving needs field coefficients, got " + r->id());
  }
}

// Row-reduces rows in place over a field; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<Coeff>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Coeff inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x = x * inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      Coeff f = rows[k][c];
      for (std::size_t j = c; j < rows[k].size(); ++j) {
        if (!rows[r][j].is_zero()) rows[k][j] = rows[k][j] - f * rows[r][j];
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Coeff scalar_of(const Poly& p) {
  if (p.empty()) return Coeff();
  return p[0].coeff;
}

}  // namespace

TensorOperator ybe_defect(const TensorOperator& R) {
  require_r(R);
  TensorOperator id3 = TensorOperator::identity(R.ring(), R.d(), 3);
  TensorOperator lhs = apply_padded_left(R, 1, apply_padded_left(R, 2, apply_padded_left(R, 1, id3)));
  TensorOperator rhs = apply_padded_left(R, 2, apply_padded_left(R, 1, apply_padded_left(R, 2, id3)));
  return lhs - rhs;
}

TensorOperator delta1(const TensorOperator& R, const TensorOperator& f) {
  require_r(R);
  if (f.m_out() != 1 || f.m_in() != 1) throw ShapeError("ybcoh: delta1 expects a 1-cochain");
  TensorOperator f1 = pad(f, 2, 1);
  TensorOperator f2 = pad(f, 2, 2);
  return compose(R, f1) + compose(R, f2) - compose(f1, R) - compose(f2, R);
}

TensorOperator delta2(const TensorOperator& R, const TensorOperator& phi) {
  require_r(R);
  if (phi.m_out() != 2 || phi.m_in() != 2) throw ShapeError("ybcoh: delta2 expects a 2-cochain");
  TensorOperator p1 = pad(phi, 3, 1);
  TensorOperator p2 = pad(phi, 3, 2);
  auto L = [&](int i, const TensorOperator& x) { return apply_padded_left(R, i, x); };
  auto Rt = [&](const TensorOperator& x, int i) { return apply_padded_right(x, R, i); };
  TensorOperator out = L(1, L(2, p1));
  out = out + L(1, Rt(p2, 1));
  out = out + Rt(Rt(p1, 2), 1);
  out = out - L(2, L(1, p2));
  out = out - L(2, Rt(p1, 2));
  out = out - Rt(Rt(p2, 1), 2);
  return out;
}

TensorOperator partial_diff(const TensorOperator& R, const TensorOperator& phi, int i) {
  require_r(R);
  if (!phi.square() || phi.m() < 1) throw ShapeError("ybcoh: cochain must be an endomorphism of V^n");
  int n = phi.m();
  if (i < 1 || i > n + 1) throw ShapeError("ybcoh: partial differential index out of range");
  TensorOperator x = pad(phi, n + 1, 2);
  for (int j = 1; j <= i - 1; ++j) x = apply_padded_right(x, R, j);
  for (int j = 1; j <= n + 1 - i; ++j) x = apply_padded_left(R, j, x);
  TensorOperator y = pad(phi, n + 1, 1);
  for (int j = n; j >= i; --j) y = apply_padded_right(y, R, j);
  for (int j = n; j >= n + 2 - i; --j) y = apply_padded_left(R, j, y);
  return x - y;
}

TensorOperator full_diff(const TensorOperator& R, const TensorOperator& phi) {
  require_r(R);
  int n = phi.m();
  TensorOperator out(phi.ring(), phi.d(), n + 1);
  for (int i = 1; i <= n + 1; ++i) {
    TensorOperator di = partial_diff(R, phi, i);
    out = (i % 2 == 0) ? out + di : out - di;
  }
  return out;
}

int rank_over_field(const std::vector<TensorOperator>& vectors) {
  if (vectors.empty()) return 0;
  require_field(vectors.front().ring());
  std::size_t len = vectors.front().rows() * vectors.front().cols();
  // Rows of the matrix are the vectors themselves.
  std::vector<std::vector<Coeff>> rows;
  for (const auto& v : vectors) {
    std::vector<Coeff> row(len);
    for (std::size_t i = 0; i < v.rows(); ++i) {
      for (std::size_t j = 0; j < v.cols(); ++j) row[i * v.cols() + j] = scalar_of(v.raw(i, j));
    }
    rows.push_back(std::move(row));
  }
  return static_cast<int>(row_reduce(rows, len).size());
}

std::optional<TensorOperator> cobound_solve(const TensorOperator& R, const TensorOperator& phi) {
  require_r(R);
  require_field(R.ring());
  require_same_ring(R.ring(), phi.ring());
  int d = R.d();
  std::size_t unknowns = static_cast<std::size_t>(d) * d;
  std::vector<TensorOperator> images;
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) {
      TensorOperator e(R.ring(), d, 1);
      e.raw_mut(a, b) = poly::constant(Coeff(1));
      images.push_back(delta1(R, e));
    }
  }
  std::size_t eqs = phi.rows() * phi.cols();
  std::vector<std::vector<Coeff>> rows(eqs, std::vector<Coeff>(unknowns + 1));
  for (std::size_t k = 0; k < unknowns; ++k) {
    for (std::size_t e = 0; e < eqs; ++e) {
      rows[e][k] = scalar_of(images[k].raw(e / phi.cols(), e % phi.cols()));
    }
  }
  for (std::size_t e = 0; e < eqs; ++e) rows[e][unknowns] = scalar_of(phi.raw(e / phi.cols(), e % phi.cols()));
  auto pivots = row_reduce(rows, unknowns + 1);
  if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
  TensorOperator f(R.ring(), d, 1);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    std::size_t k = pivots[r];
    f.raw_mut(k / d, k % d) = poly::constant(rows[r][unknowns]);
  }
  if (!(delta1(R, f) == phi)) throw InternalError("ybcoh: coboundary solution fails verification");
  return f;
}

int cohomology_dimension(const TensorOperator& R, int n) {
  require_r(R);
  require_field(R.ring());
  if (n < 1) throw DomainError("ybcoh: cohomology degree must be >= 1");
  int d = R.d();
  auto diff_rank = [&](int k) {
    std::vector<TensorOperator> images;
    std::size_t dim = ipow(d, k);
    for (std::size_t a = 0; a < dim; ++a) {
      for (std::size_t b = 0; b < dim; ++b) {
        TensorOperator e(R.ring(), d, k);
        e.raw_mut(a, b) = poly::constant(Coeff(1));
        images.push_back(full_diff(R, e));
      }
    }
    return rank_over_field(images);
  };
  int dim_cn = static_cast<int>(ipow(d, 2 * n));
  int kernel = dim_cn - diff_rank(n);
  int image = n >= 2 ? diff_rank(n - 1) : 0;
  return kernel - image;
}

}  // namespace ybco
