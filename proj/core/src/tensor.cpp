#include "ybco/tensor.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ybco/errors.hpp"

namespace ybco {

std::size_t ipow(std::size_t base, int exp) {
  std::size_t r = 1;
  for (int k = 0; k < exp; ++k) r *= base;
  return r;
}

TensorOperator::TensorOperator(Ring ring, int d, int m) : TensorOperator(std::move(ring), d, m, m) {}

TensorOperator::TensorOperator(Ring ring, int d, int m_out, int m_in)
    : ring_(std::move(ring)), d_(d), m_out_(m_out), m_in_(m_in) {
  if (!ring_) throw InternalError("tensor: null ring");
  if (d < 1 || m_out < 0 || m_in < 0) {
    throw ShapeError("tensor: invalid shape d=" + std::to_string(d) + " m=" +
                     std::to_string(m_out) + ":" + std::to_string(m_in));
  }
  rows_ = ipow(d, m_out);
  cols_ = ipow(d, m_in);
  if (rows_ * cols_ > (std::size_t{1} << 26)) throw ShapeError("tensor: operator too large");
  data_.resize(rows_ * cols_);
}

TensorOperator TensorOperator::identity(const Ring& ring, int d, int m) {
  TensorOperator f(ring, d, m);
  for (std::size_t k = 0; k < f.rows_; ++k) f.raw_mut(k, k) = poly::constant(Coeff(1));
  return f;
}

TensorOperator TensorOperator::from_rows(const Ring& ring, int d, int m_out, int m_in,
                                         const std::vector<std::vector<std::int64_t>>& rows) {
  TensorOperator f(ring, d, m_out, m_in);
  if (rows.size() != f.rows_) throw ShapeError("tensor: wrong number of rows");
  for (std::size_t r = 0; r < f.rows_; ++r) {
    if (rows[r].size() != f.cols_) throw ShapeError("tensor: wrong number of columns");
    for (std::size_t c = 0; c < f.cols_; ++c) {
      f.raw_mut(r, c) = poly::constant(Coeff(rows[r][c]));
    }
  }
  return f;
}

RingElement TensorOperator::entry(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw ShapeError("tensor: entry index out of range");
  return RingElement(ring_, raw(row, col));
}

std::size_t TensorOperator::flat_index(const std::vector<int>& digits) const {
  std::size_t idx = 0;
  for (int x : digits) {
    if (x < 0 || x >= d_) throw ShapeError("tensor: basis index out of range");
    idx = idx * d_ + x;
  }
  return idx;
}

RingElement TensorOperator::at(const std::vector<int>& out, const std::vector<int>& in) const {
  if (static_cast<int>(out.size()) != m_out_ || static_cast<int>(in.size()) != m_in_) {
    throw ShapeError("tensor: multi-index length mismatch");
  }
  return entry(flat_index(out), flat_index(in));
}

void TensorOperator::set(std::size_t row, std::size_t col, const RingElement& v) {
  if (row >= rows_ || col >= cols_) throw ShapeError("tensor: entry index out of range");
  require_same_ring(ring_, v.ring());
  raw_mut(row, col) = v.poly();
}

void TensorOperator::set(const std::vector<int>& out, const std::vector<int>& in, const RingElement& v) {
  if (static_cast<int>(out.size()) != m_out_ || static_cast<int>(in.size()) != m_in_) {
    throw ShapeError("tensor: multi-index length mismatch");
  }
  set(flat_index(out), flat_index(in), v);
}

bool TensorOperator::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Poly& p) { return p.empty(); });
}

std::size_t TensorOperator::nonzeros() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Poly& p) { return !p.empty(); }));
}

bool operator==(const TensorOperator& a, const TensorOperator& b) {
  if (a.d_ != b.d_ || a.m_out_ != b.m_out_ || a.m_in_ != b.m_in_) return false;
  if (!same_ring(a.ring_, b.ring_)) return false;
  for (std::size_t k = 0; k < a.data_.size(); ++k) {
    if (!(RingElement(a.ring_, a.data_[k]) == RingElement(b.ring_, b.data_[k]))) return false;
  }
  return true;
}

std::string TensorOperator::to_text() const {
  std::ostringstream os;
  os << d_ << " ";
  if (square()) {
    os << m_out_;
  } else {
    os << m_out_ << ":" << m_in_;
  }
  os << " " << ring_->id() << "\n";
  for (const auto& p : data_) os << RingElement(ring_, p).to_string() << "\n";
  return os.str();
}

TensorOperator TensorOperator::from_text(std::string_view text) {
  std::istringstream is{std::string(text)};
  std::string header;
  if (!std::getline(is, header)) throw ParseError("tensor: empty operator text");
  std::istringstream hs(header);
  int d = 0;
  std::string shape, ring_id;
  if (!(hs >> d >> shape >> ring_id)) throw ParseError("tensor: bad header '" + header + "'");
  int m_out, m_in;
  try {
    auto colon = shape.find(':');
    if (colon == std::string::npos) {
      m_out = m_in = std::stoi(shape);
    } else {
      m_out = std::stoi(shape.substr(0, colon));
      m_in = std::stoi(shape.substr(colon + 1));
    }
  } catch (const std::exception&) {
    throw ParseError("tensor: bad shape '" + shape + "'");
  }
  Ring ring = parse_ring(ring_id);
  TensorOperator f(ring, d, m_out, m_in);
  std::string line;
  std::size_t k = 0;
  while (std::getline(is, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (k >= f.data_.size()) throw ParseError("tensor: too many entries");
    f.data_[k++] = parse_element(ring, line).poly();
  }
  if (k != f.data_.size()) {
    throw ParseError("tensor: expected " + std::to_string(f.data_.size()) + " entries, got " +
                     std::to_string(k));
  }
  return f;
}

void require_same_shape(const TensorOperator& a, const TensorOperator& b, const char* what) {
  if (a.d() != b.d() || a.m_out() != b.m_out() || a.m_in() != b.m_in()) {
    throw ShapeError(std::string("tensor: shape mismatch in ") + what);
  }
  require_same_ring(a.ring(), b.ring());
}

TensorOperator compose(const TensorOperator& f, const TensorOperator& g) {
  if (f.d() != g.d() || f.m_in() != g.m_out()) {
    throw ShapeError("tensor: cannot compose operators of shapes " + std::to_string(f.m_out()) + ":" +
                     std::to_string(f.m_in()) + " and " + std::to_string(g.m_out()) + ":" +
                     std::to_string(g.m_in()));
  }
  require_same_ring(f.ring(), g.ring());
  const RingDescriptor& r = *f.ring();
  TensorOperator out(f.ring(), f.d(), f.m_out(), g.m_in());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Poly& a = f.raw(i, k);
      if (a.empty()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Poly& b = g.raw(k, j);
        if (b.empty()) continue;
        poly::add_product_into(r, out.raw_mut(i, j), a, b);
      }
    }
  }
  return out;
}

TensorOperator tensor(const TensorOperator& f, const TensorOperator& g) {
  if (f.d() != g.d()) throw ShapeError("tensor: rank mismatch in tensor product");
  require_same_ring(f.ring(), g.ring());
  const RingDescriptor& r = *f.ring();
  TensorOperator out(f.ring(), f.d(), f.m_out() + g.m_out(), f.m_in() + g.m_in());
  for (std::size_t i1 = 0; i1 < f.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < f.cols(); ++j1) {
      const Poly& a = f.raw(i1, j1);
      if (a.empty()) continue;
      for (std::size_t i2 = 0; i2 < g.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < g.cols(); ++j2) {
          const Poly& b = g.raw(i2, j2);
          if (b.empty()) continue;
          out.raw_mut(i1 * g.rows() + i2, j1 * g.cols() + j2) = poly::mul(r, a, b);
        }
      }
    }
  }
  return out;
}

TensorOperator pad(const TensorOperator& f, int m, int i) {
  int left = i - 1;
  int right = m - i - f.m_in() + 1;
  if (i < 1 || right < 0) {
    throw ShapeError("tensor: pad position " + std::to_string(i) + " out of range for arity " +
                     std::to_string(m));
  }
  TensorOperator out = f;
  if (left > 0) out = tensor(TensorOperator::identity(f.ring(), f.d(), left), out);
  if (right > 0) out = tensor(out, TensorOperator::identity(f.ring(), f.d(), right));
  return out;
}

TensorOperator partial_trace(const TensorOperator& f, const std::vector<int>& factors) {
  if (!f.square()) throw ShapeError("tensor: partial trace of a non-square operator");
  std::set<int> traced(factors.begin(), factors.end());
  for (int p : traced) {
    if (p < 1 || p > f.m()) {
      throw ShapeError("tensor: trace position " + std::to_string(p) + " out of range");
    }
  }
  if (traced.empty()) return f;
  int m = f.m();
  int d = f.d();
  std::vector<int> kept;
  for (int p = 1; p <= m; ++p) {
    if (!traced.count(p)) kept.push_back(p);
  }
  int mk = static_cast<int>(kept.size());
  int mt = static_cast<int>(traced.size());
  std::vector<std::size_t> weight(m + 1);
  for (int p = 1; p <= m; ++p) weight[p] = ipow(d, m - p);
  auto spread = [&](std::size_t idx, const std::vector<int>& positions) {
    std::size_t out = 0;
    for (int k = static_cast<int>(positions.size()) - 1; k >= 0; --k) {
      out += (idx % d) * weight[positions[k]];
      idx /= d;
    }
    return out;
  };
  std::vector<int> tpos(traced.begin(), traced.end());
  std::size_t nk = ipow(d, mk), nt = ipow(d, mt);
  std::vector<std::size_t> kept_off(nk), traced_off(nt);
  for (std::size_t a = 0; a < nk; ++a) kept_off[a] = spread(a, kept);
  for (std::size_t t = 0; t < nt; ++t) traced_off[t] = spread(t, tpos);
  const RingDescriptor& r = *f.ring();
  TensorOperator out(f.ring(), d, mk);
  for (std::size_t a = 0; a < nk; ++a) {
    for (std::size_t b = 0; b < nk; ++b) {
      Poly acc;
      for (std::size_t t = 0; t < nt; ++t) {
        poly::add_into(r, acc, f.raw(kept_off[a] + traced_off[t], kept_off[b] + traced_off[t]));
      }
      out.raw_mut(a, b) = std::move(acc);
    }
  }
  return out;
}

RingElement trace(const TensorOperator& f) {
  if (!f.square()) throw ShapeError("tensor: trace of a non-square operator");
  Poly acc;
  for (std::size_t k = 0; k < f.rows(); ++k) poly::add_into(*f.ring(), acc, f.raw(k, k));
  return RingElement(f.ring(), std::move(acc));
}

TensorOperator invert(const TensorOperator& f) {
  if (!f.square()) throw ShapeError("tensor: inverse of a non-square operator");
  const Ring& ring = f.ring();
  std::size_t n = f.rows();
  std::vector<std::vector<RingElement>> a(n, std::vector<RingElement>(2 * n, RingElement(ring)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = f.entry(i, j);
    a[i][n + i] = RingElement::one(ring);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    RingElement pivot_inv(ring);
    bool saw_nonzero = false;
    for (std::size_t row = col; row < n && pivot == n; ++row) {
      if (a[row][col].is_zero()) continue;
      saw_nonzero = true;
      try {
        pivot_inv = invert_unit(a[row][col]);
        pivot = row;
      } catch (const NotAUnit&) {
      }
    }
    if (pivot == n) {
      if (!saw_nonzero) throw SingularError("tensor: operator is singular");
      throw NotAField("tensor: no unit pivot over " + ring->id() +
                      "; exact inversion needs field coefficients (use eybo inverse_series for "
                      "deformation series)");
    }
    std::swap(a[pivot], a[col]);
    for (auto& x : a[col]) x = x * pivot_inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col].is_zero()) continue;
      RingElement factor = a[row][col];
      for (std::size_t j = 0; j < 2 * n; ++j) {
        if (!a[col][j].is_zero()) a[row][j] -= factor * a[col][j];
      }
    }
  }
  TensorOperator inv(ring, f.d(), f.m());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) inv.raw_mut(i, j) = a[i][n + j].poly();
  }
  TensorOperator id = TensorOperator::identity(ring, f.d(), f.m());
  if (!(compose(f, inv) == id) || !(compose(inv, f) == id)) {
    throw InternalError("tensor: computed inverse fails the two-sided check");
  }
  return inv;
}

TensorOperator linear_combine(const std::vector<std::pair<RingElement, TensorOperator>>& terms) {
  if (terms.empty()) throw ShapeError("tensor: empty linear combination");
  const TensorOperator& first = terms.front().second;
  TensorOperator out(first.ring(), first.d(), first.m_out(), first.m_in());
  for (const auto& [c, f] : terms) {
    require_same_shape(first, f, "linear_combine");
    require_same_ring(first.ring(), c.ring());
    out = out + c * f;
  }
  return out;
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
  require_same_shape(a, b, "addition");
  TensorOperator out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) poly::add_into(*a.ring(), out.raw_mut(i, j), b.raw(i, j));
  }
  return out;
}

TensorOperator operator-(const TensorOperator& a) {
  TensorOperator out = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.raw_mut(i, j) = poly::neg(a.raw(i, j));
  }
  return out;
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) { return a + (-b); }

TensorOperator operator*(const RingElement& c, const TensorOperator& f) {
  require_same_ring(c.ring(), f.ring());
  TensorOperator out(f.ring(), f.d(), f.m_out(), f.m_in());
  if (c.is_zero()) return out;
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (!f.raw(i, j).empty()) out.raw_mut(i, j) = poly::mul(*f.ring(), c.poly(), f.raw(i, j));
    }
  }
  return out;
}

TensorOperator transpose(const TensorOperator& f) {
  TensorOperator out(f.ring(), f.d(), f.m_in(), f.m_out());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) out.raw_mut(j, i) = f.raw(i, j);
  }
  return out;
}

TensorOperator apply_padded_left(const TensorOperator& f, int i, const TensorOperator& x) {
  int m = x.m_out();
  int right = m - i - f.m_in() + 1;
  if (f.d() != x.d() || i < 1 || right < 0) throw ShapeError("tensor: padded apply out of range");
  require_same_ring(f.ring(), x.ring());
  const RingDescriptor& r = *x.ring();
  int d = x.d();
  std::size_t post = ipow(d, right);
  std::size_t in_block = f.cols();
  std::size_t out_block = f.rows();
  int m_new = m - f.m_in() + f.m_out();
  std::vector<std::vector<std::pair<std::size_t, const Poly*>>> column(in_block);
  for (std::size_t a = 0; a < out_block; ++a) {
    for (std::size_t b = 0; b < in_block; ++b) {
      if (!f.raw(a, b).empty()) column[b].push_back({a, &f.raw(a, b)});
    }
  }
  TensorOperator out(x.ring(), d, m_new, x.m_in());
  for (std::size_t s = 0; s < x.rows(); ++s) {
    std::size_t pst = s % post;
    std::size_t b = (s / post) % in_block;
    std::size_t pre = s / post / in_block;
    const auto& col = column[b];
    if (col.empty()) continue;
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const Poly& v = x.raw(s, c);
      if (v.empty()) continue;
      for (const auto& [a, val] : col) {
        std::size_t t = (pre * out_block + a) * post + pst;
        poly::add_product_into(r, out.raw_mut(t, c), *val, v);
      }
    }
  }
  return out;
}

TensorOperator apply_padded_right(const TensorOperator& x, const TensorOperator& f, int i) {
  int m = x.m_in();
  int right = m - i - f.m_out() + 1;
  if (f.d() != x.d() || i < 1 || right < 0) throw ShapeError("tensor: padded apply out of range");
  require_same_ring(f.ring(), x.ring());
  const RingDescriptor& r = *x.ring();
  int d = x.d();
  std::size_t post = ipow(d, right);
  std::size_t out_block = f.rows();
  std::size_t in_block = f.cols();
  int m_new = m - f.m_out() + f.m_in();
  std::vector<std::vector<std::pair<std::size_t, const Poly*>>> row(out_block);
  for (std::size_t a = 0; a < out_block; ++a) {
    for (std::size_t b = 0; b < in_block; ++b) {
      if (!f.raw(a, b).empty()) row[a].push_back({b, &f.raw(a, b)});
    }
  }
  TensorOperator out(x.ring(), d, x.m_out(), m_new);
  for (std::size_t rr = 0; rr < x.rows(); ++rr) {
    for (std::size_t s = 0; s < x.cols(); ++s) {
      const Poly& v = x.raw(rr, s);
      if (v.empty()) continue;
      std::size_t pst = s % post;
      std::size_t a = (s / post) % out_block;
      std::size_t pre = s / post / out_block;
      for (const auto& [b, val] : row[a]) {
        std::size_t t = (pre * in_block + b) * post + pst;
        poly::add_product_into(r, out.raw_mut(rr, t), v, *val);
      }
    }
  }
  return out;
}

TensorOperator map_entries(const TensorOperator& f, const Ring& target,
                           const std::function<RingElement(const RingElement&)>& fn) {
  TensorOperator out(target, f.d(), f.m_out(), f.m_in());
  for (std::size_t i = 0; i < f.rows(); ++i) {
    for (std::size_t j = 0; j < f.cols(); ++j) {
      RingElement v = fn(RingElement(f.ring(), f.raw(i, j)));
      require_same_ring(target, v.ring());
      out.raw_mut(i, j) = v.poly();
    }
  }
  return out;
}

TensorOperator specialize(const TensorOperator& f, const std::map<std::string, RingElement>& assignment) {
  Ring target = specialize(RingElement(f.ring()), assignment).ring();
  return map_entries(f, target, [&](const RingElement& v) { return specialize(v, assignment); });
}

TensorOperator grade(const TensorOperator& f, std::string_view var, int degree) {
  Ring target = ring_without_variable(f.ring(), var);
  return map_entries(f, target, [&](const RingElement& v) { return grade(v, var, degree); });
}

TensorOperator embed(const TensorOperator& f, const Ring& target) {
  if (same_ring(f.ring(), target)) return f;
  return map_entries(f, target, [&](const RingElement& v) { return embed(v, target); });
}

TensorOperator permutation_operator(const Ring& ring, int d, int m,
                                    const std::function<std::size_t(std::size_t)>& p) {
  TensorOperator f(ring, d, m);
  for (std::size_t x = 0; x < f.cols(); ++x) {
    std::size_t y = p(x);
    if (y >= f.rows()) throw ShapeError("tensor: permutation image out of range");
    f.raw_mut(y, x) = poly::constant(Coeff(1));
  }
  return f;
}

TensorOperator transposition(const Ring& ring, int d) {
  return permutation_operator(ring, d, 2, [d](std::size_t x) {
    std::size_t i = x / d, j = x % d;
    return j * d + i;
  });
}

}  // namespace ybco
