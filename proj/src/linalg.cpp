#include "akashi/linalg.hpp"

#include <algorithm>

namespace akashi {

Mat::Mat(long long p, int e, int rows, int cols) : p_(p), e_(e), rows_(rows), cols_(cols) {
  if (p < 2 || e < 1) throw DomainError("matrix needs p >= 2, e >= 1");
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  mod_ = pow_bigint(BigInt(p), e);
  data_.assign(static_cast<size_t>(rows) * cols, BigInt(0));
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const BigInt& v) { return v == 0; });
}

static void check_compatible(const Mat& a, const Mat& b) {
  if (a.prime() != b.prime() || a.precision() != b.precision()) throw PrecisionMismatch();
}

bool Mat::operator==(const Mat& o) const {
  check_compatible(*this, o);
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

Mat Mat::operator*(const Mat& o) const {
  check_compatible(*this, o);
  if (cols_ != o.rows_) throw DomainError("matrix product shape mismatch");
  Mat r(p_, e_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const BigInt& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) {
        if (o.at(k, j) == 0) continue;
        r.at(i, j) += a * o.at(k, j);
      }
    }
  for (auto& v : r.data_) v = reduce_mod(v, mod_);
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check_compatible(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix sum shape mismatch");
  Mat r(p_, e_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = reduce_mod(data_[i] + o.data_[i], mod_);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check_compatible(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix difference shape mismatch");
  Mat r(p_, e_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i) r.data_[i] = reduce_mod(data_[i] - o.data_[i], mod_);
  return r;
}

Mat Mat::identity(long long p, int e, int n) {
  Mat r(p, e, n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

Mat Mat::hconcat(const Mat& A, const Mat& B) {
  check_compatible(A, B);
  if (A.rows() != B.rows()) throw DomainError("hconcat row mismatch");
  Mat r(A.prime(), A.precision(), A.rows(), A.cols() + B.cols());
  for (int i = 0; i < A.rows(); ++i) {
    for (int j = 0; j < A.cols(); ++j) r.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols(); ++j) r.at(i, A.cols() + j) = B.at(i, j);
  }
  return r;
}

Mat Mat::transposed() const {
  Mat r(p_, e_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Mat Mat::column(int c) const {
  Mat r(p_, e_, rows_, 1);
  for (int i = 0; i < rows_; ++i) r.at(i, 0) = at(i, c);
  return r;
}

Mat Mat::select_rows(const std::vector<int>& idx) const {
  Mat r(p_, e_, static_cast<int>(idx.size()), cols_);
  for (size_t i = 0; i < idx.size(); ++i)
    for (int j = 0; j < cols_; ++j) r.at(static_cast<int>(i), j) = at(idx[i], j);
  return r;
}

Mat Mat::select_cols(const std::vector<int>& idx) const {
  Mat r(p_, e_, rows_, static_cast<int>(idx.size()));
  for (int i = 0; i < rows_; ++i)
    for (size_t j = 0; j < idx.size(); ++j) r.at(i, static_cast<int>(j)) = at(i, idx[j]);
  return r;
}

Mat Mat::with_precision(int f) const {
  if (f > e_) throw DomainError("cannot raise matrix precision");
  Mat r(p_, f, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.set(i, j, at(i, j));
  return r;
}

std::vector<BigInt> Mat::apply(const std::vector<BigInt>& x) const {
  if (static_cast<int>(x.size()) != cols_) throw DomainError("apply shape mismatch");
  std::vector<BigInt> r(rows_, BigInt(0));
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) r[i] += at(i, j) * x[j];
    r[i] = reduce_mod(r[i], mod_);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Howell normal form (rows generate the module)
// ---------------------------------------------------------------------------

namespace {

int val_of(const BigInt& v, long long p, int e) {
  if (v == 0) return e;
  BigInt x = v;
  int val = 0;
  while (x % p == 0 && val < e) {
    x /= p;
    ++val;
  }
  return val;
}

}  // namespace

Mat howell_form(const Mat& input) {
  const long long p = input.prime();
  const int e = input.precision();
  const BigInt& mod = input.modulus();
  const int cols = input.cols();

  std::vector<std::vector<BigInt>> pool;
  pool.reserve(input.rows());
  for (int i = 0; i < input.rows(); ++i) {
    std::vector<BigInt> row(cols);
    for (int j = 0; j < cols; ++j) row[j] = input.at(i, j);
    pool.push_back(std::move(row));
  }

  std::vector<std::vector<BigInt>> basis;
  std::vector<int> pivot_col, pivot_val;

  for (int c = 0; c < cols; ++c) {
    int best = -1, bestv = e;
    for (size_t i = 0; i < pool.size(); ++i) {
      int v = val_of(pool[i][c], p, e);
      if (v < bestv) {
        bestv = v;
        best = static_cast<int>(i);
      }
    }
    if (best < 0 || bestv >= e) continue;
    std::vector<BigInt> row = std::move(pool[best]);
    pool.erase(pool.begin() + best);
    // normalize the pivot to exactly p^v
    BigInt u = row[c] / pow_bigint(BigInt(p), bestv);
    BigInt ui = unit_inverse(PadicInt(p, e, u)).value();
    for (int j = c; j < cols; ++j) row[j] = reduce_mod(row[j] * ui, mod);
    BigInt piv = row[c];
    for (auto& r : pool) {
      if (r[c] == 0) continue;
      BigInt q = r[c] / piv;
      for (int j = c; j < cols; ++j) r[j] = reduce_mod(r[j] - q * row[j], mod);
    }
    // annihilator shadow keeps the Howell property on trailing coordinates
    if (bestv > 0) {
      BigInt ann = pow_bigint(BigInt(p), e - bestv);
      std::vector<BigInt> shadow(cols, BigInt(0));
      bool nonzero = false;
      for (int j = c + 1; j < cols; ++j) {
        shadow[j] = reduce_mod(row[j] * ann, mod);
        if (shadow[j] != 0) nonzero = true;
      }
      if (nonzero) pool.push_back(std::move(shadow));
    }
    basis.push_back(std::move(row));
    pivot_col.push_back(c);
    pivot_val.push_back(bestv);
  }

  for (size_t k = 0; k < basis.size(); ++k) {
    BigInt piv = pow_bigint(BigInt(p), pivot_val[k]);
    int c = pivot_col[k];
    for (size_t i = 0; i < k; ++i) {
      BigInt q = basis[i][c] / piv;
      if (q == 0) continue;
      for (int j = c; j < cols; ++j) basis[i][j] = reduce_mod(basis[i][j] - q * basis[k][j], mod);
    }
  }

  Mat out(p, e, static_cast<int>(basis.size()), cols);
  for (size_t i = 0; i < basis.size(); ++i)
    for (int j = 0; j < cols; ++j) out.at(static_cast<int>(i), j) = basis[i][j];
  return out;
}

Mat kernel(const Mat& A) {
  const long long p = A.prime();
  const int e = A.precision();
  const int n = A.rows(), m = A.cols();
  // Row-reduce [A^T | I]; rows whose image part dies give kernel generators,
  // and the Howell property guarantees they generate all of the kernel.
  Mat aug(p, e, m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(j, i);
    aug.at(i, n + i) = 1;
  }
  Mat h = howell_form(aug);
  std::vector<int> zero_rows;
  for (int i = 0; i < h.rows(); ++i) {
    bool z = true;
    for (int j = 0; j < n && z; ++j) z = h.at(i, j) == 0;
    if (z) zero_rows.push_back(i);
  }
  Mat out(p, e, m, static_cast<int>(zero_rows.size()));
  for (size_t k = 0; k < zero_rows.size(); ++k)
    for (int j = 0; j < m; ++j) out.at(j, static_cast<int>(k)) = h.at(zero_rows[k], n + j);
  return out;
}

std::optional<std::vector<BigInt>> solve(const Mat& A, const std::vector<BigInt>& b) {
  const long long p = A.prime();
  const int e = A.precision();
  const BigInt& mod = A.modulus();
  const int n = A.rows(), m = A.cols();
  if (static_cast<int>(b.size()) != n) throw DomainError("solve shape mismatch");

  Mat aug(p, e, m, n + m);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = A.at(j, i);
    aug.at(i, n + i) = 1;
  }
  Mat h = howell_form(aug);

  std::vector<BigInt> res(b);
  for (auto& v : res) v = reduce_mod(v, mod);
  std::vector<BigInt> x(m, BigInt(0));
  for (int i = 0; i < h.rows(); ++i) {
    int c = -1;
    for (int j = 0; j < n; ++j)
      if (h.at(i, j) != 0) {
        c = j;
        break;
      }
    if (c < 0) break;
    if (res[c] == 0) continue;
    BigInt piv = h.at(i, c);
    if (res[c] % piv != 0) return std::nullopt;
    BigInt q = res[c] / piv;
    for (int j = c; j < n; ++j) res[j] = reduce_mod(res[j] - q * h.at(i, j), mod);
    for (int j = 0; j < m; ++j) x[j] = reduce_mod(x[j] + q * h.at(i, n + j), mod);
  }
  for (int j = 0; j < n; ++j)
    if (res[j] != 0) return std::nullopt;
  return x;
}

std::optional<Mat> solve_matrix(const Mat& A, const Mat& B) {
  if (A.rows() != B.rows()) throw DomainError("solve_matrix shape mismatch");
  Mat X(A.prime(), A.precision(), A.cols(), B.cols());
  for (int c = 0; c < B.cols(); ++c) {
    std::vector<BigInt> b(B.rows());
    for (int i = 0; i < B.rows(); ++i) b[i] = B.at(i, c);
    auto x = solve(A, b);
    if (!x) return std::nullopt;
    for (int i = 0; i < A.cols(); ++i) X.at(i, c) = (*x)[i];
  }
  return X;
}

bool in_column_span(const Mat& A, const std::vector<BigInt>& b) { return solve(A, b).has_value(); }

long span_size_log(const Mat& A) {
  Mat h = howell_form(A.transposed());
  const long long p = A.prime();
  const int e = A.precision();
  long total = 0;
  for (int i = 0; i < h.rows(); ++i) {
    for (int j = 0; j < h.cols(); ++j) {
      if (h.at(i, j) != 0) {
        total += e - val_of(h.at(i, j), p, e);
        break;
      }
    }
  }
  return total;
}

// ---------------------------------------------------------------------------
// Smith-style diagonalization with transforms
// ---------------------------------------------------------------------------

SmithDecomposition smith_form(const Mat& A) {
  const long long p = A.prime();
  const int e = A.precision();
  const BigInt& mod = A.modulus();
  const int n = A.rows(), m = A.cols();

  Mat B = A;
  SmithDecomposition s{Mat::identity(p, e, n), Mat::identity(p, e, n), Mat::identity(p, e, m),
                       Mat::identity(p, e, m), std::vector<int>(static_cast<size_t>(std::min(n, m)), e)};

  auto swap_rows = [&](int a, int b) {
    if (a == b) return;
    for (int j = 0; j < m; ++j) std::swap(B.at(a, j), B.at(b, j));
    for (int j = 0; j < n; ++j) std::swap(s.U.at(a, j), s.U.at(b, j));
    for (int i = 0; i < n; ++i) std::swap(s.Uinv.at(i, a), s.Uinv.at(i, b));
  };
  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (int i = 0; i < n; ++i) std::swap(B.at(i, a), B.at(i, b));
    for (int i = 0; i < m; ++i) std::swap(s.V.at(i, a), s.V.at(i, b));
    for (int j = 0; j < m; ++j) std::swap(s.Vinv.at(a, j), s.Vinv.at(b, j));
  };
  auto row_sub = [&](int a, const BigInt& q, int b) {  // row a -= q * row b
    for (int j = 0; j < m; ++j) B.at(a, j) = reduce_mod(B.at(a, j) - q * B.at(b, j), mod);
    for (int j = 0; j < n; ++j) s.U.at(a, j) = reduce_mod(s.U.at(a, j) - q * s.U.at(b, j), mod);
    for (int i = 0; i < n; ++i) s.Uinv.at(i, b) = reduce_mod(s.Uinv.at(i, b) + q * s.Uinv.at(i, a), mod);
  };
  auto col_sub = [&](int a, const BigInt& q, int b) {  // col a -= q * col b
    for (int i = 0; i < n; ++i) B.at(i, a) = reduce_mod(B.at(i, a) - q * B.at(i, b), mod);
    for (int i = 0; i < m; ++i) s.V.at(i, a) = reduce_mod(s.V.at(i, a) - q * s.V.at(i, b), mod);
    for (int j = 0; j < m; ++j) s.Vinv.at(b, j) = reduce_mod(s.Vinv.at(b, j) + q * s.Vinv.at(a, j), mod);
  };
  auto scale_row = [&](int a, const BigInt& u, const BigInt& uinv) {
    for (int j = 0; j < m; ++j) B.at(a, j) = reduce_mod(B.at(a, j) * u, mod);
    for (int j = 0; j < n; ++j) s.U.at(a, j) = reduce_mod(s.U.at(a, j) * u, mod);
    for (int i = 0; i < n; ++i) s.Uinv.at(i, a) = reduce_mod(s.Uinv.at(i, a) * uinv, mod);
  };

  const int steps = std::min(n, m);
  for (int k = 0; k < steps; ++k) {
    int bi = -1, bj = -1, bv = e;
    for (int i = k; i < n; ++i)
      for (int j = k; j < m; ++j) {
        int v = val_of(B.at(i, j), p, e);
        if (v < bv) {
          bv = v;
          bi = i;
          bj = j;
        }
      }
    if (bi < 0 || bv >= e) break;
    swap_rows(k, bi);
    swap_cols(k, bj);
    BigInt u = B.at(k, k) / pow_bigint(BigInt(p), bv);
    BigInt uinv = unit_inverse(PadicInt(p, e, u)).value();
    scale_row(k, uinv, u);
    BigInt piv = B.at(k, k);
    for (int i = k + 1; i < n; ++i)
      if (B.at(i, k) != 0) row_sub(i, B.at(i, k) / piv, k);
    for (int j = k + 1; j < m; ++j)
      if (B.at(k, j) != 0) col_sub(j, B.at(k, j) / piv, k);
    s.diag_val[k] = bv;
  }
  return s;
}

QuotientPresentation quotient_presentation(int ambient, const Mat& relations) {
  if (relations.rows() != ambient) throw DomainError("relations must live in the ambient module");
  const int e = relations.precision();

  SmithDecomposition s = smith_form(relations);
  std::vector<int> surviving;
  std::vector<int> orders;
  for (int i = 0; i < ambient; ++i) {
    int w = (i < static_cast<int>(s.diag_val.size())) ? s.diag_val[i] : e;
    if (w == 0) continue;
    surviving.push_back(i);
    orders.push_back(w);
  }

  QuotientPresentation q;
  q.orders = std::move(orders);
  q.to_coords = s.U.select_rows(surviving);
  q.lift = s.Uinv.select_cols(surviving);
  return q;
}

Mat QuotientPresentation::induce(const Mat& phi) const {
  Mat m = to_coords * phi * lift;
  const long long p = m.prime();
  for (int t = 0; t < m.rows(); ++t) {
    BigInt ord = pow_bigint(BigInt(p), orders[t]);
    for (int j = 0; j < m.cols(); ++j) m.at(t, j) = reduce_mod(m.at(t, j), ord);
  }
  return m;
}

}  // namespace akashi
