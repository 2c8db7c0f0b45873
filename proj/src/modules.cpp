#include "akashi/modules.hpp"

#include <algorithm>
#include <numeric>

namespace akashi {

// ---------------------------------------------------------------------------
// PresentationModule
// ---------------------------------------------------------------------------

PresentationModule::PresentationModule(long long p, int N, int D, std::vector<std::vector<LambdaSeries>> entries)
    : p_(p), N_(N), D_(D), entries_(std::move(entries)) {
  k_ = static_cast<int>(entries_.size());
  if (k_ == 0) throw DomainError("presentation needs at least one generator");
  m_ = static_cast<int>(entries_.front().size());
  for (const auto& row : entries_) {
    if (static_cast<int>(row.size()) != m_) throw DomainError("ragged relation matrix");
    for (const auto& s : row)
      if (s.prime() != p_ || s.p_precision() != N_ || s.t_degree() != D_) throw PrecisionMismatch();
  }
}

namespace {

LambdaSeries det_recursive(const std::vector<std::vector<LambdaSeries>>& a, std::vector<int>& cols, int row,
                           long long p, int N, int D) {
  if (cols.empty()) return LambdaSeries::constant(p, N, D, 1);
  LambdaSeries acc(p, N, D);
  for (size_t ci = 0; ci < cols.size(); ++ci) {
    int c = cols[ci];
    const LambdaSeries& e = a[row][c];
    if (e.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(cols.size() - 1);
    for (size_t j = 0; j < cols.size(); ++j)
      if (j != ci) rest.push_back(cols[j]);
    LambdaSeries sub = det_recursive(a, rest, row + 1, p, N, D);
    LambdaSeries term = e * sub;
    acc = (ci % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

LambdaSeries PresentationModule::determinant() const {
  if (!is_square()) throw DomainError("determinant of a non-square presentation");
  std::vector<int> cols(k_);
  std::iota(cols.begin(), cols.end(), 0);
  return det_recursive(entries_, cols, 0, p_, N_, D_);
}

PresentationModule PresentationModule::with_level(int N, int D) const {
  std::vector<std::vector<LambdaSeries>> e(k_);
  for (int i = 0; i < k_; ++i) {
    e[i].reserve(m_);
    for (int j = 0; j < m_; ++j) e[i].push_back(entries_[i][j].with_precision(N).with_degree(D));
  }
  return {p_, N, D, std::move(e)};
}

// ---------------------------------------------------------------------------
// FiniteFormModule
// ---------------------------------------------------------------------------

FiniteFormModule::FiniteFormModule(long long p, int N, int D, std::vector<int> orders, Mat theta)
    : p_(p), N_(N), D_(D), orders_(std::move(orders)), theta_(std::move(theta)) {
  const int k = static_cast<int>(orders_.size());
  if (theta_.rows() != k || theta_.cols() != k) throw DomainError("theta must be k x k");
  if (k == 0) return;
  if (theta_.prime() != p_ || theta_.precision() != N_) throw PrecisionMismatch();
  for (int n : orders_)
    if (n < 1 || n > N_) throw DomainError("orders must lie in [1, N]");

  // theta must descend to the quotient by the relation lattice
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      int need = orders_[i] - orders_[j];
      if (need <= 0) continue;
      if (theta_.at(i, j) % pow_bigint(BigInt(p_), need) != 0)
        throw DomainError("T-action is not well defined on the stated cyclic factors");
    }

  // T acts topologically nilpotently on a finite module
  Mat pw = theta_;
  bool nil = false;
  for (int step = 0; step < k * N_ && !nil; ++step) {
    nil = true;
    for (int i = 0; i < k && nil; ++i) {
      BigInt m = pow_bigint(BigInt(p_), orders_[i]);
      for (int j = 0; j < k && nil; ++j) nil = pw.at(i, j) % m == 0;
    }
    if (!nil) pw = pw * theta_;
  }
  if (!nil) throw DomainError("T-action is not topologically nilpotent");
}

long FiniteFormModule::size_log() const { return std::accumulate(orders_.begin(), orders_.end(), 0L); }

FiniteFormModule FiniteFormModule::with_level(int N, int D) const {
  std::vector<int> orders(orders_.size());
  for (size_t i = 0; i < orders_.size(); ++i) orders[i] = std::min(orders_[i], N);
  return {p_, N, D, std::move(orders), theta_.with_precision(N)};
}

// ---------------------------------------------------------------------------
// characteristic elements
// ---------------------------------------------------------------------------

CharElement char_of_relation_matrix(const std::vector<std::vector<LambdaSeries>>& entries, long long p, int N,
                                    int D) {
  const int k = static_cast<int>(entries.size());
  const int m = k > 0 ? static_cast<int>(entries.front().size()) : 0;
  if (k == 0) return CharElement::one(p, N, D);
  if (m < k) throw NotTorsionAtPrecision("fewer relations than generators");

  double count = 1;
  for (int i = 0; i < k; ++i) count = count * (m - i) / (i + 1);
  if (count > 20000) throw DomainError("relation matrix too large for minor enumeration");

  std::vector<LambdaSeries> minors;
  std::vector<int> sel(k);
  std::iota(sel.begin(), sel.end(), 0);
  for (;;) {
    LambdaSeries d = det_recursive(entries, sel, 0, p, N, D);
    if (!d.is_zero()) minors.push_back(std::move(d));
    int i = k - 1;
    while (i >= 0 && sel[i] == m - k + i) --i;
    if (i < 0) break;
    ++sel[i];
    for (int j = i + 1; j < k; ++j) sel[j] = sel[j - 1] + 1;
  }
  if (minors.empty()) throw NotTorsionAtPrecision("all maximal minors vanish at precision");
  try {
    return series_gcd(minors);
  } catch (const IndistinguishableFromZero&) {
    throw NotTorsionAtPrecision("all maximal minors vanish at precision");
  }
}

CharElement char_of_presentation(const PresentationModule& M) {
  if (M.is_square()) {
    LambdaSeries d = M.determinant();
    try {
      return normalize_mod_units(d);
    } catch (const IndistinguishableFromZero&) {
      throw NotTorsionAtPrecision("det(P) vanishes mod (p^N, T^D)");
    }
  }
  return char_of_relation_matrix(M.entries(), M.prime(), M.p_precision(), M.t_degree());
}

CharElement char_of_finite_form(const FiniteFormModule& M) {
  if (M.is_trivial()) return CharElement::one(M.prime(), M.p_precision(), M.t_degree());
  if (M.generators() > 6) return char_of_finite_form_minimal(M);
  PresentationModule P = finite_to_presentation(M);
  return char_of_relation_matrix(P.entries(), P.prime(), P.p_precision(), P.t_degree());
}

CharElement char_of_module(const ModuleValue& M) {
  if (std::holds_alternative<PresentationModule>(M)) return char_of_presentation(std::get<PresentationModule>(M));
  return char_of_finite_form(std::get<FiniteFormModule>(M));
}

// ---------------------------------------------------------------------------
// constructions
// ---------------------------------------------------------------------------

PresentationModule rank_one_twist(const PadicInt& u, int D, bool chi_inverse) {
  if (!is_unit(u)) throw NotAUnit("twist parameter must be a unit");
  PadicInt v = chi_inverse ? unit_inverse(u) : u;
  LambdaSeries rel(u.prime(), u.precision(), D, {BigInt(1) - v.value(), BigInt(1)});
  return {u.prime(), u.precision(), D, {{rel}}};
}

PresentationModule induce(const PresentationModule& M, long c) {
  std::vector<std::vector<LambdaSeries>> e(M.generators());
  for (int i = 0; i < M.generators(); ++i) {
    e[i].reserve(M.relation_count());
    for (int j = 0; j < M.relation_count(); ++j) e[i].push_back(substitute_tower(M.entry(i, j), c));
  }
  return {M.prime(), M.p_precision(), M.t_degree(), std::move(e)};
}

PresentationModule direct_sum(const PresentationModule& A, const PresentationModule& B) {
  if (A.prime() != B.prime() || A.p_precision() != B.p_precision() || A.t_degree() != B.t_degree())
    throw PrecisionMismatch();
  const int k = A.generators() + B.generators();
  const int m = A.relation_count() + B.relation_count();
  LambdaSeries zero(A.prime(), A.p_precision(), A.t_degree());
  std::vector<std::vector<LambdaSeries>> e(k, std::vector<LambdaSeries>(m, zero));
  for (int i = 0; i < A.generators(); ++i)
    for (int j = 0; j < A.relation_count(); ++j) e[i][j] = A.entry(i, j);
  for (int i = 0; i < B.generators(); ++i)
    for (int j = 0; j < B.relation_count(); ++j) e[A.generators() + i][A.relation_count() + j] = B.entry(i, j);
  return {A.prime(), A.p_precision(), A.t_degree(), std::move(e)};
}

FiniteFormModule direct_sum(const FiniteFormModule& A, const FiniteFormModule& B) {
  if (A.prime() != B.prime() || A.p_precision() != B.p_precision() || A.t_degree() != B.t_degree())
    throw PrecisionMismatch();
  std::vector<int> orders = A.orders();
  orders.insert(orders.end(), B.orders().begin(), B.orders().end());
  const int k = static_cast<int>(orders.size());
  Mat theta(A.prime(), A.p_precision(), k, k);
  for (int i = 0; i < A.generators(); ++i)
    for (int j = 0; j < A.generators(); ++j) theta.at(i, j) = A.theta().at(i, j);
  for (int i = 0; i < B.generators(); ++i)
    for (int j = 0; j < B.generators(); ++j) theta.at(A.generators() + i, A.generators() + j) = B.theta().at(i, j);
  return {A.prime(), A.p_precision(), A.t_degree(), std::move(orders), std::move(theta)};
}

// ---------------------------------------------------------------------------
// conversions
// ---------------------------------------------------------------------------

PresentationModule finite_to_presentation(const FiniteFormModule& M) {
  const long long p = M.prime();
  const int N = M.p_precision(), D = M.t_degree();
  const int k = M.generators();
  LambdaSeries zero(p, N, D);
  std::vector<std::vector<LambdaSeries>> e(k, std::vector<LambdaSeries>(2 * k, zero));
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      std::vector<BigInt> cs = {-M.theta().at(i, j)};
      if (i == j) cs.push_back(BigInt(1));  // T on the diagonal
      if (D < 2 && i == j) throw DomainError("T-degree too small for a finite-form presentation");
      e[i][j] = LambdaSeries(p, N, D, cs);
    }
    e[i][k + i] = LambdaSeries::constant(p, N, D, pow_bigint(BigInt(p), M.orders()[i]));
  }
  return {p, N, D, std::move(e)};
}

FiniteFormModule presentation_to_finite(const PresentationModule& M) {
  CharElement c = char_of_presentation(M);
  if (c.mu() != 0) throw DomainError("presentation has mu > 0; cokernel is not finite");
  FiniteFormModule f = canonical_finite_form(flatten(M));
  for (int n : f.orders())
    if (n >= M.p_precision()) throw DomainError("cokernel is not certified finite at this precision");
  return f;
}

// ---------------------------------------------------------------------------
// flattening
// ---------------------------------------------------------------------------

Mat flatten_map(const std::vector<std::vector<LambdaSeries>>& entries, int gen_rows, int gen_cols, int N, int D) {
  if (entries.empty()) throw DomainError("empty map");
  const long long p = entries.front().front().prime();
  Mat out(p, N, gen_rows * D, gen_cols * D);
  for (int i = 0; i < gen_rows; ++i)
    for (int j = 0; j < gen_cols; ++j) {
      const LambdaSeries& s = entries[i][j];
      for (int e = 0; e < D; ++e)
        for (int d = e; d < D; ++d) out.set(i * D + d, j * D + e, s.coeff(d - e));
    }
  return out;
}

FlatModule flatten(const PresentationModule& M) {
  const long long p = M.prime();
  const int N = M.p_precision(), D = M.t_degree();
  const int k = M.generators(), m = M.relation_count();

  FlatModule f;
  f.p = p;
  f.N = N;
  f.D = D;
  f.ambient = k * D;
  f.relations = Mat(p, N, k * D, m * D);
  for (int c = 0; c < m; ++c)
    for (int b = 0; b < D; ++b)
      for (int i = 0; i < k; ++i) {
        const LambdaSeries& s = M.entry(i, c);
        for (int d = b; d < D; ++d) f.relations.set(i * D + d, c * D + b, s.coeff(d - b));
      }
  f.t_action = Mat(p, N, k * D, k * D);
  for (int i = 0; i < k; ++i)
    for (int d = 0; d + 1 < D; ++d) f.t_action.at(i * D + d + 1, i * D + d) = 1;
  return f;
}

FlatModule flatten(const FiniteFormModule& M) {
  const long long p = M.prime();
  const int N = M.p_precision();
  const int k = M.generators();

  FlatModule f;
  f.p = p;
  f.N = N;
  f.D = M.t_degree();
  f.ambient = k;
  std::vector<int> cols;
  for (int j = 0; j < k; ++j)
    if (M.orders()[j] < N) cols.push_back(j);
  f.relations = Mat(p, N, k, static_cast<int>(cols.size()));
  for (size_t c = 0; c < cols.size(); ++c)
    f.relations.at(cols[c], static_cast<int>(c)) = pow_bigint(BigInt(p), M.orders()[cols[c]]);
  f.t_action = M.theta();
  return f;
}

FlatModule flatten_level(const ModuleValue& M, int N, int D) {
  if (std::holds_alternative<PresentationModule>(M))
    return flatten(std::get<PresentationModule>(M).with_level(N, D));
  return flatten(std::get<FiniteFormModule>(M).with_level(N, D));
}

FiniteFormModule canonical_finite_form(const FlatModule& flat) {
  QuotientPresentation q = quotient_presentation(flat.ambient, flat.relations);
  Mat theta = q.induce(flat.t_action);
  return {flat.p, flat.N, flat.D, q.orders, std::move(theta)};
}

// ---------------------------------------------------------------------------
// minimal-presentation characteristic element
// ---------------------------------------------------------------------------

CharElement char_of_finite_form_minimal(const FiniteFormModule& M) {
  const long long p = M.prime();
  const int N = M.p_precision(), D = M.t_degree();
  const int n = M.generators();
  if (n == 0) return CharElement::one(p, N, D);

  // theta must be captured by series of degree < D
  {
    Mat pw = Mat::identity(p, N, n);
    for (int i = 0; i < D; ++i) pw = pw * M.theta();
    for (int i = 0; i < n; ++i) {
      BigInt m = pow_bigint(BigInt(p), M.orders()[i]);
      for (int j = 0; j < n; ++j)
        if (pw.at(i, j) % m != 0) throw DomainError("T-degree too small to present this module");
    }
  }

  FlatModule flat = flatten(M);

  // Nakayama: minimal generators form a basis modulo (relations, p, T)
  Mat pI = Mat::identity(p, N, n);
  for (int i = 0; i < n; ++i) pI.at(i, i) = p;
  Mat acc = Mat::hconcat(flat.relations, Mat::hconcat(pI, M.theta()));
  std::vector<int> gens;
  for (int i = 0; i < n; ++i) {
    std::vector<BigInt> e(n, BigInt(0));
    e[i] = 1;
    if (in_column_span(acc, e)) continue;
    gens.push_back(i);
    Mat col(p, N, n, 1);
    col.at(i, 0) = 1;
    acc = Mat::hconcat(acc, col);
  }
  const int a = static_cast<int>(gens.size());
  if (a == 0) return CharElement::one(p, N, D);

  // Lambda-relations of the chosen generators: kernel of
  // (c_{i,b}) -> sum_b theta^b g_i c_{i,b} modulo the lattice
  Mat phi(p, N, n, a * D);
  {
    std::vector<Mat> powers(D, Mat::identity(p, N, n));
    for (int b = 1; b < D; ++b) powers[b] = powers[b - 1] * M.theta();
    for (int i = 0; i < a; ++i)
      for (int b = 0; b < D; ++b)
        for (int r = 0; r < n; ++r) phi.at(r, i * D + b) = powers[b].at(r, gens[i]);
  }
  Mat K = kernel(Mat::hconcat(phi, flat.relations));

  std::vector<std::vector<BigInt>> rels;
  for (int c = 0; c < K.cols(); ++c) {
    std::vector<BigInt> r(a * D);
    bool zero = true;
    for (int i = 0; i < a * D; ++i) {
      r[i] = K.at(i, c);
      if (r[i] != 0) zero = false;
    }
    if (!zero) rels.push_back(std::move(r));
  }
  // prune to a Lambda-minimal relation set (membership in the Lambda-span of
  // the kept relations = membership in the Z/p^N-span of their T-shifts)
  auto shift = [&](const std::vector<BigInt>& r) {
    std::vector<BigInt> s(static_cast<size_t>(a) * D, BigInt(0));
    for (int i = 0; i < a; ++i)
      for (int b = 0; b + 1 < D; ++b) s[static_cast<size_t>(i) * D + b + 1] = r[static_cast<size_t>(i) * D + b];
    return s;
  };
  std::vector<std::vector<BigInt>> kept_shifts;
  std::vector<int> kept;
  for (size_t idx = 0; idx < rels.size(); ++idx) {
    if (!kept_shifts.empty()) {
      Mat spanm(p, N, a * D, static_cast<int>(kept_shifts.size()));
      for (size_t c = 0; c < kept_shifts.size(); ++c)
        for (int i = 0; i < a * D; ++i) spanm.at(i, static_cast<int>(c)) = kept_shifts[c][i];
      if (in_column_span(spanm, rels[idx])) continue;
    }
    kept.push_back(static_cast<int>(idx));
    std::vector<BigInt> cur = rels[idx];
    for (int b = 0; b < D; ++b) {
      if (std::all_of(cur.begin(), cur.end(), [](const BigInt& v) { return v == 0; })) break;
      kept_shifts.push_back(cur);
      cur = shift(cur);
    }
  }

  std::vector<std::vector<LambdaSeries>> entries(a);
  for (int i = 0; i < a; ++i) {
    entries[i].reserve(kept.size());
    for (int kc : kept) {
      std::vector<BigInt> cs(D);
      for (int b = 0; b < D; ++b) cs[b] = rels[kc][static_cast<size_t>(i) * D + b];
      entries[i].emplace_back(p, N, D, cs);
    }
  }
  return char_of_relation_matrix(entries, p, N, D);
}

}  // namespace akashi
