// Finitely generated Lambda(Gamma)-modules in two interchangeable shapes:
// cokernels of relation matrices over Z_p[[T]], and finite abelian p-groups
// with a topologically nilpotent T-action. Characteristic elements are
// divisorial hulls of 0-th Fitting ideals (gcd of maximal minors), which for
// square presentations is the prepared determinant.
#ifndef AKASHI_MODULES_HPP
#define AKASHI_MODULES_HPP

#include <variant>
#include <vector>

#include "akashi/lambda_series.hpp"
#include "akashi/linalg.hpp"

namespace akashi {

class PresentationModule {
 public:
  // entries[i][j]: coefficient of relation j on generator i. Square k x k in
  // the file format; rectangular (m >= k or m < k) allowed in memory.
  PresentationModule(long long p, int N, int D, std::vector<std::vector<LambdaSeries>> entries);

  long long prime() const { return p_; }
  int p_precision() const { return N_; }
  int t_degree() const { return D_; }
  int generators() const { return k_; }
  int relation_count() const { return m_; }
  const LambdaSeries& entry(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<LambdaSeries>>& entries() const { return entries_; }

  bool is_square() const { return k_ == m_; }
  LambdaSeries determinant() const;  // square only

  PresentationModule with_level(int N, int D) const;  // reduce precision / re-truncate degree

 private:
  long long p_;
  int N_, D_;
  int k_, m_;
  std::vector<std::vector<LambdaSeries>> entries_;
};

class FiniteFormModule {
 public:
  // orders[j] = n_j gives the cyclic factor Z/p^{n_j}; theta is the matrix of
  // the T-action in those coordinates (columns act on generators). Checked:
  // theta is well defined on the quotient and topologically nilpotent.
  FiniteFormModule(long long p, int N, int D, std::vector<int> orders, Mat theta);

  long long prime() const { return p_; }
  int p_precision() const { return N_; }
  int t_degree() const { return D_; }
  int generators() const { return static_cast<int>(orders_.size()); }
  const std::vector<int>& orders() const { return orders_; }
  const Mat& theta() const { return theta_; }
  bool is_trivial() const { return orders_.empty(); }

  long size_log() const;  // log_p of the underlying group order

  FiniteFormModule with_level(int N, int D) const;

 private:
  long long p_;
  int N_, D_;
  std::vector<int> orders_;
  Mat theta_;
};

using ModuleValue = std::variant<PresentationModule, FiniteFormModule>;

// --- characteristic elements ---

// gcd of the maximal minors of a k x m relation matrix over Lambda.
// NotTorsionAtPrecision when every minor vanishes at precision (or m < k).
CharElement char_of_relation_matrix(const std::vector<std::vector<LambdaSeries>>& entries, long long p, int N,
                                    int D);

// Square path: normalize_mod_units(det P); rectangular falls back to minors.
CharElement char_of_presentation(const PresentationModule& M);

// Minor gcd of [T*I - theta | diag(p^{n_j})]. Identity for honestly finite
// modules; order-N factors are carried as relations invisible at precision,
// which is how truncations of infinite modules are represented.
CharElement char_of_finite_form(const FiniteFormModule& M);

CharElement char_of_module(const ModuleValue& M);

// --- constructions ---

// Dual of (Q_p/Z_p)(chi) with chi(gamma) = u: the rank-one module
// Lambda / ((1+T) - u), with characteristic element T + 1 - u.
// chi_inverse selects the opposite dual-action convention (1+T) - u^{-1}.
PresentationModule rank_one_twist(const PadicInt& u, int D, bool chi_inverse = false);

// Lambda(Gamma) tensor over Lambda(Gamma'): substitute S -> (1+T)^(p^c) - 1
// in every entry.
PresentationModule induce(const PresentationModule& M, long c);

PresentationModule direct_sum(const PresentationModule& A, const PresentationModule& B);
FiniteFormModule direct_sum(const FiniteFormModule& A, const FiniteFormModule& B);

// --- conversions ---

// Presentation [T*I - theta | diag(p^{n_j})] of a finite-form module.
PresentationModule finite_to_presentation(const FiniteFormModule& M);

// Only when det(P) prepares with mu = 0 and the cokernel is finite at
// precision (no canonical order reaches N); DomainError otherwise.
FiniteFormModule presentation_to_finite(const PresentationModule& M);

// --- flattening to exact linear algebra ---

// The module at truncation (p^N', T^D') as a finite Z/p^N'-module: ambient
// R^n with a relation subgroup and the matrix of the T-action.
struct FlatModule {
  long long p = 2;
  int N = 1;  // working precision
  int D = 1;  // working T-degree (series operate mod T^D)
  int ambient = 0;
  Mat relations;  // ambient x r, columns generate the relation subgroup
  Mat t_action;   // ambient x ambient, maps the relation span into itself
};

FlatModule flatten(const PresentationModule& M);
FlatModule flatten(const FiniteFormModule& M);
FlatModule flatten_level(const ModuleValue& M, int N, int D);

// Matrix of a Lambda-linear map between flattened presentation modules
// (entries are series; blocks are multiplication operators).
Mat flatten_map(const std::vector<std::vector<LambdaSeries>>& entries, int gen_rows, int gen_cols, int N, int D);

// Canonical finite form of a flattened module (Smith reduction of the
// relation subgroup, T-action transported to the canonical coordinates).
FiniteFormModule canonical_finite_form(const FlatModule& flat);

// Characteristic element of a finite form with many generators: extract a
// Nakayama-minimal Lambda-presentation by exact linear algebra, then take the
// minor gcd. Equals char_of_finite_form (both compute the divisorial hull).
CharElement char_of_finite_form_minimal(const FiniteFormModule& M);

}  // namespace akashi

#endif
