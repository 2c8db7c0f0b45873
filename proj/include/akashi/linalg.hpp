// Exact linear algebra over the chain ring Z/p^e: Howell normal forms,
// kernels, solving, and Smith-style diagonalization with transforms. This is
// the elimination engine behind module flattening and Koszul homology.
#ifndef AKASHI_LINALG_HPP
#define AKASHI_LINALG_HPP

#include <optional>
#include <vector>

#include "akashi/padic.hpp"

namespace akashi {

// Dense matrix over Z/p^e, row-major. Columns usually play the role of
// generators of a subgroup of R^rows.
class Mat {
 public:
  Mat() : Mat(2, 1, 0, 0) {}
  Mat(long long p, int e, int rows, int cols);

  long long prime() const { return p_; }
  int precision() const { return e_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const BigInt& modulus() const { return mod_; }

  BigInt& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  const BigInt& at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  void set(int r, int c, const BigInt& v) { at(r, c) = reduce_mod(v, mod_); }

  bool is_zero() const;
  bool operator==(const Mat& o) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;

  static Mat identity(long long p, int e, int n);
  // Horizontal concatenation [A | B].
  static Mat hconcat(const Mat& A, const Mat& B);

  Mat transposed() const;
  Mat column(int c) const;
  // Keep the listed rows (used to restrict to surviving quotient coordinates).
  Mat select_rows(const std::vector<int>& idx) const;
  Mat select_cols(const std::vector<int>& idx) const;
  // Reduce every entry mod p^f, f <= e.
  Mat with_precision(int f) const;

  std::vector<BigInt> apply(const std::vector<BigInt>& x) const;

 private:
  long long p_;
  int e_;
  int rows_, cols_;
  BigInt mod_;
  std::vector<BigInt> data_;
};

// Canonical Howell form of the row span. Rows are generators; the result's
// nonzero rows are the unique reduced basis: pivot entries are powers of p,
// entries above a pivot lie in [0, pivot), entries left of a pivot vanish.
Mat howell_form(const Mat& rows);

// Generators of {x in R^cols : A x = 0}, returned as columns.
Mat kernel(const Mat& A);

// One solution of A x = b, if any.
std::optional<std::vector<BigInt>> solve(const Mat& A, const std::vector<BigInt>& b);

// Columnwise solve: A X = B.
std::optional<Mat> solve_matrix(const Mat& A, const Mat& B);

// Does b lie in the column span of A?
bool in_column_span(const Mat& A, const std::vector<BigInt>& b);

// log_p of the size of the column span.
long span_size_log(const Mat& A);

// Smith-style diagonalization U * A * V = diag(p^v1, ..., p^vr, 0, ...),
// with U, V invertible and their inverses tracked.
struct SmithDecomposition {
  Mat U, Uinv;  // rows x rows
  Mat V, Vinv;  // cols x cols
  std::vector<int> diag_val;  // p-valuations of the diagonal, length min(rows, cols); e means zero
};

SmithDecomposition smith_form(const Mat& A);

// Canonical description of the quotient R^n / colspan(relations) as a direct
// sum of cyclic groups Z/p^orders[t], with maps in and out of the canonical
// coordinates.
struct QuotientPresentation {
  std::vector<int> orders;  // each in [1, e]
  Mat to_coords;            // surviving rows of U: ambient -> canonical coords
  Mat lift;                 // columns of Uinv at surviving coords: canonical -> ambient
  // Induced matrix of an ambient endomorphism phi (which must preserve the
  // span) on the canonical coordinates.
  Mat induce(const Mat& phi) const;
};

QuotientPresentation quotient_presentation(int ambient, const Mat& relations);

}  // namespace akashi

#endif
