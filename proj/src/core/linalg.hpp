#ifndef RANKCODES_LINALG_HPP
#define RANKCODES_LINALG_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace rankcodes::linalg {

// Dense matrix over the prime field GF(p). Entries are residues in [0, p).
// Values are immutable in spirit: operations return fresh matrices, so
// concurrent readers need no synchronization.
class Mat {
 public:
  Mat(unsigned p, unsigned rows, unsigned cols);
  static Mat identity(unsigned p, unsigned n);

  unsigned p() const { return p_; }
  unsigned rows() const { return rows_; }
  unsigned cols() const { return cols_; }

  unsigned at(unsigned i, unsigned j) const { return a_[i * cols_ + j]; }
  void set(unsigned i, unsigned j, unsigned v);

  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat operator*(const Mat& o) const;
  Mat transpose() const;

  bool operator==(const Mat& o) const = default;
  // Lexicographic on (rows, cols, entries); gives set semantics a total order.
  bool operator<(const Mat& o) const;

  unsigned rank() const;
  // Reduced row echelon form; pivot column indices appended to *pivots.
  Mat rref(std::vector<unsigned>* pivots = nullptr) const;

  std::string to_text() const;  // "1 0 1; 0 1 1"
  static Mat from_text(unsigned p, const std::string& text);

 private:
  unsigned p_, rows_, cols_;
  std::vector<std::uint8_t> a_;
};

// Subspace of GF(p)^n in canonical form: the stored basis is the unique RREF
// matrix with strictly increasing pivots, so equality and ordering are
// bit-exact comparisons. The zero subspace (dim 0, empty basis) is a
// first-class value.
class Subspace {
 public:
  static Subspace row_space(const Mat& m);
  static Subspace zero(unsigned p, unsigned n);
  static Subspace full(unsigned p, unsigned n);

  unsigned p() const { return basis_.p(); }
  unsigned ambient() const { return ambient_; }
  unsigned dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }

  bool operator==(const Subspace& o) const = default;
  bool operator<(const Subspace& o) const;

 private:
  Subspace(unsigned ambient, Mat basis);
  unsigned ambient_;
  Mat basis_;  // dim x ambient, RREF
};

Subspace col_space(const Mat& m);

unsigned subspace_sum_dim(const Subspace& u, const Subspace& v);
unsigned subspace_intersect_dim(const Subspace& u, const Subspace& v);

// d_S = 2 dim(U+V) - dim U - dim V; d_I = dim(U+V) - min(dim U, dim V).
unsigned subspace_distance(const Subspace& u, const Subspace& v);
unsigned injection_distance(const Subspace& u, const Subspace& v);
unsigned rank_distance(const Mat& x, const Mat& y);

// X = G^T H with G of shape r x rows, H of shape r x cols, r = rank(X).
// G's rows are the pivot columns of X, H is the nonzero part of rref(X).
std::pair<Mat, Mat> rank_factorization(const Mat& x);

// Sandwich on d_R(X,Y) from the injection distances of the row and column
// spaces:
//   d_I(R) + d_I(C) - |rk X - rk Y|  <=  d_R  <=  min(d_I(R), d_I(C)) + min(rk X, rk Y)
std::pair<unsigned, unsigned> rank_distance_bounds_from_spaces(const Mat& x, const Mat& y);

// All of E_r(p, n), enumerated directly in RREF form (one canonical basis per
// subspace), sorted. Throws capacity_error past max_count.
std::vector<Subspace> all_subspaces(unsigned p, unsigned n, unsigned r,
                                    std::uint64_t max_count);

Mat random_matrix(std::mt19937_64& rng, unsigned p, unsigned rows, unsigned cols);
Mat random_matrix_of_rank(std::mt19937_64& rng, unsigned p, unsigned rows,
                          unsigned cols, unsigned r);

}  // namespace rankcodes::linalg

#endif
