#include "core/linalg.hpp"

#include <algorithm>
#include <sstream>

#include "core/errors.hpp"

namespace rankcodes::linalg {

namespace {

unsigned inv_mod(unsigned a, unsigned p) {
  // p is a small prime and a != 0; Fermat is fine here.
  unsigned r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}

}  // namespace

Mat::Mat(unsigned p, unsigned rows, unsigned cols)
    : p_(p), rows_(rows), cols_(cols), a_(std::size_t{rows} * cols, 0) {
  if (p < 2 || p > 251) throw usage_error("matrix modulus must be a prime in [2, 251]");
}

Mat Mat::identity(unsigned p, unsigned n) {
  Mat m(p, n, n);
  for (unsigned i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

void Mat::set(unsigned i, unsigned j, unsigned v) {
  a_[i * cols_ + j] = static_cast<std::uint8_t>(v % p_);
}

Mat Mat::operator+(const Mat& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw usage_error("matrix shape/field mismatch in +");
  Mat r(p_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    r.a_[k] = static_cast<std::uint8_t>((a_[k] + o.a_[k]) % p_);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw usage_error("matrix shape/field mismatch in -");
  Mat r(p_, rows_, cols_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    r.a_[k] = static_cast<std::uint8_t>((a_[k] + p_ - o.a_[k]) % p_);
  return r;
}

Mat Mat::operator*(const Mat& o) const {
  if (p_ != o.p_ || cols_ != o.rows_) throw usage_error("matrix shape mismatch in *");
  Mat r(p_, rows_, o.cols_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned k = 0; k < cols_; ++k) {
      unsigned aik = at(i, k);
      if (!aik) continue;
      for (unsigned j = 0; j < o.cols_; ++j) {
        unsigned v = (r.at(i, j) + aik * o.at(k, j)) % p_;
        r.a_[i * o.cols_ + j] = static_cast<std::uint8_t>(v);
      }
    }
  return r;
}

Mat Mat::transpose() const {
  Mat r(p_, cols_, rows_);
  for (unsigned i = 0; i < rows_; ++i)
    for (unsigned j = 0; j < cols_; ++j) r.set(j, i, at(i, j));
  return r;
}

bool Mat::operator<(const Mat& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return a_ < o.a_;
}

unsigned Mat::rank() const {
  Mat w = *this;
  unsigned r = 0;
  for (unsigned col = 0; col < cols_ && r < rows_; ++col) {
    unsigned piv = r;
    while (piv < rows_ && w.at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (unsigned j = col; j < cols_; ++j) {
        unsigned t = w.at(r, j);
        w.set(r, j, w.at(piv, j));
        w.set(piv, j, t);
      }
    unsigned inv = inv_mod(w.at(r, col), p_);
    for (unsigned i = r + 1; i < rows_; ++i) {
      unsigned f = (w.at(i, col) * inv) % p_;
      if (!f) continue;
      for (unsigned j = col; j < cols_; ++j)
        w.set(i, j, (w.at(i, j) + (p_ - f) * w.at(r, j)) % p_);
    }
    ++r;
  }
  return r;
}

Mat Mat::rref(std::vector<unsigned>* pivots) const {
  Mat w = *this;
  unsigned r = 0;
  for (unsigned col = 0; col < cols_ && r < rows_; ++col) {
    unsigned piv = r;
    while (piv < rows_ && w.at(piv, col) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != r)
      for (unsigned j = 0; j < cols_; ++j) {
        unsigned t = w.at(r, j);
        w.set(r, j, w.at(piv, j));
        w.set(piv, j, t);
      }
    unsigned inv = inv_mod(w.at(r, col), p_);
    for (unsigned j = 0; j < cols_; ++j) w.set(r, j, (w.at(r, j) * inv) % p_);
    for (unsigned i = 0; i < rows_; ++i) {
      if (i == r) continue;
      unsigned f = w.at(i, col);
      if (!f) continue;
      for (unsigned j = 0; j < cols_; ++j)
        w.set(i, j, (w.at(i, j) + (p_ - f) * w.at(r, j)) % p_);
    }
    if (pivots) pivots->push_back(col);
    ++r;
  }
  return w;
}

std::string Mat::to_text() const {
  std::ostringstream out;
  for (unsigned i = 0; i < rows_; ++i) {
    if (i) out << "; ";
    for (unsigned j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      out << at(i, j);
    }
  }
  return out.str();
}

Mat Mat::from_text(unsigned p, const std::string& text) {
  std::vector<std::vector<unsigned>> rows;
  std::string row_text;
  std::istringstream in(text);
  while (std::getline(in, row_text, ';')) {
    std::istringstream rin(row_text);
    std::vector<unsigned> row;
    unsigned v;
    while (rin >> v) {
      if (v >= p) throw io_error("matrix entry " + std::to_string(v) + " out of range mod " + std::to_string(p));
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw io_error("empty matrix text");
  for (const auto& row : rows)
    if (row.size() != rows[0].size()) throw io_error("ragged matrix text");
  Mat m(p, static_cast<unsigned>(rows.size()), static_cast<unsigned>(rows[0].size()));
  for (unsigned i = 0; i < m.rows(); ++i)
    for (unsigned j = 0; j < m.cols(); ++j) m.set(i, j, rows[i][j]);
  return m;
}

Subspace::Subspace(unsigned ambient, Mat basis) : ambient_(ambient), basis_(std::move(basis)) {}

Subspace Subspace::row_space(const Mat& m) {
  std::vector<unsigned> pivots;
  Mat r = m.rref(&pivots);
  unsigned dim = static_cast<unsigned>(pivots.size());
  Mat basis(m.p(), dim, m.cols());
  for (unsigned i = 0; i < dim; ++i)
    for (unsigned j = 0; j < m.cols(); ++j) basis.set(i, j, r.at(i, j));
  return Subspace(m.cols(), std::move(basis));
}

Subspace Subspace::zero(unsigned p, unsigned n) { return Subspace(n, Mat(p, 0, n)); }

Subspace Subspace::full(unsigned p, unsigned n) { return Subspace(n, Mat::identity(p, n)); }

bool Subspace::operator<(const Subspace& o) const {
  if (ambient_ != o.ambient_) return ambient_ < o.ambient_;
  return basis_ < o.basis_;
}

Subspace col_space(const Mat& m) { return Subspace::row_space(m.transpose()); }

namespace {

Mat stack(const Subspace& u, const Subspace& v) {
  Mat s(u.p(), u.dim() + v.dim(), u.ambient());
  for (unsigned i = 0; i < u.dim(); ++i)
    for (unsigned j = 0; j < u.ambient(); ++j) s.set(i, j, u.basis().at(i, j));
  for (unsigned i = 0; i < v.dim(); ++i)
    for (unsigned j = 0; j < v.ambient(); ++j) s.set(u.dim() + i, j, v.basis().at(i, j));
  return s;
}

void check_ambient(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient() || u.p() != v.p())
    throw usage_error("subspaces live in different ambient spaces");
}

}  // namespace

unsigned subspace_sum_dim(const Subspace& u, const Subspace& v) {
  check_ambient(u, v);
  return stack(u, v).rank();
}

unsigned subspace_intersect_dim(const Subspace& u, const Subspace& v) {
  return u.dim() + v.dim() - subspace_sum_dim(u, v);
}

unsigned subspace_distance(const Subspace& u, const Subspace& v) {
  return 2 * subspace_sum_dim(u, v) - u.dim() - v.dim();
}

unsigned injection_distance(const Subspace& u, const Subspace& v) {
  return subspace_sum_dim(u, v) - std::min(u.dim(), v.dim());
}

unsigned rank_distance(const Mat& x, const Mat& y) { return (x - y).rank(); }

std::pair<Mat, Mat> rank_factorization(const Mat& x) {
  std::vector<unsigned> pivots;
  Mat r = x.rref(&pivots);
  unsigned rk = static_cast<unsigned>(pivots.size());
  Mat h(x.p(), rk, x.cols());
  for (unsigned i = 0; i < rk; ++i)
    for (unsigned j = 0; j < x.cols(); ++j) h.set(i, j, r.at(i, j));
  Mat g(x.p(), rk, x.rows());
  for (unsigned k = 0; k < rk; ++k)
    for (unsigned i = 0; i < x.rows(); ++i) g.set(k, i, x.at(i, pivots[k]));
  return {std::move(g), std::move(h)};
}

std::pair<unsigned, unsigned> rank_distance_bounds_from_spaces(const Mat& x, const Mat& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols() || x.p() != y.p())
    throw usage_error("matrices must share a shape");
  unsigned rx = x.rank(), ry = y.rank();
  unsigned di_row = injection_distance(Subspace::row_space(x), Subspace::row_space(y));
  unsigned di_col = injection_distance(col_space(x), col_space(y));
  unsigned gap = rx > ry ? rx - ry : ry - rx;
  unsigned sum = di_row + di_col;
  unsigned lower = sum > gap ? sum - gap : 0;
  unsigned upper = std::min(di_row, di_col) + std::min(rx, ry);
  return {lower, upper};
}

std::vector<Subspace> all_subspaces(unsigned p, unsigned n, unsigned r,
                                    std::uint64_t max_count) {
  if (r > n) return {};
  std::vector<Subspace> out;
  // Pivot columns j_0 < ... < j_{r-1}; remaining entries right of each pivot
  // and outside pivot columns run through all residues.
  std::vector<unsigned> piv(r);
  for (unsigned i = 0; i < r; ++i) piv[i] = i;
  auto emit_for_pivots = [&]() {
    std::vector<std::pair<unsigned, unsigned>> free_pos;
    std::vector<bool> is_piv(n, false);
    for (unsigned i = 0; i < r; ++i) is_piv[piv[i]] = true;
    for (unsigned i = 0; i < r; ++i)
      for (unsigned j = piv[i] + 1; j < n; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);
    std::vector<unsigned> digits(free_pos.size(), 0);
    while (true) {
      if (out.size() >= max_count)
        throw capacity_error("subspace enumeration exceeds cap of " +
                             std::to_string(max_count) + " subspaces");
      Mat basis(p, r, n);
      for (unsigned i = 0; i < r; ++i) basis.set(i, piv[i], 1);
      for (std::size_t k = 0; k < free_pos.size(); ++k)
        basis.set(free_pos[k].first, free_pos[k].second, digits[k]);
      out.push_back(Subspace::row_space(basis));
      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == p) digits[k++] = 0;
      if (k == digits.size()) break;
    }
  };
  if (r == 0) {
    out.push_back(Subspace::zero(p, n));
    return out;
  }
  while (true) {
    emit_for_pivots();
    // next combination
    int i = static_cast<int>(r) - 1;
    while (i >= 0 && piv[i] == n - r + i) --i;
    if (i < 0) break;
    ++piv[i];
    for (unsigned k = i + 1; k < r; ++k) piv[k] = piv[k - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mat random_matrix(std::mt19937_64& rng, unsigned p, unsigned rows, unsigned cols) {
  Mat m(p, rows, cols);
  std::uniform_int_distribution<unsigned> d(0, p - 1);
  for (unsigned i = 0; i < rows; ++i)
    for (unsigned j = 0; j < cols; ++j) m.set(i, j, d(rng));
  return m;
}

Mat random_matrix_of_rank(std::mt19937_64& rng, unsigned p, unsigned rows,
                          unsigned cols, unsigned r) {
  if (r > std::min(rows, cols)) throw usage_error("rank exceeds matrix shape");
  if (r == 0) return Mat(p, rows, cols);
  while (true) {
    Mat g = random_matrix(rng, p, r, rows);
    Mat h = random_matrix(rng, p, r, cols);
    if (g.rank() == r && h.rank() == r) return g.transpose() * h;
  }
}

}  // namespace rankcodes::linalg
