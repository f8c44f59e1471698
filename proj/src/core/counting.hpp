#ifndef RANKCODES_COUNTING_HPP
#define RANKCODES_COUNTING_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "core/numeric.hpp"

namespace rankcodes::counting {

// Exact enumeration caps. Exceeding a cap raises capacity_error, never a
// silent approximation.
inline constexpr std::uint64_t kDefaultEnumBudget = std::uint64_t{1} << 24;

// Number of ordered r-tuples of linearly independent vectors in GF(q)^m:
// alpha(m, 0) = 1, alpha(m, r) = prod_{i=0}^{r-1} (q^m - q^i).
BigInt alpha(unsigned m, unsigned r, unsigned q);

// [n r]_q = alpha(n, r) / alpha(r, r); counts r-dim subspaces of GF(q)^n.
BigInt gaussian_binomial(unsigned n, unsigned r, unsigned q);

// N_R(q, m, n, r): matrices of rank r in GF(q)^{m x n}; 0 when r is out of
// range. Satisfies sum_r N_R = q^{mn}.
BigInt rank_count(unsigned q, unsigned m, unsigned n, unsigned r);

// prod_{j>=1} (1 - q^{-j}): the limiting fraction of square matrices over
// GF(q) that are invertible. Also the constant bounding Gaussian binomials:
// q^{r(n-r)} <= [n r] < q^{r(n-r)} / invertible_density(q). Truncated once the
// next factor changes the partial product by less than tol (relative).
double invertible_density(unsigned q, double tol);

// N_C(d): subspaces of E_r(q, n) at injection distance exactly d from a fixed
// one: q^{d^2} [r d] [n-r d].
BigInt cdc_shell_count(unsigned q, unsigned n, unsigned r, unsigned d);

// Codewords of rank r in an (n, n-d+1, d) linear MRD code over GF(q^m):
//   [n r] sum_{j=d}^{r} (-1)^{r-j} [r j] q^{(r-j)(r-j-1)/2} (q^{m(j-d+1)} - 1).
// Requires 1 <= d <= r <= n <= m.
BigInt mrd_rank_distribution(unsigned q, unsigned m, unsigned n, unsigned d, unsigned r);

// Row-count threshold (n-r)(r-d+1) + r + 1 above which maximum-size
// constant-rank codes at distance d+r yield maximum-size constant-dimension
// codes at distance d. Requires 1 <= d <= r <= n.
unsigned transfer_threshold_rows(unsigned n, unsigned r, unsigned d);

// Key of the two-sphere intersection volume J(q,m,n,r,s,d): the number of
// matrices of rank s at rank distance r from a fixed center of rank d. The
// value is symmetric in (r, s) and independent of the center choice.
struct JrKey {
  unsigned q, m, n, r, s, d;
  auto operator<=>(const JrKey&) const = default;
};

// Memoized brute-force evaluation of J: whole (rank, distance) tables are
// produced per center rank by enumerating all q^{mn} matrices, with the
// center-invariance asserted against a second randomly sampled center.
// Optionally persisted to <dir>/jr-cache.tsv (single writer, atomic rewrite).
class SphereIntersectionOracle {
 public:
  // Cache directory from RANKCODES_CACHE_DIR; memory-only when unset.
  SphereIntersectionOracle();
  explicit SphereIntersectionOracle(std::string cache_dir);

  BigInt count(const JrKey& key, std::uint64_t budget = kDefaultEnumBudget,
               std::uint64_t seed = 0);

 private:
  struct TableKey {
    unsigned q, m, n, d;
    auto operator<=>(const TableKey&) const = default;
  };
  using Table = std::vector<std::vector<BigInt>>;  // [rank of X][distance]

  const Table& table_locked(const TableKey& k, std::uint64_t budget, std::uint64_t seed);
  void load_disk_locked();
  void save_disk_locked() const;

  std::mutex mu_;
  std::string dir_;
  bool loaded_ = false;
  std::map<TableKey, Table> tables_;
};

SphereIntersectionOracle& jr_oracle();

BigInt j_rank(const JrKey& key, std::uint64_t budget = kDefaultEnumBudget,
              std::uint64_t seed = 0);

}  // namespace rankcodes::counting

#endif
