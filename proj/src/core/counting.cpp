#include "core/counting.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "core/errors.hpp"
#include "core/linalg.hpp"

namespace rankcodes::counting {

BigInt alpha(unsigned m, unsigned r, unsigned q) {
  BigInt qm = big_pow(q, m);
  BigInt result = 1;
  BigInt qi = 1;
  for (unsigned i = 0; i < r; ++i) {
    result *= qm - qi;
    qi *= q;
    if (result == 0) break;
  }
  return result;
}

BigInt gaussian_binomial(unsigned n, unsigned r, unsigned q) {
  if (r > n) return 0;
  return alpha(n, r, q) / alpha(r, r, q);
}

BigInt rank_count(unsigned q, unsigned m, unsigned n, unsigned r) {
  if (r > m || r > n) return 0;
  return gaussian_binomial(n, r, q) * alpha(m, r, q);
}

double invertible_density(unsigned q, double tol) {
  if (q < 2) throw usage_error("invertible_density needs q >= 2");
  if (!(tol > 0)) throw usage_error("invertible_density needs tol > 0");
  double acc = 1.0;
  double term = 1.0 / q;
  while (term >= tol * acc) {
    acc *= 1.0 - term;
    term /= q;
  }
  return acc;
}

BigInt cdc_shell_count(unsigned q, unsigned n, unsigned r, unsigned d) {
  if (r > n) throw usage_error("cdc_shell_count needs r <= n");
  return big_pow(q, std::uint64_t{d} * d) * gaussian_binomial(r, d, q) *
         gaussian_binomial(n - r, d, q);
}

BigInt mrd_rank_distribution(unsigned q, unsigned m, unsigned n, unsigned d, unsigned r) {
  if (!(1 <= d && d <= r && r <= n && n <= m))
    throw usage_error("mrd_rank_distribution needs 1 <= d <= r <= n <= m");
  BigInt sum = 0;
  for (unsigned j = d; j <= r; ++j) {
    BigInt term = gaussian_binomial(r, j, q) *
                  big_pow(q, std::uint64_t{r - j} * (r - j - 1) / 2) *
                  (big_pow(q, std::uint64_t{m} * (j - d + 1)) - 1);
    if ((r - j) % 2)
      sum -= term;
    else
      sum += term;
  }
  return gaussian_binomial(n, r, q) * sum;
}

unsigned transfer_threshold_rows(unsigned n, unsigned r, unsigned d) {
  if (!(1 <= d && d <= r && r <= n))
    throw usage_error("transfer_threshold_rows needs 1 <= d <= r <= n");
  return (n - r) * (r - d + 1) + r + 1;
}

namespace {

// One full pass over GF(q)^{m x n}: histogram of (rank X, rank(X - center)).
std::vector<std::vector<BigInt>> scan_center(unsigned q, unsigned m, unsigned n,
                                             const linalg::Mat& center) {
  unsigned maxr = std::min(m, n);
  std::vector<std::vector<BigInt>> t(maxr + 1, std::vector<BigInt>(maxr + 1, 0));
  linalg::Mat x(q, m, n);
  std::vector<unsigned> digits(std::size_t{m} * n, 0);
  while (true) {
    t[x.rank()][(x - center).rank()] += 1;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
    if (k == digits.size()) break;
    for (std::size_t i = 0; i <= k; ++i)
      x.set(static_cast<unsigned>(i / n), static_cast<unsigned>(i % n), digits[i]);
  }
  return t;
}

}  // namespace

SphereIntersectionOracle::SphereIntersectionOracle() {
  const char* dir = std::getenv("RANKCODES_CACHE_DIR");
  if (dir && *dir) dir_ = dir;
}

SphereIntersectionOracle::SphereIntersectionOracle(std::string cache_dir)
    : dir_(std::move(cache_dir)) {}

const SphereIntersectionOracle::Table& SphereIntersectionOracle::table_locked(
    const TableKey& k, std::uint64_t budget, std::uint64_t seed) {
  if (!loaded_) {
    load_disk_locked();
    loaded_ = true;
  }
  auto it = tables_.find(k);
  if (it != tables_.end()) return it->second;

  BigInt universe = big_pow(k.q, std::uint64_t{k.m} * k.n);
  if (universe > budget)
    throw capacity_error("sphere-intersection enumeration needs " + universe.str() +
                         " matrices, over the cap of " + std::to_string(budget));

  linalg::Mat canonical(k.q, k.m, k.n);
  for (unsigned i = 0; i < k.d; ++i) canonical.set(i, i, 1);
  Table t = scan_center(k.q, k.m, k.n, canonical);

  // The counts must not depend on which rank-d center was used.
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + k.q * 1315423911u + k.m * 2654435761u +
                      k.n * 97u + k.d);
  linalg::Mat sampled = linalg::random_matrix_of_rank(rng, k.q, k.m, k.n, k.d);
  if (scan_center(k.q, k.m, k.n, sampled) != t)
    throw verify_error("sphere-intersection counts depend on the center (internal bug)");

  auto [pos, inserted] = tables_.emplace(k, std::move(t));
  if (inserted && !dir_.empty()) save_disk_locked();
  return pos->second;
}

BigInt SphereIntersectionOracle::count(const JrKey& key, std::uint64_t budget,
                                       std::uint64_t seed) {
  unsigned maxr = std::min(key.m, key.n);
  if (key.m < 1 || key.n < 1) throw usage_error("j_rank needs m, n >= 1");
  if (key.d > maxr || key.s > maxr || key.r > maxr) return 0;
  std::lock_guard<std::mutex> lock(mu_);
  const Table& t = table_locked({key.q, key.m, key.n, key.d}, budget, seed);
  return t[key.s][key.r];
}

void SphereIntersectionOracle::load_disk_locked() {
  if (dir_.empty()) return;
  std::ifstream in(std::filesystem::path(dir_) / "jr-cache.tsv");
  if (!in) return;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# jr-cache v1", 0) != 0) return;
  std::map<TableKey, Table> loaded;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    unsigned q, m, n, r, s, d;
    std::string value;
    if (!(row >> q >> m >> n >> r >> s >> d >> value)) continue;
    unsigned maxr = std::min(m, n);
    if (r > maxr || s > maxr || d > maxr) continue;
    TableKey k{q, m, n, d};
    auto& t = loaded[k];
    if (t.empty()) t.assign(maxr + 1, std::vector<BigInt>(maxr + 1, 0));
    t[s][r] = BigInt(value);
  }
  // Only adopt complete tables; a table with any row missing would be
  // indistinguishable from one with zero entries, so require the full grid's
  // mass to be q^{mn}.
  for (auto& [k, t] : loaded) {
    BigInt mass = 0;
    for (const auto& row : t)
      for (const auto& v : row) mass += v;
    if (mass == big_pow(k.q, std::uint64_t{k.m} * k.n)) tables_.emplace(k, std::move(t));
  }
}

void SphereIntersectionOracle::save_disk_locked() const {
  if (dir_.empty()) return;
  std::filesystem::create_directories(dir_);
  auto tmp = std::filesystem::path(dir_) / "jr-cache.tsv.tmp";
  auto final_path = std::filesystem::path(dir_) / "jr-cache.tsv";
  {
    std::ofstream out(tmp);
    out << "# jr-cache v1\n";
    for (const auto& [k, t] : tables_)
      for (unsigned s = 0; s < t.size(); ++s)
        for (unsigned r = 0; r < t[s].size(); ++r)
          out << k.q << '\t' << k.m << '\t' << k.n << '\t' << r << '\t' << s << '\t'
              << k.d << '\t' << t[s][r].str() << '\n';
  }
  std::filesystem::rename(tmp, final_path);
}

SphereIntersectionOracle& jr_oracle() {
  static SphereIntersectionOracle oracle;
  return oracle;
}

BigInt j_rank(const JrKey& key, std::uint64_t budget, std::uint64_t seed) {
  return jr_oracle().count(key, budget, seed);
}

}  // namespace rankcodes::counting
