#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "core/counting.hpp"
#include "core/errors.hpp"
#include "core/linalg.hpp"
#include "test_util.hpp"

using namespace rankcodes;
using linalg::Mat;
using linalg::Subspace;

TEST_CASE("rank basics") {
  CHECK(Mat(2, 3, 4).rank() == 0);
  CHECK(Mat::identity(2, 4).rank() == 4);
  CHECK(Mat::identity(5, 3).rank() == 3);
  Mat ones = Mat::from_text(2, "1 1; 1 1");
  CHECK(ones.rank() == 1);
}

TEST_CASE("matrix text round trip") {
  Mat m = Mat::from_text(2, "1 0 1; 0 1 1");
  CHECK(m.rows() == 2);
  CHECK(m.cols() == 3);
  CHECK(m.to_text() == "1 0 1; 0 1 1");
  CHECK(Mat::from_text(2, m.to_text()) == m);
  CHECK_THROWS_AS(Mat::from_text(2, "1 0; 1"), io_error);
  CHECK_THROWS_AS(Mat::from_text(2, "2 0; 1 1"), io_error);
}

TEST_CASE("row and column spaces") {
  CHECK(Subspace::row_space(Mat(2, 3, 3)) == Subspace::zero(2, 3));
  CHECK(Subspace::row_space(Mat::identity(3, 4)) == Subspace::full(3, 4));

  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    unsigned r = 1 + t % 2;
    Mat g = linalg::random_matrix(rng, 2, r, 4);
    Mat h = linalg::random_matrix(rng, 2, r, 3);
    if (g.rank() != r || h.rank() != r) continue;
    Mat x = g.transpose() * h;
    CHECK(Subspace::row_space(x) == Subspace::row_space(h));
    CHECK(linalg::col_space(x) == Subspace::row_space(g));
  }
}

TEST_CASE("subspace canonical form is basis independent") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    Mat b = linalg::random_matrix(rng, 3, 2, 4);
    Subspace u = Subspace::row_space(b);
    // row operations do not change the row space
    Mat scrambled = linalg::random_matrix_of_rank(rng, 3, 2, 2, 2) * b;
    CHECK(Subspace::row_space(scrambled) == u);
  }
}

TEST_CASE("rank factorization reconstructs the matrix") {
  SUBCASE("zero matrix gives empty factors") {
    auto [g, h] = linalg::rank_factorization(Mat(2, 3, 4));
    CHECK(g.rows() == 0);
    CHECK(h.rows() == 0);
  }
  SUBCASE("rank one outer product") {
    Mat u = Mat::from_text(2, "1; 1; 0");  // 3x1
    Mat v = Mat::from_text(2, "1 0 1");    // 1x3
    Mat x = u * v;
    auto [g, h] = linalg::rank_factorization(x);
    CHECK(g.rows() == 1);
    CHECK(g.transpose() * h == x);
  }
  SUBCASE("randomized reconstruction") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 1000; ++t) {
      Mat x = linalg::random_matrix(rng, 2, 4, 3);
      auto [g, h] = linalg::rank_factorization(x);
      unsigned r = x.rank();
      CHECK(g.rows() == r);
      CHECK(h.rows() == r);
      CHECK(g.rank() == r);
      CHECK(h.rank() == r);
      CHECK(g.transpose() * h == x);
      CHECK(Subspace::row_space(h) == Subspace::row_space(x));
      CHECK(Subspace::row_space(g) == linalg::col_space(x));
    }
    for (int t = 0; t < 200; ++t) {
      Mat x = linalg::random_matrix(rng, 3, 3, 4);
      auto [g, h] = linalg::rank_factorization(x);
      CHECK(g.transpose() * h == x);
    }
  }
}

namespace {

// Independent oracle: dim of intersection by counting common elements.
unsigned intersect_dim_by_enumeration(const Subspace& u, const Subspace& v) {
  auto ue = testutil::subspace_elements(u);
  auto ve = testutil::subspace_elements(v);
  std::set<std::vector<unsigned>> vset(ve.begin(), ve.end());
  std::size_t common = 0;
  for (const auto& e : ue) common += vset.count(e);
  unsigned d = 0;
  std::size_t power = 1;
  while (power < common) {
    power *= u.p();
    ++d;
  }
  return d;
}

}  // namespace

TEST_CASE("sum and intersection dimensions") {
  Subspace u = Subspace::row_space(Mat::from_text(2, "1 0 0 0; 0 1 0 0"));
  SUBCASE("U = V") {
    CHECK(linalg::subspace_sum_dim(u, u) == 2);
    CHECK(linalg::subspace_intersect_dim(u, u) == 2);
  }
  SUBCASE("complementary") {
    Subspace v = Subspace::row_space(Mat::from_text(2, "0 0 1 0; 0 0 0 1"));
    CHECK(linalg::subspace_sum_dim(u, v) == 4);
    CHECK(linalg::subspace_intersect_dim(u, v) == 0);
  }
  SUBCASE("sharing a line") {
    Subspace v = Subspace::row_space(Mat::from_text(2, "1 0 0 0; 0 0 1 0"));
    CHECK(linalg::subspace_sum_dim(u, v) == 3);
    CHECK(linalg::subspace_intersect_dim(u, v) == 1);
  }
  SUBCASE("oracle comparison on random pairs") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 300; ++t) {
      Subspace a = Subspace::row_space(linalg::random_matrix(rng, 2, 2, 4));
      Subspace b = Subspace::row_space(linalg::random_matrix(rng, 2, 2, 4));
      CHECK(linalg::subspace_intersect_dim(a, b) == intersect_dim_by_enumeration(a, b));
    }
  }
  SUBCASE("ambient mismatch is rejected") {
    CHECK_THROWS_AS(linalg::subspace_sum_dim(u, Subspace::zero(2, 3)), usage_error);
  }
}

TEST_CASE("metrics") {
  Subspace u = Subspace::row_space(Mat::from_text(2, "1 0 0 0; 0 1 0 0"));
  Subspace v = Subspace::row_space(Mat::from_text(2, "0 0 1 0; 0 0 0 1"));
  CHECK(linalg::injection_distance(u, u) == 0);
  CHECK(linalg::subspace_distance(u, u) == 0);
  CHECK(linalg::injection_distance(u, v) == 2);  // trivial intersection
  CHECK(linalg::subspace_distance(u, v) == 2 * linalg::injection_distance(u, v));

  std::mt19937_64 rng(15);
  auto grassmannian = linalg::all_subspaces(2, 4, 2, 1 << 10);
  std::uniform_int_distribution<std::size_t> pick(0, grassmannian.size() - 1);
  for (int t = 0; t < 200; ++t) {
    const Subspace& a = grassmannian[pick(rng)];
    const Subspace& b = grassmannian[pick(rng)];
    unsigned expected = linalg::subspace_sum_dim(a, b) - 2;
    CHECK(linalg::injection_distance(a, b) == expected);
    unsigned inter = intersect_dim_by_enumeration(a, b);
    CHECK(linalg::injection_distance(a, b) == 2u - inter);
  }
}

TEST_CASE("metric axioms on random triples") {
  std::mt19937_64 rng(16);
  auto grassmannian = linalg::all_subspaces(2, 4, 2, 1 << 10);
  std::uniform_int_distribution<std::size_t> pick(0, grassmannian.size() - 1);
  for (int t = 0; t < 300; ++t) {
    const Subspace &a = grassmannian[pick(rng)], &b = grassmannian[pick(rng)],
                   &c = grassmannian[pick(rng)];
    CHECK(linalg::injection_distance(a, b) == linalg::injection_distance(b, a));
    CHECK((linalg::injection_distance(a, b) == 0) == (a == b));
    CHECK(linalg::injection_distance(a, c) <=
          linalg::injection_distance(a, b) + linalg::injection_distance(b, c));
    CHECK(linalg::subspace_distance(a, c) <=
          linalg::subspace_distance(a, b) + linalg::subspace_distance(b, c));

    Mat x = linalg::random_matrix(rng, 3, 3, 3), y = linalg::random_matrix(rng, 3, 3, 3),
        z = linalg::random_matrix(rng, 3, 3, 3);
    CHECK(linalg::rank_distance(x, y) == linalg::rank_distance(y, x));
    CHECK((linalg::rank_distance(x, y) == 0) == (x == y));
    CHECK(linalg::rank_distance(x, z) <=
          linalg::rank_distance(x, y) + linalg::rank_distance(y, z));
  }
}

TEST_CASE("rank distance sandwich from row/column spaces") {
  SUBCASE("degenerate cases") {
    Mat x = Mat::from_text(2, "1 0; 0 1");
    auto [lo, hi] = linalg::rank_distance_bounds_from_spaces(x, x);
    CHECK(lo == 0);
    CHECK(hi == 2);
    CHECK(linalg::rank_distance(x, x) == 0);
  }
  SUBCASE("identical spaces make the lower bound vanish") {
    Mat x = Mat::from_text(2, "1 0; 0 1");
    Mat y = Mat::from_text(2, "0 1; 1 0");
    auto [lo, hi] = linalg::rank_distance_bounds_from_spaces(x, y);
    CHECK(lo == 0);
  }
  SUBCASE("exhaustive 2x2 over GF(2)") {
    std::vector<Mat> all;
    testutil::for_each_matrix(2, 2, 2, [&](const Mat& m) { all.push_back(m); });
    for (const Mat& x : all)
      for (const Mat& y : all) {
        auto [lo, hi] = linalg::rank_distance_bounds_from_spaces(x, y);
        unsigned d = linalg::rank_distance(x, y);
        CHECK(lo <= d);
        CHECK(d <= hi);
      }
  }
  SUBCASE("randomized larger shapes") {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 2000; ++t) {
      Mat x = linalg::random_matrix(rng, 2, 4, 4), y = linalg::random_matrix(rng, 2, 4, 4);
      auto [lo, hi] = linalg::rank_distance_bounds_from_spaces(x, y);
      unsigned d = linalg::rank_distance(x, y);
      CHECK(lo <= d);
      CHECK(d <= hi);
    }
  }
}

TEST_CASE("grassmannian enumeration matches the gaussian binomial") {
  for (unsigned n = 0; n <= 5; ++n)
    for (unsigned r = 0; r <= n; ++r) {
      auto subs = linalg::all_subspaces(2, n, r, 1 << 12);
      CHECK(BigInt(subs.size()) == counting::gaussian_binomial(n, r, 2));
      CHECK(std::is_sorted(subs.begin(), subs.end()));
      CHECK(std::adjacent_find(subs.begin(), subs.end()) == subs.end());
    }
  for (unsigned n = 0; n <= 3; ++n)
    for (unsigned r = 0; r <= n; ++r)
      CHECK(BigInt(linalg::all_subspaces(3, n, r, 1 << 12).size()) ==
            counting::gaussian_binomial(n, r, 3));
  CHECK_THROWS_AS(linalg::all_subspaces(2, 5, 2, 10), capacity_error);
}
