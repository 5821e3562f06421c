#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "ftors/fp_matrix.hpp"

using namespace ftors;

namespace {

// Rank via the size of the row space, by enumerating all combinations.
int rank_by_counting(const FpMatrix& m) {
  const int p = m.prime();
  std::set<std::vector<int>> span;
  long long combos = 1;
  for (int i = 0; i < m.rows(); ++i) combos *= p;
  for (long long code = 0; code < combos; ++code) {
    std::vector<int> v(m.cols(), 0);
    long long c = code;
    for (int i = 0; i < m.rows(); ++i, c /= p)
      for (int j = 0; j < m.cols(); ++j) v[j] = (v[j] + static_cast<int>(c % p) * m(i, j)) % p;
    span.insert(v);
  }
  int r = 0;
  for (std::size_t size = 1; size < span.size(); size *= p) ++r;
  return r;
}

}  // namespace

TEST_CASE("primes and inverses") {
  CHECK(is_prime(2));
  CHECK(is_prime(5));
  CHECK(is_prime(32749));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  for (int p : {2, 3, 5, 7, 101})
    for (int a = 1; a < p; ++a) CHECK(reduce_mod(static_cast<std::int64_t>(a) * inv_mod(a, p), p) == 1);
  CHECK(reduce_mod(-7, 5) == 3);
}

TEST_CASE("rank matches row-space counting") {
  Rng rng(11);
  for (int p : {2, 3}) {
    for (int trial = 0; trial < 60; ++trial) {
      const int rows = 1 + static_cast<int>(rng.below(4));
      const int cols = 1 + static_cast<int>(rng.below(4));
      FpMatrix m = random_matrix(rows, cols, p, rng);
      if (trial % 3 == 0 && rows > 1) m.set_block(rows - 1, 0, m.row(0));
      CHECK(rank(m) == rank_by_counting(m));
    }
  }
}

TEST_CASE("kernel, column space and cokernel") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const int p = trial % 2 ? 5 : 2;
    FpMatrix m = random_matrix(3, 5, p, rng);
    if (trial % 4 == 0) m.set_block(2, 0, m.row(0) + m.row(1));
    const FpMatrix k = kernel(m);
    CHECK(k.cols() == 5 - rank(m));
    CHECK((m * k).is_zero());
    CHECK(rank(k) == k.cols());
    const FpMatrix col = column_space(m);
    CHECK(col.cols() == rank(m));
    const FpMatrix coker = cokernel_projection(m);
    CHECK(coker.rows() == 3 - rank(m));
    CHECK((coker * m).is_zero());
  }
}

TEST_CASE("rref of a known matrix") {
  const FpMatrix m = FpMatrix::from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}}, 7);
  const RowEchelon e = rref(m);
  CHECK(e.rank == 2);
  CHECK(e.pivots == std::vector<int>{0, 1});
  CHECK(e.reduced == FpMatrix::from_rows({{1, 0, 1}, {0, 1, 1}, {0, 0, 0}}, 7));
}

TEST_CASE("inverse and linear solving") {
  Rng rng(5);
  for (int p : {2, 3, 5, 32749}) {
    const FpMatrix a = random_invertible(4, p, rng);
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == FpMatrix::identity(4, p));
    const FpMatrix x = random_matrix(4, 2, p, rng);
    const auto solved = solve_right(a, a * x);
    REQUIRE(solved.has_value());
    CHECK(*solved == x);
  }
  const FpMatrix singular = FpMatrix::from_rows({{1, 1}, {1, 1}}, 3);
  CHECK_FALSE(inverse(singular).has_value());
  CHECK_FALSE(solve_right(singular, FpMatrix::from_rows({{1}, {0}}, 3)).has_value());
  const LinearSolution s = solve_linear(singular, FpMatrix::from_rows({{2}, {2}}, 3));
  REQUIRE(s.particular.has_value());
  CHECK(singular * *s.particular == FpMatrix::from_rows({{2}, {2}}, 3));
  CHECK(s.kernel_basis.cols() == 1);
}

TEST_CASE("powers and stacking") {
  const FpMatrix j = FpMatrix::from_rows({{1, 1}, {0, 1}}, 5);
  CHECK(matrix_power(j, 5) == FpMatrix::identity(2, 5));
  CHECK(matrix_power(j, 3) == FpMatrix::from_rows({{1, 3}, {0, 1}}, 5));
  const FpMatrix h = FpMatrix::hstack({j, j}, 2, 5);
  CHECK(h.cols() == 4);
  CHECK(h.block(0, 2, 2, 2) == j);
  const FpMatrix v = FpMatrix::vstack({j, j.transpose()}, 2, 5);
  CHECK(v.rows() == 4);
  CHECK(v.block(2, 0, 2, 2) == j.transpose());
}
