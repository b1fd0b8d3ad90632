#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grassmoduli/oracle.hpp"
#include "grassmoduli/partition.hpp"

using namespace grassmoduli;

TEST_CASE("partition construction normalizes and validates") {
  CHECK(Partition{2, 1, 0, 0} == Partition{2, 1});
  CHECK(Partition{}.empty());
  CHECK(Partition{0, 0}.empty());
  CHECK(Partition::rectangle(3, 2) == Partition{2, 2, 2});
  CHECK(Partition::rectangle(3, 0).empty());
  CHECK_THROWS_AS(Partition{1, 2}, std::invalid_argument);
  CHECK_THROWS_AS(Partition{-1}, std::invalid_argument);
}

TEST_CASE("partition text round trip") {
  CHECK(Partition::parse("2,1,1") == Partition{2, 1, 1});
  CHECK(Partition::parse("") == Partition{});
  CHECK(Partition::parse("0") == Partition{});
  CHECK(Partition{2, 1, 1}.to_string() == "2,1,1");
  CHECK(Partition{}.to_string() == "0");
  CHECK_THROWS_AS(Partition::parse("2,,1"), std::invalid_argument);
  CHECK_THROWS_AS(Partition::parse("2,x"), std::invalid_argument);
}

TEST_CASE("decreasing lex order") {
  CHECK(Partition{2, 2} > Partition{2, 1, 1});
  CHECK(Partition{2, 1, 1} > Partition{1, 1, 1, 1});
  CHECK(Partition{2, 1} > Partition{2});
  CHECK(Partition{3} > Partition{2, 1});
}

TEST_CASE("fund_to_partition on the stated weights") {
  // ϖ_2 for SU(4) is the two-row column.
  CHECK(fund_to_partition(FundamentalCoeffs(4, {0, 1, 0})) == Partition{1, 1});
  CHECK(fund_to_partition(FundamentalCoeffs(4, {1, 0, 1})) ==
        Partition{2, 1, 1});
  // k·ϖ_3 for SU(6) is the 3-row, k-column rectangle.
  for (int k = 0; k <= 4; ++k)
    CHECK(fund_to_partition(FundamentalCoeffs(6, {0, 0, k, 0, 0})) ==
          Partition::rectangle(3, k));
}

TEST_CASE("partition_to_fund normalizes to SU(n)") {
  CHECK(partition_to_fund(Partition{2, 2}, 4) == FundamentalCoeffs(4, {0, 2, 0}));
  CHECK(partition_to_fund(Partition{2, 1, 1}, 4) ==
        FundamentalCoeffs(4, {1, 0, 1}));
  // Determinant powers are SU-trivial.
  CHECK(partition_to_fund(Partition{3, 3, 3, 3}, 4) ==
        FundamentalCoeffs(4, {0, 0, 0}));
  CHECK_THROWS_AS(partition_to_fund(Partition{1, 1, 1}, 2),
                  std::invalid_argument);
}

TEST_CASE("fund round trip is the identity, exhaustively") {
  for (int n = 2; n <= 8; ++n) {
    std::vector<int> ks(static_cast<std::size_t>(n - 1), 0);
    while (true) {
      FundamentalCoeffs fund(n, ks);
      CHECK(partition_to_fund(fund_to_partition(fund), n) == fund);
      std::size_t pos = 0;
      while (pos < ks.size() && ks[pos] == 3) ks[pos++] = 0;
      if (pos == ks.size()) break;
      ++ks[pos];
    }
  }
}

TEST_CASE("dim_gl matches the stated small dimensions") {
  CHECK(dim_gl(Partition{1, 1}, 4) == 6);    // Λ²C⁴
  CHECK(dim_gl(Partition{2, 2}, 4) == 20);
  CHECK(dim_gl(Partition{2, 1, 1}, 4) == 15);
  CHECK(dim_gl(Partition{}, 4) == 1);
  CHECK_THROWS_AS(dim_gl(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("dim_gl equals the semistandard tableau count") {
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lambda : partitions_up_to(8, n))
      CHECK(oracle::schur_poly(lambda, n).eval_ones() == dim_gl(lambda, n));
}

TEST_CASE("dim_rect agrees with the general formula") {
  // Sym^k C² has dimension k+1.
  for (int k = 0; k <= 6; ++k) CHECK(dim_rect(2, k, 1) == k + 1);
  CHECK(dim_rect(4, 1, 2) == 6);
  CHECK(dim_rect(4, 2, 2) == 20);
  for (int a = 1; a <= 8; ++a)
    for (int c = 1; c <= a; ++c)
      for (int b = 0; b <= 4; ++b)
        CHECK(dim_rect(a, b, c) == dim_gl(Partition::rectangle(c, b), a));
  CHECK_THROWS_AS(dim_rect(2, 1, 3), std::invalid_argument);
}

TEST_CASE("dim_rect stays exact far beyond 64 bits") {
  BigInt d = dim_rect(20, 10, 10);
  CHECK(d > BigInt("18446744073709551615"));
  CHECK(d == dim_gl(Partition::rectangle(10, 10), 20));
}

TEST_CASE("binomial basics") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(3, 5) == 0);
}
