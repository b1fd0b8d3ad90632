#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "grassmoduli/lr.hpp"
#include "grassmoduli/oracle.hpp"
#include "grassmoduli/rect_decomp.hpp"

using namespace grassmoduli;

TEST_CASE("lr_coefficient on the stated instances") {
  CHECK(lr_coefficient(Partition{1, 1}, Partition{1, 1}, Partition{2, 2}) == 1);
  CHECK(lr_coefficient(Partition{1, 1}, Partition{1, 1}, Partition{3, 1}) == 0);
  // Empty inner shape: c^μ_{∅μ} = 1.
  for (const Partition& mu : partitions_up_to(6, 4))
    CHECK(lr_coefficient(Partition{}, mu, mu) == 1);
  // Degree mismatch is zero.
  CHECK(lr_coefficient(Partition{1}, Partition{1}, Partition{3}) == 0);
}

TEST_CASE("lr_coefficient is symmetric in lambda and mu") {
  std::mt19937 rng(7u);
  std::vector<Partition> universe = partitions_up_to(10, 5);
  std::uniform_int_distribution<std::size_t> pick(0, universe.size() - 1);
  for (int trial = 0; trial < 60; ++trial) {
    const Partition& a = universe[pick(rng)];
    const Partition& b = universe[pick(rng)];
    const Partition& nu = universe[pick(rng)];
    CHECK(lr_coefficient(a, b, nu) == lr_coefficient(b, a, nu));
  }
}

TEST_CASE("lr_product matches the monomial oracle") {
  for (const Partition& lambda : partitions_up_to(5, 4)) {
    for (const Partition& mu : partitions_up_to(5, 4)) {
      if (lambda.sum() + mu.sum() > 8) continue;
      SchurExpansion via_oracle = oracle::to_schur_basis(
          oracle::schur_poly(lambda, 4) * oracle::schur_poly(mu, 4));
      CHECK(lr_product(lambda, mu, 4) == via_oracle);
    }
  }
}

TEST_CASE("lr_tableaux counts and fillings agree") {
  auto fillings =
      lr_tableaux(Partition{2, 2}, Partition{1, 1}, Partition{1, 1});
  REQUIRE(fillings.size() == 1);
  CHECK(fillings[0].entries_in_row(1, 1) == 1);
  CHECK(fillings[0].entries_in_row(2, 2) == 1);
  CHECK(fillings[0].entries_in_row(2, 1) == 0);
}

TEST_CASE("rect_square_closed_form at the worked instance (2,2,1)") {
  auto comps = rect_square_closed_form(2, 2, 1);
  REQUIRE(comps.size() == 3);
  // i-vectors enumerate lexicographically.
  CHECK(comps[0].i == std::vector<int>{0, 0});
  CHECK(comps[0].partition == Partition{2, 2});
  CHECK(comps[1].i == std::vector<int>{0, 1});
  CHECK(comps[1].partition == Partition{1, 1, 1, 1});
  CHECK(comps[2].i == std::vector<int>{1, 0});
  CHECK(comps[2].partition == Partition{2, 1, 1});
  // j reverses i.
  CHECK(comps[2].j == std::vector<int>{0, 1});
  for (const auto& comp : comps)
    CHECK(comp.fund == partition_to_fund(comp.partition, 4));
}

TEST_CASE("rect_square_closed_form single-row case") {
  for (int p = 1; p <= 4; ++p) {
    for (int k = 0; k <= 3; ++k) {
      auto comps = rect_square_closed_form(p, 1, k);
      REQUIRE(comps.size() == static_cast<std::size_t>(k + 1));
      for (int i = 0; i <= k; ++i)
        CHECK(comps[static_cast<std::size_t>(i)].partition ==
              Partition{2 * k - i, i});
    }
  }
}

TEST_CASE("rect_square_closed_form trivial and invalid input") {
  auto comps = rect_square_closed_form(3, 2, 0);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].partition.empty());
  CHECK_THROWS_AS(rect_square_closed_form(2, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(rect_square_closed_form(2, 2, -1), std::invalid_argument);
}

TEST_CASE("component count is binomial(k+q, q)") {
  for (int q = 1; q <= 3; ++q)
    for (int p = q; p + q <= 7; ++p)
      for (int k = 0; k <= 4; ++k)
        CHECK(BigInt(rect_square_closed_form(p, q, k).size()) ==
              rect_square_component_count(q, k));
}

TEST_CASE("rectangle squares are multiplicity-free and match the closed form") {
  for (int q = 1; q <= 3; ++q) {
    for (int p = q; p + q <= 6; ++p) {
      for (int k = 0; k <= 3; ++k) {
        const int n = p + q;
        SchurExpansion square =
            lr_product(Partition::rectangle(q, k), Partition::rectangle(q, k), n);
        std::set<Partition> support;
        for (const auto& [nu, c] : square.terms()) {
          CHECK(c == 1);
          support.insert(nu);
        }
        std::set<Partition> closed;
        for (const auto& comp : rect_square_closed_form(p, q, k))
          closed.insert(comp.partition);
        CHECK(support == closed);
      }
    }
  }
}

TEST_CASE("LR witness collapse on the stated instances") {
  LRWitnessReport r221 = verify_lr_rules_witness(2, 2, 1);
  CHECK(r221.collapse_holds());
  CHECK(r221.tableaux_checked == 3);

  LRWitnessReport r322 = verify_lr_rules_witness(3, 2, 2);
  CHECK(r322.collapse_holds());
  CHECK(r322.component_count == 6);

  for (int p = 1; p <= 4; ++p) {
    LRWitnessReport single = verify_lr_rules_witness(p, 1, 1);
    CHECK(single.collapse_holds());
    CHECK(single.tableaux_checked == 2);
  }

  CHECK_THROWS_AS(verify_lr_rules_witness(5, 5, 1), std::invalid_argument);
}
