#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "grassmoduli/oracle.hpp"
#include "grassmoduli/schur.hpp"

using namespace grassmoduli;

namespace {

SchurExpansion single(const Partition& lambda) {
  SchurExpansion e;
  e.add(lambda, 1);
  return e;
}

}  // namespace

TEST_CASE("expansion bookkeeping drops cancelled terms") {
  SchurExpansion e;
  e.add(Partition{2, 1}, 3);
  e.add(Partition{2, 1}, -3);
  CHECK(e.is_zero());
  e.add(Partition{1}, 2);
  CHECK(e.coeff(Partition{1}) == 2);
  CHECK(e.coeff(Partition{2}) == 0);
}

TEST_CASE("expansion text renders in decreasing lex order") {
  SchurExpansion e;
  e.add(Partition{1, 1, 1, 1}, 1);
  e.add(Partition{2, 1, 1}, -1);
  e.add(Partition{2, 2}, 1);
  CHECK(e.to_text() == "1·[2,2] -1·[2,1,1] 1·[1,1,1,1]");
  CHECK(SchurExpansion{}.to_text() == "0");
  CHECK(SchurExpansion::unit().to_text() == "1·[0]");
}

TEST_CASE("multiply: s_11 squared in four rows") {
  SchurExpansion product =
      multiply(single(Partition{1, 1}), single(Partition{1, 1}), 4);
  CHECK(product.size() == 3);
  CHECK(product.coeff(Partition{2, 2}) == 1);
  CHECK(product.coeff(Partition{2, 1, 1}) == 1);
  CHECK(product.coeff(Partition{1, 1, 1, 1}) == 1);
}

TEST_CASE("multiply: row squares follow the two-row ladder") {
  for (int k = 1; k <= 4; ++k) {
    SchurExpansion product =
        multiply(single(Partition{k}), single(Partition{k}), 2);
    CHECK(product.size() == static_cast<std::size_t>(k + 1));
    for (int i = 0; i <= k; ++i)
      CHECK(product.coeff(Partition{2 * k - i, i}) == 1);
  }
}

TEST_CASE("multiply: unit element and row truncation") {
  for (const Partition& lambda : partitions_up_to(6, 4))
    CHECK(multiply(SchurExpansion::unit(), single(lambda), 6) ==
          single(lambda));
  // (1,1)² truncated to two rows loses the taller components.
  SchurExpansion product =
      multiply(single(Partition{1, 1}), single(Partition{1, 1}), 2);
  CHECK(product.size() == 1);
  CHECK(product.coeff(Partition{2, 2}) == 1);
}

TEST_CASE("multiply is bilinear over signed expansions") {
  SchurExpansion mixed;
  mixed.add(Partition{2}, 1);
  mixed.add(Partition{1, 1}, -1);  // p₂
  SchurExpansion product = multiply(mixed, single(Partition{1}), 3);
  // p₂·s₁ = s₃ - s₁₁₁ (the middle terms cancel).
  CHECK(product.coeff(Partition{3}) == 1);
  CHECK(product.coeff(Partition{1, 1, 1}) == -1);
  CHECK(product.coeff(Partition{2, 1}) == 0);
  CHECK(product.size() == 2);
}

TEST_CASE("adams2 on the classical instances") {
  SchurExpansion single_box = adams2(Partition{1}, 4);
  CHECK(single_box.coeff(Partition{2}) == 1);
  CHECK(single_box.coeff(Partition{1, 1}) == -1);
  CHECK(single_box.size() == 2);

  SchurExpansion column = adams2(Partition{1, 1}, 4);
  CHECK(column.coeff(Partition{2, 2}) == 1);
  CHECK(column.coeff(Partition{2, 1, 1}) == -1);
  CHECK(column.coeff(Partition{1, 1, 1, 1}) == 1);
  CHECK(column.size() == 3);

  CHECK(adams2(Partition{}, 3) == SchurExpansion::unit());
  CHECK_THROWS_AS(adams2(Partition{1, 1, 1}, 2), std::invalid_argument);
}

TEST_CASE("adams2 satisfies the evaluation identity against the oracle") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& lambda : partitions_up_to(6, n))
      CHECK(adams2(lambda, n) ==
            oracle::to_schur_basis(
                oracle::square_vars(oracle::schur_poly(lambda, n))));
}

TEST_CASE("sym and alt squares of the column") {
  SchurExpansion sym = sym_square(Partition{1, 1}, 4);
  CHECK(sym.size() == 2);
  CHECK(sym.coeff(Partition{2, 2}) == 1);
  CHECK(sym.coeff(Partition{1, 1, 1, 1}) == 1);
  // Dimension cross-check: 20 + 1 = 21 = 6·7/2.
  CHECK(sym.dimension(4) == 21);

  SchurExpansion alt = alt_square(Partition{1, 1}, 4);
  CHECK(alt.size() == 1);
  CHECK(alt.coeff(Partition{2, 1, 1}) == 1);
  CHECK(alt.dimension(4) == 15);
}

TEST_CASE("sym square of a row keeps the even ladder steps") {
  for (int k = 0; k <= 4; ++k) {
    SchurExpansion sym = sym_square(Partition{k}, 2);
    for (int i = 0; i <= k; ++i)
      CHECK(sym.coeff(Partition{2 * k - i, i}) == (i % 2 == 0 ? 1 : 0));
  }
  CHECK(alt_square(Partition{1}, 3) == single(Partition{1, 1}));
  CHECK(sym_square(Partition{}, 3) == SchurExpansion::unit());
  CHECK(alt_square(Partition{}, 3).is_zero());
}

TEST_CASE("split identity: sym + alt recovers the square") {
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lambda : partitions_up_to(6, n)) {
      SchurExpansion combined = sym_square(lambda, n);
      combined += alt_square(lambda, n);
      CHECK(combined == multiply(single(lambda), single(lambda), n));
    }
  }
}

TEST_CASE("dimension identity: d(d±1)/2") {
  for (int n = 2; n <= 5; ++n) {
    for (const Partition& lambda : partitions_up_to(6, n)) {
      BigInt d = dim_gl(lambda, n);
      CHECK(sym_square(lambda, n).dimension(n) == d * (d + 1) / 2);
      CHECK(alt_square(lambda, n).dimension(n) == d * (d - 1) / 2);
    }
  }
}
