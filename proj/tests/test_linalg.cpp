// test_linalg.cpp — exact rank computation over Q and F_p.
// See LICENSE.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dmw/matrix.hpp"

using namespace dmw;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m;
  m.rows = rows.size();
  m.cols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    REQUIRE(r.size() == m.cols);
    m.a.insert(m.a.end(), r.begin(), r.end());
  }
  return m;
}

}  // namespace

TEST_CASE("field validation") {
  CHECK_NOTHROW(validate_field(FieldSpec{0}));
  CHECK_NOTHROW(validate_field(FieldSpec{2}));
  CHECK_NOTHROW(validate_field(FieldSpec{97}));
  CHECK_THROWS_AS(validate_field(FieldSpec{1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_field(FieldSpec{4}), std::invalid_argument);
  CHECK_THROWS_AS(validate_field(FieldSpec{-3}), std::invalid_argument);
  CHECK(FieldSpec{0}.name() == "Q");
  CHECK(FieldSpec{5}.name() == "F5");
}

TEST_CASE("prime field arithmetic") {
  PrimeField f{7};
  CHECK(f.add(4, 5) == 2);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.neg(2) == 5);
  for (long x = 1; x < 7; ++x) CHECK(f.mul(x, f.inv(x)) == 1);
  // no overflow on large primes
  PrimeField big{1000000007};
  long x = 999999999;
  CHECK(big.mul(x, big.inv(x)) == 1);
}

TEST_CASE("rank fixtures over three fields") {
  // tridiagonal Gram fixture: full rank over Q, F2, F3
  auto tri = from_rows({{1, 1, 0}, {1, 1, 1}, {0, 1, 1}});
  for (long ch : {0L, 2L, 3L}) CHECK(rank_int(tri, FieldSpec{ch}) == 3);

  auto ones = from_rows({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
  for (long ch : {0L, 2L, 3L, 5L}) CHECK(rank_int(ones, FieldSpec{ch}) == 1);

  // rank depends on the characteristic: det = 2
  auto det2 = from_rows({{1, 1}, {1, 3}});
  CHECK(rank_int(det2, FieldSpec{0}) == 2);
  CHECK(rank_int(det2, FieldSpec{2}) == 1);
  CHECK(rank_int(det2, FieldSpec{3}) == 2);

  auto zero = from_rows({{0, 0}, {0, 0}});
  CHECK(rank_int(zero, FieldSpec{0}) == 0);

  // wide and tall shapes
  auto wide = from_rows({{1, 2, 3, 4}, {2, 4, 6, 8}});
  CHECK(rank_int(wide, FieldSpec{0}) == 1);
  auto tall = from_rows({{1, 0}, {0, 1}, {1, 1}});
  CHECK(rank_int(tall, FieldSpec{0}) == 2);
}

TEST_CASE("nullspace dimension and invertibility") {
  RationalField F;
  auto m = to_field_matrix(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}), F);
  CHECK(rank(m) == 2);
  CHECK(nullspace_dim(m) == 1);
  CHECK_FALSE(is_invertible(m));

  auto id3 = to_field_matrix(from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), F);
  CHECK(is_invertible(id3));

  auto rect = to_field_matrix(from_rows({{1, 0, 0}, {0, 1, 0}}), F);
  CHECK_THROWS_AS(is_invertible(rect), std::invalid_argument);
}

TEST_CASE("rational pivots avoid integer pitfalls") {
  // naive integer elimination would overflow or truncate here
  auto m = from_rows({{2, 3, 5}, {7, 11, 13}, {17, 19, 23}});
  CHECK(rank_int(m, FieldSpec{0}) == 3);
  auto fractions = from_rows({{1, 2}, {3, 7}});  // det = 1
  CHECK(rank_int(fractions, FieldSpec{0}) == 2);
}

TEST_CASE("serial and parallel elimination agree") {
  // deterministic pseudo-random fixtures via a fixed LCG
  unsigned long state = 42;
  auto next = [&]() { state = state * 6364136223846793005ull + 1442695040888963407ull;
                      return static_cast<long>((state >> 33) % 19) - 9; };
  for (int trial = 0; trial < 6; ++trial) {
    IntMatrix m;
    m.rows = 17 + trial;
    m.cols = 23 - trial;
    m.a.resize(m.rows * m.cols);
    for (auto& x : m.a) x = next();
    for (long ch : {0L, 2L, 1000003L}) {
      size_t rs = rank_int(m, FieldSpec{ch}, /*parallel=*/false);
      size_t rp = rank_int(m, FieldSpec{ch}, /*parallel=*/true);
      CHECK(rs == rp);
    }
  }
}

TEST_CASE("row reducer builds an echelon basis incrementally") {
  RationalField F;
  RowReducer<RationalField> red(F, 3);
  CHECK(red.rank() == 0);
  CHECK(red.add_row({Rat(1), Rat(2), Rat(3)}));
  CHECK(red.rank() == 1);
  CHECK_FALSE(red.add_row({Rat(2), Rat(4), Rat(6)}));  // dependent
  CHECK(red.add_row({Rat(0), Rat(1), Rat(1)}));
  CHECK(red.add_row({Rat(5), Rat(0), Rat(0)}));
  CHECK(red.rank() == 3);
  CHECK(red.saturated());
  CHECK_FALSE(red.add_row({Rat(7), Rat(7), Rat(7)}));

  PrimeField F2{2};
  RowReducer<PrimeField> red2(F2, 2);
  CHECK(red2.add_row({1, 1}));
  CHECK_FALSE(red2.add_row({1, 1}));
  CHECK(red2.add_row({0, 1}));
  CHECK(red2.saturated());
}

TEST_CASE("matrix dump format") {
  std::ostringstream os;
  dump_matrix_int(from_rows({{1, -2}, {0, 3}}), os);
  CHECK(os.str() == "2 2\n1 -2\n0 3\n");

  RationalField F;
  Matrix<RationalField> m(F, 1, 2);
  m.at(0, 0) = Rat(1, 2);
  m.at(0, 1) = Rat(-3);
  std::ostringstream os2;
  dump_matrix(m, os2);
  CHECK(os2.str() == "1 2\n1/2 -3\n");
}
