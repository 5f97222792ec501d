#include <doctest.h>

#include <string>

#include "core/params.hpp"

using ebi::Error;
using ebi::ErrorCode;
using ebi::GraphParams;

namespace {

std::string error_message(int m, int n) {
  try {
    GraphParams::create(m, n);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_params);
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("partition quotient and remainder") {
  auto p = GraphParams::create(7, 4);
  CHECK(p.quotient() == 2);
  CHECK(p.remainder() == 1);
  CHECK(p.block_size() == 3);

  p = GraphParams::create(5, 4);
  CHECK(p.quotient() == 1);
  CHECK(p.remainder() == 2);

  p = GraphParams::create(9, 2);
  CHECK(p.quotient() == 4);
  CHECK(p.remainder() == 1);

  p = GraphParams::create(3, 2);
  CHECK(p.quotient() == 1);
  CHECK(p.remainder() == 1);
}

TEST_CASE("n=2 forces q=(m-1)/2 and r=1") {
  for (int m = 3; m <= 41; m += 2) {
    auto p = GraphParams::create(m, 2);
    CHECK(p.quotient() == (m - 1) / 2);
    CHECK(p.remainder() == 1);
  }
}

TEST_CASE("q=1 with n>=4 forces m=n+1 and r=n/2") {
  for (int n = 4; n <= 40; n += 2) {
    auto p = GraphParams::create(n + 1, n);
    CHECK(p.quotient() == 1);
    CHECK(p.remainder() == n / 2);
  }
}

TEST_CASE("m = q*(n/2+1) + r with 0 <= r <= n/2 across a sweep") {
  for (int m = 3; m <= 41; m += 2) {
    for (int n = 2; n < m; n += 2) {
      auto p = GraphParams::create(m, n);
      CHECK(p.m() == p.quotient() * p.block_size() + p.remainder());
      CHECK(p.quotient() >= 1);
      CHECK(p.remainder() >= 0);
      CHECK(p.remainder() <= p.half_n());
      CHECK(p.has_star() == (p.remainder() >= 1));
    }
  }
}

TEST_CASE("each rejected input gets a distinct diagnostic") {
  const std::string even_m = error_message(6, 4);
  const std::string odd_n = error_message(5, 3);
  const std::string small_n = error_message(5, 0);
  const std::string small_m = error_message(1, 2);
  const std::string m_not_larger = error_message(5, 6);

  CHECK(even_m.find("odd") != std::string::npos);
  CHECK(odd_n.find("even") != std::string::npos);
  CHECK(m_not_larger.find("exceed") != std::string::npos);
  for (const auto* a : {&even_m, &odd_n, &small_n, &small_m, &m_not_larger}) {
    CHECK(!a->empty());
    for (const auto* b : {&even_m, &odd_n, &small_n, &small_m, &m_not_larger}) {
      if (a != b) CHECK(*a != *b);
    }
  }
}

TEST_CASE("flat rows cover blocks then the star block") {
  auto p = GraphParams::create(7, 4);  // q=2 blocks of 3 rows, star of 1
  CHECK(p.row_of(1, 1) == 1);
  CHECK(p.row_of(1, 3) == 3);
  CHECK(p.row_of(2, 1) == 4);
  CHECK(p.row_of(2, 3) == 6);
  CHECK(p.star_row_of(1) == 7);

  for (int row = 1; row <= 7; ++row) {
    const auto v = p.a_vertex(row);
    if (v.block == 0) {
      CHECK(p.star_row_of(v.pos) == row);
    } else {
      CHECK(p.row_of(v.block, v.pos) == row);
    }
  }
}

TEST_CASE("vertex names") {
  auto p = GraphParams::create(7, 4);
  CHECK(p.a_name(1) == "v_1^1");
  CHECK(p.a_name(5) == "v_2^2");
  CHECK(p.a_name(7) == "v_1^*");
  CHECK(GraphParams::b_name(3) == "u_3");
}

TEST_CASE("out-of-range vertex addresses are rejected") {
  auto p = GraphParams::create(5, 4);
  CHECK_THROWS_AS((void)p.a_vertex(0), Error);
  CHECK_THROWS_AS((void)p.a_vertex(6), Error);
  CHECK_THROWS_AS((void)p.row_of(3, 1), Error);
  CHECK_THROWS_AS((void)p.row_of(1, 4), Error);
  CHECK_THROWS_AS((void)p.star_row_of(3), Error);
}
