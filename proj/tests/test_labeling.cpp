#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "core/labeling.hpp"
#include "core/params.hpp"

using ebi::EdgeLabeling;
using ebi::Error;
using ebi::ErrorCode;
using ebi::GraphParams;
using ebi::PartialLabeling;
using ebi::SwitchOp;

TEST_CASE("edge-friendliness over raw rows") {
  CHECK_FALSE(ebi::is_edge_friendly({"11", "11", "11"}));        // all ones, |6-0| > 1
  CHECK(ebi::is_edge_friendly({"10", "01", "10"}));              // exactly mn/2 ones
  CHECK_FALSE(ebi::is_edge_friendly({"1100", "0011", "0011", "1100", "0111"}));  // mn/2 + 1
  CHECK(ebi::is_edge_friendly({"110", "011", "100"}));           // odd total, |5-4| = 1
}

TEST_CASE("from_rows round-trips cells, masks and strings") {
  auto params = GraphParams::create(5, 4);
  const std::vector<std::string> rows = {"1100", "0011", "0011", "1100", "0011"};
  auto lab = EdgeLabeling::from_rows(params, rows);

  CHECK(lab.ones() == 10);
  CHECK(lab.zeros() == 10);
  for (int row = 1; row <= 5; ++row) CHECK(lab.row_string(row) == rows[row - 1]);
  CHECK(lab.cell(1, 1) == 1);
  CHECK(lab.cell(1, 3) == 0);
  CHECK(lab.cell(2, 4) == 1);
  CHECK(lab.row_mask(1) == 0b0011);  // bit 0 is column 1
  CHECK(lab == EdgeLabeling::from_masks(params, {0b0011, 0b1100, 0b1100, 0b0011, 0b1100}));
}

TEST_CASE("construction rejects malformed input") {
  auto params = GraphParams::create(5, 4);
  CHECK_THROWS_AS(EdgeLabeling::from_rows(params, {"1100", "0011"}), Error);
  CHECK_THROWS_AS(EdgeLabeling::from_rows(params, {"110", "0011", "0011", "1100", "0011"}), Error);
  CHECK_THROWS_AS(EdgeLabeling::from_rows(params, {"1a00", "0011", "0011", "1100", "0011"}), Error);
  CHECK_THROWS_AS(EdgeLabeling::from_rows(params, {"1110", "0011", "0011", "1100", "0011"}), Error);
  CHECK_THROWS_AS(EdgeLabeling::from_masks(params, {0b10011, 0b1100, 0b1100, 0b0011, 0b1100}),
                  Error);

  try {
    EdgeLabeling::from_rows(params, {"1111", "0011", "0011", "1100", "0011"});
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_argument);
    CHECK(std::string(e.what()).find("edge-friendly") != std::string::npos);
  }
}

TEST_CASE("switch swaps exactly the two cells at the pivot") {
  auto params = GraphParams::create(5, 4);
  auto lab = EdgeLabeling::from_rows(params, {"1100", "0011", "0011", "1100", "0011"});
  const auto before = lab;

  lab.apply_switch({1, 1, 2});  // pivot u_1, row 1 gives up its 1, row 2 takes it
  CHECK(lab.cell(1, 1) == 0);
  CHECK(lab.cell(2, 1) == 1);
  CHECK(lab.ones() == 10);
  CHECK(lab.zeros() == 10);
  int changed = 0;
  for (int row = 1; row <= 5; ++row)
    for (int col = 1; col <= 4; ++col) changed += lab.cell(row, col) != before.cell(row, col);
  CHECK(changed == 2);

  // reversed roles restore the original
  lab.apply_switch({1, 2, 1});
  CHECK(lab == before);
}

TEST_CASE("switch rejects wrong labels, repeats and bad coords") {
  auto params = GraphParams::create(5, 4);
  auto lab = EdgeLabeling::from_rows(params, {"1100", "0011", "0011", "1100", "0011"});

  CHECK_THROWS_AS(lab.apply_switch({1, 2, 1}), Error);   // row 2 has a 0 there, not a 1
  CHECK_THROWS_AS(lab.apply_switch({1, 1, 4}), Error);   // row 4 already holds a 1
  CHECK_THROWS_AS(lab.apply_switch({1, 1, 1}), Error);   // rows must differ
  CHECK_THROWS_AS(lab.apply_switch({5, 1, 2}), Error);   // no column 5
  CHECK_THROWS_AS(lab.apply_switch({1, 0, 2}), Error);
  CHECK_THROWS_AS(lab.apply_switch({1, 1, 6}), Error);

  auto twice = lab.with_switch({1, 1, 2});
  CHECK_THROWS_AS(twice.apply_switch({1, 1, 2}), Error);  // labels now reversed

  // the original is untouched by with_switch and by the failed attempts
  CHECK(lab == EdgeLabeling::from_rows(params, {"1100", "0011", "0011", "1100", "0011"}));
}

TEST_CASE("partial labeling tracks unset cells until finalization") {
  auto params = GraphParams::create(3, 2);
  PartialLabeling partial(params);

  CHECK(partial.cell(1, 1) == -1);
  CHECK_FALSE(partial.complete());
  CHECK_THROWS_AS((void)partial.finalize(), Error);

  partial.set_row(1, 0b01);  // "10"
  CHECK(partial.cell(1, 1) == 1);
  CHECK(partial.cell(1, 2) == 0);
  CHECK(partial.row_complete(1));
  CHECK_FALSE(partial.row_complete(2));

  partial.set_cell(2, 1, 0);
  partial.set_cell(2, 2, 1);
  partial.set_row(3, 0b01);
  CHECK(partial.complete());

  auto lab = partial.finalize();
  CHECK(lab.row_string(1) == "10");
  CHECK(lab.row_string(2) == "01");
  CHECK(lab.row_string(3) == "10");
}

TEST_CASE("finalize validates edge-friendliness") {
  auto params = GraphParams::create(3, 2);
  PartialLabeling partial(params);
  partial.set_row(1, 0b11);
  partial.set_row(2, 0b11);
  partial.set_row(3, 0b01);
  CHECK_THROWS_AS((void)partial.finalize(), Error);
}

TEST_CASE("random labelings are balanced and deterministic per seed") {
  auto params = GraphParams::create(7, 4);
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto lab = ebi::random_edge_friendly(params, seed);
    CHECK(lab.ones() == 14);
    CHECK(lab.zeros() == 14);
    CHECK(lab == ebi::random_edge_friendly(params, seed));
  }
  CHECK(ebi::random_edge_friendly(params, 1) != ebi::random_edge_friendly(params, 2));
}

TEST_CASE("switch involution holds on random labelings") {
  auto params = GraphParams::create(9, 4);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    auto lab = ebi::random_edge_friendly(params, rng());
    const auto before = lab;
    // find a pivot column with both a 1-row and a 0-row
    SwitchOp op{0, 0, 0};
    for (int col = 1; col <= 4 && op.pivot_col == 0; ++col) {
      int one = 0, zero = 0;
      for (int row = 1; row <= 9; ++row) {
        if (lab.cell(row, col) == 1 && one == 0) one = row;
        if (lab.cell(row, col) == 0 && zero == 0) zero = row;
      }
      if (one != 0 && zero != 0) op = {col, one, zero};
    }
    REQUIRE(op.pivot_col != 0);
    lab.apply_switch(op);
    CHECK(lab != before);
    lab.apply_switch({op.pivot_col, op.a_zero_row, op.a_one_row});
    CHECK(lab == before);
  }
}

TEST_CASE("labelings wider than 64 columns are rejected") {
  auto params = GraphParams::create(67, 66);
  CHECK_THROWS_AS(ebi::random_edge_friendly(params, 1), Error);
  try {
    ebi::random_edge_friendly(params, 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::unsupported);
  }
}
