#include <doctest.h>

#include <string>

#include "core/index_set.hpp"
#include "core/params.hpp"
#include "theorem/theorem.hpp"

using ebi::GraphParams;
using ebi::IndexSet;

TEST_CASE("closed form across the r cases") {
  CHECK(ebi::theorem_ebi(GraphParams::create(9, 2)) == IndexSet::range(0, 0));
  CHECK(ebi::theorem_ebi(GraphParams::create(3, 2)) == IndexSet::range(0, 0));
  CHECK(ebi::theorem_ebi(GraphParams::create(7, 4)) == IndexSet::range(0, 4));   // r=1
  CHECK(ebi::theorem_ebi(GraphParams::create(9, 4)) == IndexSet::range(0, 5));   // r=0
  CHECK(ebi::theorem_ebi(GraphParams::create(5, 4)) == IndexSet::range(0, 3));   // r=2
}

TEST_CASE("max index values") {
  CHECK(ebi::max_index(GraphParams::create(7, 6)) == 7);    // q=1, r=3
  CHECK(ebi::max_index(GraphParams::create(11, 4)) == 5);   // q=3, r=2
  CHECK(ebi::max_index(GraphParams::create(3, 2)) == 0);
  CHECK(ebi::max_index(GraphParams::create(9, 6)) == 8);    // q=2, r=1: 9+6-4-3
}

TEST_CASE("theorem set is always contiguous from zero and tops the skewed start") {
  for (int m = 3; m <= 41; m += 2) {
    for (int n = 2; n < m; n += 2) {
      auto params = GraphParams::create(m, n);
      auto set = ebi::theorem_ebi(params);
      CHECK(set.contiguous_from_zero());
      CHECK(set.max() == ebi::max_index(params));
      if (n >= 4) CHECK(ebi::max_index(params) >= n - 2);
    }
  }
}

TEST_CASE("range overlap diagnostics") {
  auto report = ebi::range_overlap_check(GraphParams::create(5, 4));
  CHECK(report.holds);
  CHECK(report.low_max == 1);       // m-2q-2 with q=1
  CHECK(report.high_min == 2);      // n-2
  CHECK(report.subcase == "r>=2, m=n+1");
  CHECK(!report.detail.empty());

  report = ebi::range_overlap_check(GraphParams::create(7, 4));
  CHECK(report.holds);
  CHECK(report.low_max == 2);       // m-2q-1 with q=2
  CHECK(report.subcase == "r=1");

  report = ebi::range_overlap_check(GraphParams::create(9, 6));
  CHECK(report.holds);
  CHECK(report.low_max == 4);       // m-2q-1 with q=2
  CHECK(report.high_min == 4);

  report = ebi::range_overlap_check(GraphParams::create(9, 4));
  CHECK(report.holds);
  CHECK(report.low_max == 3);       // m-2q with q=3, r=0
  CHECK(report.subcase == "r=0");
}

TEST_CASE("range overlap needs n >= 4") {
  CHECK_THROWS_AS((void)ebi::range_overlap_check(GraphParams::create(9, 2)), ebi::Error);
}

TEST_CASE("overlap holds across the full sweep") {
  for (int m = 3; m <= 201; m += 2) {
    for (int n = 4; n < m; n += 2) {
      const auto report = ebi::range_overlap_check(GraphParams::create(m, n));
      CHECK(report.holds);
      CHECK(report.low_max >= report.high_min - 1);  // the ranges meet or overlap
    }
  }
}
