#include <doctest.h>

#include <vector>

#include "core/index_set.hpp"

using ebi::Error;
using ebi::IndexSet;

TEST_CASE("range construction") {
  auto set = IndexSet::range(0, 4);
  CHECK(set.size() == 5);
  CHECK(set.min() == 0);
  CHECK(set.max() == 4);
  CHECK(set.contains(3));
  CHECK_FALSE(set.contains(5));
  CHECK(set.contiguous_from_zero());

  CHECK(IndexSet::range(2, 1).empty());
  CHECK(IndexSet::range(3, 3).values() == std::vector<int>{3});
}

TEST_CASE("insert keeps values sorted and unique") {
  IndexSet set;
  set.insert(5);
  set.insert(2);
  set.insert(5);
  set.insert(0);
  CHECK(set.values() == std::vector<int>{0, 2, 5});
  CHECK_FALSE(set.contiguous_from_zero());
  CHECK_THROWS_AS(set.insert(-1), Error);
}

TEST_CASE("merge is set union") {
  auto a = IndexSet::range(0, 3);
  auto b = IndexSet::range(2, 6);
  a.merge(b);
  CHECK(a == IndexSet::range(0, 6));

  IndexSet c;
  c.merge(IndexSet::range(1, 2));
  CHECK(c.values() == std::vector<int>{1, 2});
  CHECK_FALSE(c.contiguous_from_zero());
}

TEST_CASE("rendering") {
  CHECK(IndexSet().to_string() == "{}");
  CHECK(IndexSet::range(0, 0).to_string() == "{0}");
  CHECK(IndexSet::range(0, 1).to_string() == "{0,1}");
  CHECK(IndexSet::range(0, 4).to_string() == "{0..4}");
  CHECK(IndexSet::range(2, 5).to_string() == "{2..5}");

  IndexSet sparse;
  sparse.insert(0);
  sparse.insert(2);
  sparse.insert(5);
  CHECK(sparse.to_string() == "{0,2,5}");
}

TEST_CASE("empty set has no extremes") {
  IndexSet set;
  CHECK(set.empty());
  CHECK_THROWS_AS((void)set.min(), Error);
  CHECK_THROWS_AS((void)set.max(), Error);
  CHECK_FALSE(set.contiguous_from_zero());
}
