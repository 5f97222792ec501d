#pragma once

#include <string>
#include <vector>

#include "core/error.hpp"

namespace ebi {

// A sorted set of nonnegative integers (an edge-balanced index set or a part
// of one). Every set this project produces for its graph class is the
// contiguous range {0, ..., max}, but arbitrary sets are representable.
class IndexSet {
 public:
  IndexSet() = default;

  // {lo, lo+1, ..., hi}; empty when hi < lo.
  static IndexSet range(int lo, int hi);

  void insert(int value);
  void merge(const IndexSet& other);

  bool contains(int value) const;
  bool empty() const { return values_.empty(); }
  int size() const { return static_cast<int>(values_.size()); }
  int min() const;
  int max() const;
  bool contiguous_from_zero() const;

  const std::vector<int>& values() const { return values_; }

  // "{}", "{0..4}" for contiguous runs, otherwise "{0,2,5}".
  std::string to_string() const;

  bool operator==(const IndexSet&) const = default;

 private:
  std::vector<int> values_;  // sorted, unique
};

}  // namespace ebi
