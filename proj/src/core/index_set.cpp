#include "core/index_set.hpp"

#include <algorithm>

namespace ebi {

IndexSet IndexSet::range(int lo, int hi) {
  IndexSet out;
  for (int v = lo; v <= hi; ++v) out.values_.push_back(v);
  return out;
}

void IndexSet::insert(int value) {
  if (value < 0) throw Error(ErrorCode::invalid_argument, "index sets hold nonnegative values");
  auto it = std::lower_bound(values_.begin(), values_.end(), value);
  if (it == values_.end() || *it != value) values_.insert(it, value);
}

void IndexSet::merge(const IndexSet& other) {
  std::vector<int> merged;
  merged.reserve(values_.size() + other.values_.size());
  std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                 std::back_inserter(merged));
  values_ = std::move(merged);
}

bool IndexSet::contains(int value) const {
  return std::binary_search(values_.begin(), values_.end(), value);
}

int IndexSet::min() const {
  if (values_.empty()) throw Error(ErrorCode::invalid_argument, "min of an empty index set");
  return values_.front();
}

int IndexSet::max() const {
  if (values_.empty()) throw Error(ErrorCode::invalid_argument, "max of an empty index set");
  return values_.back();
}

bool IndexSet::contiguous_from_zero() const {
  return !values_.empty() && values_.front() == 0 && values_.back() == size() - 1;
}

std::string IndexSet::to_string() const {
  if (values_.empty()) return "{}";
  const bool contiguous = values_.back() - values_.front() == size() - 1;
  if (contiguous && size() > 2)
    return "{" + std::to_string(values_.front()) + ".." + std::to_string(values_.back()) + "}";
  std::string out = "{";
  for (size_t k = 0; k < values_.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(values_[k]);
  }
  return out + "}";
}

}  // namespace ebi
