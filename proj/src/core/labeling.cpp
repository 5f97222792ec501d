#include "core/labeling.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <random>

namespace ebi {

namespace {

std::uint64_t low_mask(int n) { return n >= 64 ? ~0ull : (1ull << n) - 1; }

void check_columns(const GraphParams& params) {
  if (params.n() > kMaxColumns)
    throw Error(ErrorCode::unsupported,
                "labelings support at most " + std::to_string(kMaxColumns) + " columns (n = " +
                    std::to_string(params.n()) + ")");
}

void check_coords(const GraphParams& params, int row, int col) {
  if (row < 1 || row > params.m())
    throw Error(ErrorCode::invalid_argument, "row out of range: " + std::to_string(row));
  if (col < 1 || col > params.n())
    throw Error(ErrorCode::invalid_argument, "column out of range: " + std::to_string(col));
}

}  // namespace

bool is_edge_friendly(int n, std::span<const std::uint64_t> row_masks) {
  long e1 = 0;
  for (std::uint64_t row : row_masks) e1 += std::popcount(row & low_mask(n));
  const long total = static_cast<long>(row_masks.size()) * n;
  return std::abs(e1 - (total - e1)) <= 1;
}

bool is_edge_friendly(const std::vector<std::string>& rows) {
  long e1 = 0;
  long total = 0;
  for (const std::string& row : rows) {
    total += static_cast<long>(row.size());
    e1 += static_cast<long>(std::count(row.begin(), row.end(), '1'));
  }
  return std::abs(e1 - (total - e1)) <= 1;
}

EdgeLabeling EdgeLabeling::from_masks(const GraphParams& params, std::vector<std::uint64_t> rows) {
  check_columns(params);
  if (static_cast<int>(rows.size()) != params.m())
    throw Error(ErrorCode::invalid_argument,
                "expected " + std::to_string(params.m()) + " rows, got " + std::to_string(rows.size()));
  const std::uint64_t width = low_mask(params.n());
  int e1 = 0;
  for (std::uint64_t row : rows) {
    if ((row & ~width) != 0)
      throw Error(ErrorCode::invalid_argument, "row mask has bits beyond column " + std::to_string(params.n()));
    e1 += std::popcount(row);
  }
  const int e0 = params.m() * params.n() - e1;
  if (std::abs(e1 - e0) > 1)
    throw Error(ErrorCode::invalid_argument,
                "labeling is not edge-friendly: e1=" + std::to_string(e1) + ", e0=" + std::to_string(e0));
  return EdgeLabeling(params, std::move(rows), e1);
}

EdgeLabeling EdgeLabeling::from_rows(const GraphParams& params, const std::vector<std::string>& rows) {
  if (static_cast<int>(rows.size()) != params.m())
    throw Error(ErrorCode::invalid_argument,
                "expected " + std::to_string(params.m()) + " rows, got " + std::to_string(rows.size()));
  std::vector<std::uint64_t> masks(rows.size(), 0);
  for (size_t k = 0; k < rows.size(); ++k) {
    if (static_cast<int>(rows[k].size()) != params.n())
      throw Error(ErrorCode::invalid_argument,
                  "row " + std::to_string(k + 1) + " must have " + std::to_string(params.n()) + " characters");
    for (int c = 0; c < params.n(); ++c) {
      const char ch = rows[k][c];
      if (ch == '1')
        masks[k] |= 1ull << c;
      else if (ch != '0')
        throw Error(ErrorCode::invalid_argument,
                    std::string("row character must be '0' or '1', got '") + ch + "'");
    }
  }
  return from_masks(params, std::move(masks));
}

int EdgeLabeling::cell(int row, int col) const {
  check_coords(params_, row, col);
  return static_cast<int>((rows_[row - 1] >> (col - 1)) & 1);
}

std::uint64_t EdgeLabeling::row_mask(int row) const {
  if (row < 1 || row > params_.m())
    throw Error(ErrorCode::invalid_argument, "row out of range: " + std::to_string(row));
  return rows_[row - 1];
}

std::string EdgeLabeling::row_string(int row) const {
  const std::uint64_t mask = row_mask(row);
  std::string out(params_.n(), '0');
  for (int c = 0; c < params_.n(); ++c)
    if ((mask >> c) & 1) out[c] = '1';
  return out;
}

void EdgeLabeling::apply_switch(const SwitchOp& op) {
  check_coords(params_, op.a_one_row, op.pivot_col);
  check_coords(params_, op.a_zero_row, op.pivot_col);
  if (op.a_one_row == op.a_zero_row)
    throw Error(ErrorCode::invalid_argument, "switch rows must be distinct");
  const std::uint64_t bit = 1ull << (op.pivot_col - 1);
  if ((rows_[op.a_one_row - 1] & bit) == 0)
    throw Error(ErrorCode::invalid_argument,
                "malformed switch: edge " + params_.a_name(op.a_one_row) + " " +
                    GraphParams::b_name(op.pivot_col) + " is not labeled 1");
  if ((rows_[op.a_zero_row - 1] & bit) != 0)
    throw Error(ErrorCode::invalid_argument,
                "malformed switch: edge " + params_.a_name(op.a_zero_row) + " " +
                    GraphParams::b_name(op.pivot_col) + " is not labeled 0");
  rows_[op.a_one_row - 1] &= ~bit;
  rows_[op.a_zero_row - 1] |= bit;
}

EdgeLabeling EdgeLabeling::with_switch(const SwitchOp& op) const {
  EdgeLabeling out = *this;
  out.apply_switch(op);
  return out;
}

PartialLabeling::PartialLabeling(const GraphParams& params)
    : params_(params), ones_(params.m(), 0), known_(params.m(), 0) {
  check_columns(params);
}

void PartialLabeling::set_row(int row, std::uint64_t ones_mask) {
  if (row < 1 || row > params_.m())
    throw Error(ErrorCode::invalid_argument, "row out of range: " + std::to_string(row));
  const std::uint64_t width = low_mask(params_.n());
  if ((ones_mask & ~width) != 0)
    throw Error(ErrorCode::invalid_argument, "row mask has bits beyond column " + std::to_string(params_.n()));
  ones_[row - 1] = ones_mask;
  known_[row - 1] = width;
}

void PartialLabeling::set_cell(int row, int col, int value) {
  check_coords(params_, row, col);
  if (value != 0 && value != 1)
    throw Error(ErrorCode::invalid_argument, "cell value must be 0 or 1");
  const std::uint64_t bit = 1ull << (col - 1);
  known_[row - 1] |= bit;
  if (value)
    ones_[row - 1] |= bit;
  else
    ones_[row - 1] &= ~bit;
}

int PartialLabeling::cell(int row, int col) const {
  check_coords(params_, row, col);
  const std::uint64_t bit = 1ull << (col - 1);
  if ((known_[row - 1] & bit) == 0) return -1;
  return (ones_[row - 1] & bit) ? 1 : 0;
}

bool PartialLabeling::row_complete(int row) const {
  if (row < 1 || row > params_.m())
    throw Error(ErrorCode::invalid_argument, "row out of range: " + std::to_string(row));
  return known_[row - 1] == low_mask(params_.n());
}

bool PartialLabeling::complete() const {
  const std::uint64_t width = low_mask(params_.n());
  return std::all_of(known_.begin(), known_.end(), [width](std::uint64_t k) { return k == width; });
}

EdgeLabeling PartialLabeling::finalize() const {
  if (!complete())
    throw Error(ErrorCode::invalid_argument, "cannot finalize a labeling with unset cells");
  return EdgeLabeling::from_masks(params_, ones_);
}

EdgeLabeling random_edge_friendly(const GraphParams& params, std::uint64_t seed) {
  check_columns(params);
  const int total = params.m() * params.n();
  std::vector<char> bits(total, 0);
  std::fill(bits.begin(), bits.begin() + total / 2, 1);
  std::mt19937_64 rng(seed);
  std::shuffle(bits.begin(), bits.end(), rng);
  std::vector<std::uint64_t> rows(params.m(), 0);
  for (int k = 0; k < total; ++k)
    if (bits[k]) rows[k / params.n()] |= 1ull << (k % params.n());
  return EdgeLabeling::from_masks(params, std::move(rows));
}

}  // namespace ebi
