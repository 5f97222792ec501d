#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "core/params.hpp"

namespace ebi {

// Rows are stored as n-bit masks: bit (col-1) set means the edge to u_col is
// labeled 1. Row widths are capped at 64 columns, which covers every instance
// the constructions are asked to realize.
inline constexpr int kMaxColumns = 64;

// A {0,1}-edge-pair switch pivoted at B vertex u_{pivot_col}: the 1-edge from
// a_one_row and the 0-edge from a_zero_row to the pivot swap labels.
struct SwitchOp {
  int pivot_col;
  int a_one_row;
  int a_zero_row;
};

bool is_edge_friendly(int n, std::span<const std::uint64_t> row_masks);
bool is_edge_friendly(const std::vector<std::string>& rows);

// A fully assigned, edge-friendly binary edge-labeling of K_{m,n}.
// Construction enforces |e(1) - e(0)| <= 1, which for even m*n pins
// e(1) = e(0) = mn/2; both cached counts are kept in step with the cells.
class EdgeLabeling {
 public:
  static EdgeLabeling from_masks(const GraphParams& params, std::vector<std::uint64_t> rows);
  static EdgeLabeling from_rows(const GraphParams& params, const std::vector<std::string>& rows);

  const GraphParams& params() const { return params_; }
  int m() const { return params_.m(); }
  int n() const { return params_.n(); }

  int cell(int row, int col) const;  // 1-based, returns 0 or 1
  std::uint64_t row_mask(int row) const;
  std::string row_string(int row) const;

  int ones() const { return e1_; }
  int zeros() const { return params_.m() * params_.n() - e1_; }

  // Swaps the two labels at the pivot. Rejects an op whose cells do not carry
  // labels (1, 0) respectively; that signals a malformed schedule. Leaves
  // e(1), e(0) and the pivot's degrees untouched.
  void apply_switch(const SwitchOp& op);
  EdgeLabeling with_switch(const SwitchOp& op) const;

  bool operator==(const EdgeLabeling&) const = default;

 private:
  EdgeLabeling(const GraphParams& params, std::vector<std::uint64_t> rows, int e1)
      : params_(params), rows_(std::move(rows)), e1_(e1) {}

  GraphParams params_;
  std::vector<std::uint64_t> rows_;
  int e1_;
};

// Staging object for labelings built row by row; cells are 0, 1 or unset.
class PartialLabeling {
 public:
  explicit PartialLabeling(const GraphParams& params);

  const GraphParams& params() const { return params_; }

  // Defines all n cells of a row at once: 1 on the mask bits, 0 elsewhere.
  void set_row(int row, std::uint64_t ones_mask);
  void set_cell(int row, int col, int value);

  int cell(int row, int col) const;  // 0, 1, or -1 when unset
  bool row_complete(int row) const;
  bool complete() const;

  // Permitted only when no cell is unset; validates edge-friendliness.
  EdgeLabeling finalize() const;

 private:
  GraphParams params_;
  std::vector<std::uint64_t> ones_;
  std::vector<std::uint64_t> known_;
};

// Uniformly shuffled placement of mn/2 1-edges; deterministic per seed.
EdgeLabeling random_edge_friendly(const GraphParams& params, std::uint64_t seed);

}  // namespace ebi
