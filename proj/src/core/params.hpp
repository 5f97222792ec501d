#pragma once

#include <string>

#include "core/error.hpp"

namespace ebi {

// Validated parameters of a complete bipartite graph K_{m,n} with part A of
// odd cardinality m, part B of even cardinality n, and m > n >= 2.
//
// Writing m = q*(n/2 + 1) + r with 0 <= r <= n/2, part A splits into q blocks
// A_1, ..., A_q of size n/2 + 1 followed by a star block A_* of size r (absent
// when r = 0). A vertices are addressed either by flat row 1..m or by
// (block, position); B vertices by column 1..n.
class GraphParams {
 public:
  // Throws Error{invalid_params} with a distinct message per violated
  // constraint: m even, n odd, n < 2, m < 3, m <= n.
  static GraphParams create(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }
  int quotient() const { return q_; }
  int remainder() const { return r_; }

  int half_n() const { return n_ / 2; }
  int block_size() const { return n_ / 2 + 1; }
  bool has_star() const { return r_ >= 1; }

  // Flat row of v_pos^block, blocks laid out A_1..A_q then A_*.
  int row_of(int block, int pos) const;
  // Flat row of v_pos^*; requires r >= 1.
  int star_row_of(int pos) const;

  // Inverse of the flat layout. block == 0 encodes the star block.
  struct AVertex {
    int block;  // 1..q, or 0 for A_*
    int pos;    // 1-based position inside the block
  };
  AVertex a_vertex(int row) const;

  // "v_2^1" for numbered blocks, "v_1^*" for the star block.
  std::string a_name(int row) const;
  // "u_3"
  static std::string b_name(int col);

  bool operator==(const GraphParams&) const = default;

 private:
  GraphParams(int m, int n, int q, int r) : m_(m), n_(n), q_(q), r_(r) {}

  int m_;
  int n_;
  int q_;
  int r_;
};

}  // namespace ebi
