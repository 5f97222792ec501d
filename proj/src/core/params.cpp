#include "core/params.hpp"

#include <string>

namespace ebi {

namespace {

[[noreturn]] void reject(const std::string& msg) {
  throw Error(ErrorCode::invalid_params, msg);
}

}  // namespace

GraphParams GraphParams::create(int m, int n) {
  if (m % 2 == 0) reject("m must be odd (got " + std::to_string(m) + ")");
  if (n % 2 != 0) reject("n must be even (got " + std::to_string(n) + ")");
  if (n < 2) reject("n must be at least 2 (got " + std::to_string(n) + ")");
  if (m < 3) reject("m must be at least 3 (got " + std::to_string(m) + ")");
  if (m <= n) reject("m must exceed n (got m=" + std::to_string(m) + ", n=" + std::to_string(n) + ")");
  const int bs = n / 2 + 1;
  return GraphParams(m, n, m / bs, m % bs);
}

int GraphParams::row_of(int block, int pos) const {
  if (block < 1 || block > q_)
    throw Error(ErrorCode::invalid_argument, "block out of range: " + std::to_string(block));
  if (pos < 1 || pos > block_size())
    throw Error(ErrorCode::invalid_argument, "position out of range: " + std::to_string(pos));
  return (block - 1) * block_size() + pos;
}

int GraphParams::star_row_of(int pos) const {
  if (r_ < 1) throw Error(ErrorCode::invalid_argument, "no star block: r = 0");
  if (pos < 1 || pos > r_)
    throw Error(ErrorCode::invalid_argument, "star position out of range: " + std::to_string(pos));
  return q_ * block_size() + pos;
}

GraphParams::AVertex GraphParams::a_vertex(int row) const {
  if (row < 1 || row > m_)
    throw Error(ErrorCode::invalid_argument, "row out of range: " + std::to_string(row));
  const int bs = block_size();
  if (row <= q_ * bs) return {(row - 1) / bs + 1, (row - 1) % bs + 1};
  return {0, row - q_ * bs};
}

std::string GraphParams::a_name(int row) const {
  const AVertex v = a_vertex(row);
  if (v.block == 0) return "v_" + std::to_string(v.pos) + "^*";
  return "v_" + std::to_string(v.pos) + "^" + std::to_string(v.block);
}

std::string GraphParams::b_name(int col) { return "u_" + std::to_string(col); }

}  // namespace ebi
