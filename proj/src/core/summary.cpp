#include "core/summary.hpp"

#include <bit>
#include <cstdlib>

namespace ebi {

std::string to_string(VertexLabel label) {
  switch (label) {
    case VertexLabel::zero: return "0";
    case VertexLabel::one: return "1";
    case VertexLabel::unlabeled: return "unlabeled";
  }
  return "?";
}

namespace {

VertexLabel classify(int deg1, int deg0) {
  if (deg1 > deg0) return VertexLabel::one;
  if (deg0 > deg1) return VertexLabel::zero;
  return VertexLabel::unlabeled;
}

}  // namespace

VertexSummary induce_labels(const EdgeLabeling& lab) {
  const int m = lab.m();
  const int n = lab.n();
  VertexSummary s;
  s.a.resize(m);
  s.b.resize(n);

  std::vector<int> col1(n, 0);
  for (int row = 1; row <= m; ++row) {
    const std::uint64_t mask = lab.row_mask(row);
    const int deg1 = std::popcount(mask);
    s.a[row - 1] = {deg1, n - deg1, classify(deg1, n - deg1)};
    for (std::uint64_t bits = mask; bits; bits &= bits - 1) ++col1[std::countr_zero(bits)];
  }
  for (int col = 1; col <= n; ++col) {
    const int deg1 = col1[col - 1];
    s.b[col - 1] = {deg1, m - deg1, classify(deg1, m - deg1)};
  }

  for (const VertexDegrees& v : s.a) {
    s.va1 += v.label == VertexLabel::one;
    s.va0 += v.label == VertexLabel::zero;
    s.va_unlabeled += v.label == VertexLabel::unlabeled;
  }
  for (const VertexDegrees& v : s.b) {
    s.vb1 += v.label == VertexLabel::one;
    s.vb0 += v.label == VertexLabel::zero;
  }
  s.signed_diff = (s.va1 + s.vb1) - (s.va0 + s.vb0);
  s.index = std::abs(s.signed_diff);
  return s;
}

int ebi_index(const EdgeLabeling& lab) { return induce_labels(lab).index; }

}  // namespace ebi
