#pragma once

#include <string>
#include <vector>

#include "core/labeling.hpp"

namespace ebi {

enum class VertexLabel { zero, one, unlabeled };

std::string to_string(VertexLabel label);

struct VertexDegrees {
  int deg1 = 0;
  int deg0 = 0;
  VertexLabel label = VertexLabel::unlabeled;
};

// Induced vertex labels of an edge-friendly labeling: a vertex is labeled 1
// when deg1 > deg0, 0 when deg0 > deg1, and stays unlabeled on a tie. Since m
// is odd every B vertex gets a label; A vertices can tie.
struct VertexSummary {
  std::vector<VertexDegrees> a;  // size m, flat row order
  std::vector<VertexDegrees> b;  // size n, column order

  int va1 = 0;
  int va0 = 0;
  int va_unlabeled = 0;
  int vb1 = 0;
  int vb0 = 0;

  // (v_A(1)+v_B(1)) - (v_A(0)+v_B(0)); the index is its absolute value.
  int signed_diff = 0;
  int index = 0;
};

VertexSummary induce_labels(const EdgeLabeling& lab);

// |v(1) - v(0)| of the induced labeling.
int ebi_index(const EdgeLabeling& lab);

}  // namespace ebi
