#include "theorem/theorem.hpp"

namespace ebi {

IndexSet theorem_ebi(const GraphParams& params) {
  if (params.n() == 2) return IndexSet::range(0, 0);
  return IndexSet::range(0, max_index(params));
}

int max_index(const GraphParams& params) {
  if (params.n() == 2) return 0;
  const int base = params.m() + params.n() - 2 * params.quotient() - 2;
  switch (params.remainder()) {
    case 0: return base;
    case 1: return base - 1;
    default: return base - 2;
  }
}

OverlapReport range_overlap_check(const GraphParams& params) {
  if (params.n() < 4)
    throw Error(ErrorCode::unsupported, "range overlap is defined for n >= 4");

  const int m = params.m();
  const int n = params.n();
  const int q = params.quotient();
  const int r = params.remainder();

  OverlapReport rep;
  rep.high_min = n - 2;

  auto numbers = [&](int low, const char* low_expr) {
    return std::string(low_expr) + " = " + std::to_string(low) + " vs n-3 = " + std::to_string(n - 3);
  };

  if (r == 0) {
    // q = 2m/(n+2), and m > n+1 forces m-2q = m(n-2)/(n+2) > n-3.
    rep.low_max = m - 2 * q;
    rep.subcase = "r=0";
    rep.detail = numbers(rep.low_max, "m-2q");
  } else if (r == 1) {
    // q = (2m-2)/(n+2), and m >= n+3 forces m-2q-1 = (m-1)(n-2)/(n+2) >= n-2.
    rep.low_max = m - 2 * q - 1;
    rep.subcase = "r=1";
    rep.detail = numbers(rep.low_max, "m-2q-1");
  } else {
    rep.low_max = m - 2 * q - 2;
    if (m == n + 1) {
      rep.subcase = "r>=2, m=n+1";  // q = 1 and m-2q-2 = n-3 exactly
    } else if (m == n + 3) {
      rep.subcase = "r>=2, m=n+3";  // q = 2 and m-2q-2 = n-3 exactly
    } else {
      rep.subcase = "r>=2, m>=n+5";  // m-2q-2 = (m-2)(n-2)/(n+2) + (4r-8)/(n+2) > n-2
    }
    rep.detail = numbers(rep.low_max, "m-2q-2");
  }

  rep.holds = rep.low_max >= n - 3;
  return rep;
}

}  // namespace ebi
