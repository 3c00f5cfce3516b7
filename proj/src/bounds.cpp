#include "offord/bounds.hpp"

#include <algorithm>

#include "offord/error.hpp"

namespace offord {

BoundSpec lo_bound(int k, int l) {
  if (k < 1 || l < 1) throw PreconditionError("lo_bound requires k, l >= 1");
  if (l > 62) throw CapacityError("lo_bound limited to l <= 62");
  BoundSpec b{k, l, 0};
  if (k <= l - 1) {
    b.value = ((std::uint64_t{1} << k) + 1) << (l - k - 1);
  } else {
    b.value = std::uint64_t{1} << (l - 1);
  }
  return b;
}

std::uint64_t binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t c = 1;
  for (int i = 1; i <= r; ++i) {
    // c * (n - r + i) is divisible by i at every step.
    c = c * static_cast<std::uint64_t>(n - r + i) / static_cast<std::uint64_t>(i);
  }
  return c;
}

std::uint64_t vector_bound(int l, int ones) {
  if (l < 1 || ones < 0 || ones > l) throw PreconditionError("vector_bound requires 0 <= ones <= l");
  return binomial(l + 1, ones);
}

CostEstimate estimate_cost_t7() {
  CostEstimate est;
  for (int i = 0; i <= 3; ++i) {
    for (int j = 0; j <= std::min(6, 7 - i); ++j) {
      for (int r = 0; r <= std::min(4, 7 - i - j); ++r) {
        CostTerm t;
        t.i = i;
        t.j = j;
        t.r = r;
        t.row_choices = static_cast<std::uint64_t>((i + 1) * (j + 1) * (r + 1));
        t.inner_products = 2 * static_cast<std::uint64_t>(i + 1) * (std::uint64_t{1} << (j + 7)) *
                           static_cast<std::uint64_t>((j + 1) * (r + 1));
        est.row_choices += t.row_choices;
        est.inner_products += t.inner_products;
        est.breakdown.push_back(t);
      }
    }
  }
  return est;
}

}  // namespace offord
