#pragma once

#include <cstdint>
#include <vector>

namespace offord {

struct BoundSpec {
  int k = 0;
  int l = 0;
  std::uint64_t value = 0;
};

// Largest |Omega(A)| over reduced k x l matrices:
// (2^k + 1) * 2^(l-k-1) when k <= l-1, else 2^(l-1).
BoundSpec lo_bound(int k, int l);

// |Omega(v)| for a +-1 vector of length l with `ones` entries equal to 1,
// namely binomial(l+1, ones).
std::uint64_t vector_bound(int l, int ones);

std::uint64_t binomial(int n, int r);

struct CostTerm {
  int i = 0;  // weight of the block under the -1 entries of the first row
  int j = 0;  // weight of the block under its zeros
  int r = 0;  // weight of the block under its +1 entries
  std::uint64_t row_choices = 0;
  std::uint64_t inner_products = 0;
};

struct CostEstimate {
  std::uint64_t row_choices = 0;
  std::uint64_t inner_products = 0;
  std::vector<CostTerm> breakdown;
};

// Second-row choices and inner-product count for the two-row, weight-7 sweep
// whose first row is (-1,-1,-1,0,...,0,1,1,1,1).
CostEstimate estimate_cost_t7();

}  // namespace offord
