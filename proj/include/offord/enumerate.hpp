#pragma once

#include <functional>
#include <vector>

#include "offord/sign_matrix.hpp"

namespace offord {

inline constexpr int kMaxEnumRows = 4;
inline constexpr int kMaxEnumCols = 15;

/// Reduced {0,+-1} matrices with `rows` rows, no zero column, every row weight
/// in [min_weight, max_weight], at most max_cols columns and at least one row
/// of weight >= min_top_weight.
struct EnumerationScope {
  int rows = 1;
  int min_weight = 2;
  int max_weight = 2;
  int max_cols = kMaxEnumCols;
  int min_top_weight = 0;
};

// Return false to stop the enumeration.
using MatrixSink = std::function<bool(const SignMatrix&)>;

// Work unit: one weight profile (count of -1s, count of +1s) for the first row.
struct FirstRow {
  int minus = 0;
  int plus = 0;
};

std::vector<FirstRow> first_row_classes(const EnumerationScope& scope);

// One representative per row/column permutation class, emitted as its
// canonical matrix. Returns false if the sink stopped early.
bool enumerate_reduced_matrices(const EnumerationScope& scope, const MatrixSink& sink);
bool enumerate_first_row(const EnumerationScope& scope, FirstRow first, const MatrixSink& sink);

std::vector<SignMatrix> collect_reduced_matrices(const EnumerationScope& scope);

}  // namespace offord
