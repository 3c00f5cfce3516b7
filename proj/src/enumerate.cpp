#include "offord/enumerate.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "offord/canonical.hpp"
#include "offord/error.hpp"

namespace offord {

namespace {

// Columns that agree on every row generated so far.
struct Block {
  std::array<int, kMaxEnumRows> prefix{};
  int count = 0;
};

struct RowProfile {
  int minus = 0;
  int plus = 0;
};

void validate(const EnumerationScope& s) {
  if (s.rows < 1 || s.rows > kMaxEnumRows) {
    throw CapacityError("enumeration supports 1.." + std::to_string(kMaxEnumRows) + " rows");
  }
  if (s.max_cols < 1 || s.max_cols > kMaxEnumCols) {
    throw CapacityError("enumeration supports at most " + std::to_string(kMaxEnumCols) + " columns");
  }
  if (s.min_weight < 2) throw PreconditionError("reduced rows have weight at least 2");
}

class Generator {
 public:
  Generator(const EnumerationScope& scope, FirstRow first, const MatrixSink& sink)
      : scope_(scope), first_(first), sink_(sink) {}

  bool run() {
    const int w = first_.minus + first_.plus;
    if (w < scope_.min_weight || w > scope_.max_weight || w > scope_.max_cols) return true;
    std::vector<Block> blocks;
    if (first_.minus > 0) {
      Block b;
      b.prefix[0] = -1;
      b.count = first_.minus;
      blocks.push_back(b);
    }
    if (first_.plus > 0) {
      Block b;
      b.prefix[0] = 1;
      b.count = first_.plus;
      blocks.push_back(b);
    }
    weights_[0] = w;
    return next_row(1, blocks, w);
  }

 private:
  bool next_row(int depth, const std::vector<Block>& blocks, int cols) {
    if (!alive_) return false;
    if (depth == scope_.rows) return finish(blocks, cols);
    std::vector<Block> out;
    out.reserve(blocks.size() * 3 + 2);
    return split(depth, blocks, 0, out, cols, RowProfile{});
  }

  // Distribute -1/0/+1 over block `index`, keeping each block's entries sorted.
  bool split(int depth, const std::vector<Block>& blocks, std::size_t index, std::vector<Block>& out,
             int cols, RowProfile row) {
    if (row.minus > first_.minus) return true;
    if (row.minus + row.plus > scope_.max_weight) return true;
    if (index == blocks.size()) return add_new_columns(depth, out, cols, row);
    const Block& blk = blocks[index];
    for (int neg = 0; neg <= blk.count; ++neg) {
      for (int pos = 0; neg + pos <= blk.count; ++pos) {
        const std::size_t mark = out.size();
        const int zero = blk.count - neg - pos;
        for (auto [value, n] : {std::pair{-1, neg}, std::pair{0, zero}, std::pair{1, pos}}) {
          if (n == 0) continue;
          Block child = blk;
          child.prefix[static_cast<std::size_t>(depth)] = value;
          child.count = n;
          out.push_back(child);
        }
        RowProfile next{row.minus + neg, row.plus + pos};
        const bool go = split(depth, blocks, index + 1, out, cols, next);
        out.resize(mark);
        if (!go) return false;
      }
    }
    return true;
  }

  // Columns that were zero on every earlier row.
  bool add_new_columns(int depth, std::vector<Block>& out, int cols, RowProfile row) {
    for (int neg = 0; row.minus + neg <= first_.minus; ++neg) {
      for (int pos = 0;; ++pos) {
        const int minus = row.minus + neg;
        const int plus = row.plus + pos;
        const int w = minus + plus;
        if (w > scope_.max_weight || cols + neg + pos > scope_.max_cols) break;
        if (w < scope_.min_weight) continue;
        // The first row must be the least row once sorted: most -1s, then fewest +1s.
        if (minus == first_.minus && plus < first_.plus) continue;
        const std::size_t mark = out.size();
        for (auto [value, n] : {std::pair{-1, neg}, std::pair{1, pos}}) {
          if (n == 0) continue;
          Block child;
          child.prefix[static_cast<std::size_t>(depth)] = value;
          child.count = n;
          out.push_back(child);
        }
        weights_[static_cast<std::size_t>(depth)] = w;
        const std::vector<Block> next(out.begin(), out.end());
        out.resize(mark);
        if (!next_row(depth + 1, next, cols + neg + pos)) return false;
      }
    }
    return true;
  }

  bool finish(const std::vector<Block>& blocks, int cols) {
    const int k = scope_.rows;
    int top = 0;
    for (int i = 0; i < k; ++i) top = std::max(top, weights_[static_cast<std::size_t>(i)]);
    if (top < scope_.min_top_weight) return true;
    std::vector<int> entries(static_cast<std::size_t>(k) * cols);
    int c = 0;
    for (const Block& b : blocks) {
      for (int n = 0; n < b.count; ++n, ++c) {
        for (int i = 0; i < k; ++i) {
          entries[static_cast<std::size_t>(i) * cols + c] = b.prefix[static_cast<std::size_t>(i)];
        }
      }
    }
    SignMatrix sorted = sort_columns(SignMatrix(k, cols, std::move(entries)));
    for (int i = 0; i < k; ++i) {
      for (int j = i + 1; j < k; ++j) {
        if (std::equal(sorted.row(i).begin(), sorted.row(i).end(), sorted.row(j).begin())) return true;
      }
    }
    if (canonical_matrix(sorted) != sorted) return true;
    alive_ = sink_(sorted);
    return alive_;
  }

  const EnumerationScope& scope_;
  FirstRow first_;
  const MatrixSink& sink_;
  std::array<int, kMaxEnumRows> weights_{};
  bool alive_ = true;
};

}  // namespace

std::vector<FirstRow> first_row_classes(const EnumerationScope& scope) {
  validate(scope);
  std::vector<FirstRow> out;
  for (int minus = 0; minus <= scope.max_weight; ++minus) {
    for (int plus = 0; minus + plus <= scope.max_weight; ++plus) {
      const int w = minus + plus;
      if (w >= scope.min_weight && w <= scope.max_cols) out.push_back({minus, plus});
    }
  }
  return out;
}

bool enumerate_first_row(const EnumerationScope& scope, FirstRow first, const MatrixSink& sink) {
  validate(scope);
  return Generator(scope, first, sink).run();
}

bool enumerate_reduced_matrices(const EnumerationScope& scope, const MatrixSink& sink) {
  for (FirstRow f : first_row_classes(scope)) {
    if (!enumerate_first_row(scope, f, sink)) return false;
  }
  return true;
}

std::vector<SignMatrix> collect_reduced_matrices(const EnumerationScope& scope) {
  std::vector<SignMatrix> out;
  enumerate_reduced_matrices(scope, [&](const SignMatrix& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

}  // namespace offord
