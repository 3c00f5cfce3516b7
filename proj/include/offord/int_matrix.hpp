#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace offord {

// Dense row-major integer matrix without size caps.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols, std::int64_t fill = 0);
  IntMatrix(int rows, int cols, std::vector<std::int64_t> entries);
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(int n);
  static IntMatrix ones(int rows, int cols) { return {rows, cols, 1}; }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& operator()(int i, int j) { return data_[index(i, j)]; }
  std::int64_t operator()(int i, int j) const { return data_[index(i, j)]; }
  std::span<const std::int64_t> row(int i) const {
    return {data_.data() + index(i, 0), static_cast<std::size_t>(cols_)};
  }
  const std::vector<std::int64_t>& entries() const { return data_; }

  bool is_symmetric() const;
  bool is_binary() const;
  IntMatrix transpose() const;
  // Rows of `below` appended under this matrix; column counts must agree.
  IntMatrix stacked(const IntMatrix& below) const;
  IntMatrix beside(const IntMatrix& right) const;

  friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::int64_t> data_;
};

enum class RankMethod { FractionFree64, ArbitraryPrecision };

std::string to_string(RankMethod method);

struct RankResult {
  int rank = 0;
  RankMethod method = RankMethod::FractionFree64;
};

// Exact rank over the rationals. Bareiss elimination in 64 bits; on the first
// overflow the whole computation restarts with big integers.
RankResult rank_exact(const IntMatrix& m);
// Same, always on the big-integer path.
RankResult rank_exact_bigint(const IntMatrix& m);

// Rank over GF(p); p must be a prime below 2^62.
int rank_mod_p(const IntMatrix& m, std::uint64_t p);

// Whether the all-ones row vector is a rational combination of the rows.
bool one_in_rowspace(const IntMatrix& m);

// "bipartite p q" header then p rows of q entries; '#' comments and blank lines skipped.
IntMatrix read_bipartite_matrix(std::istream& in);
void write_bipartite_matrix(std::ostream& out, const IntMatrix& b);

}  // namespace offord
