#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace offord {

// Widest column count any subset enumeration accepts; one 32-bit word per mask.
inline constexpr int kMaskCap = 30;
// Entries are bounded so that a full inner product never leaves 64 bits.
inline constexpr std::int64_t kEntryCap = std::int64_t{1} << 20;

using Mask = std::uint32_t;

inline constexpr Mask low_bits(int n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

/// A 0/1 vector of length <= kMaskCap packed into a word. Bit i holds
/// component i+1; the text form prints component 1 first ("0110").
class BitVector {
 public:
  BitVector(int length, Mask bits);

  int length() const { return length_; }
  Mask bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1U; }
  int weight() const;

  std::string to_string() const;
  static BitVector parse(std::string_view text);

  friend bool operator==(const BitVector&, const BitVector&) = default;
  friend std::strong_ordering operator<=>(const BitVector& a, const BitVector& b);

 private:
  int length_;
  Mask bits_;
};

/// Integer matrix with small entries. Row masks of the +1 and -1 positions
/// are derived at construction when every entry lies in {-1, 0, 1}.
class SignMatrix {
 public:
  SignMatrix(int rows, int cols, std::vector<int> entries);
  explicit SignMatrix(const std::vector<std::vector<int>>& rows);
  SignMatrix(std::initializer_list<std::initializer_list<int>> rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i) * cols_ + j]; }
  std::span<const int> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i) * cols_, static_cast<std::size_t>(cols_)};
  }
  const std::vector<int>& entries() const { return entries_; }

  // True when every entry is -1, 0 or 1.
  bool is_sign() const { return sign_; }
  // Throw DomainError unless is_sign().
  Mask plus_mask(int i) const;
  Mask minus_mask(int i) const;

  SignMatrix transpose() const;
  SignMatrix select_rows(std::span<const int> order) const;
  SignMatrix select_cols(std::span<const int> order) const;

  friend bool operator==(const SignMatrix& a, const SignMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void derive();

  int rows_;
  int cols_;
  std::vector<int> entries_;
  bool sign_ = false;
  std::vector<Mask> plus_;
  std::vector<Mask> minus_;
};

// Number of non-zero components.
int weight(std::span<const int> v);

// Text format: "k l" header, then k rows of l integers. Blank lines and
// '#' comments are skipped.
SignMatrix read_matrix(std::istream& in);
SignMatrix parse_matrix(std::string_view text);
void write_matrix(std::ostream& out, const SignMatrix& m);
std::string to_text(const SignMatrix& m);
// Rows joined by ';', e.g. "1 -1 0;1 0 -1". Used when embedding matrices in reports.
std::string to_compact(const SignMatrix& m);

}  // namespace offord
