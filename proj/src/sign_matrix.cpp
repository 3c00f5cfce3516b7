#include "offord/sign_matrix.hpp"

#include <bit>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>

#include "offord/error.hpp"

namespace offord {

BitVector::BitVector(int length, Mask bits) : length_(length), bits_(bits) {
  if (length < 0 || length > kMaskCap) {
    throw CapacityError("bit vector length " + std::to_string(length) + " exceeds " +
                        std::to_string(kMaskCap));
  }
  if ((bits & ~low_bits(length)) != 0) {
    throw DomainError("bit vector has bits above its length");
  }
}

int BitVector::weight() const { return std::popcount(bits_); }

std::string BitVector::to_string() const {
  std::string s(static_cast<std::size_t>(length_), '0');
  for (int i = 0; i < length_; ++i) {
    if ((*this)[i]) s[static_cast<std::size_t>(i)] = '1';
  }
  return s;
}

BitVector BitVector::parse(std::string_view text) {
  Mask bits = 0;
  if (text.size() > static_cast<std::size_t>(kMaskCap)) {
    throw CapacityError("bit vector longer than " + std::to_string(kMaskCap));
  }
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= Mask{1} << i;
    } else if (text[i] != '0') {
      throw FormatError("bit vector characters must be '0' or '1'");
    }
  }
  return {static_cast<int>(text.size()), bits};
}

// Orders like the printed strings.
std::strong_ordering operator<=>(const BitVector& a, const BitVector& b) {
  return a.to_string() <=> b.to_string();
}

SignMatrix::SignMatrix(int rows, int cols, std::vector<int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw PreconditionError("matrix dimensions must be non-negative");
  if (cols > kMaskCap) {
    throw CapacityError("matrix has " + std::to_string(cols) + " columns; limit is " +
                        std::to_string(kMaskCap));
  }
  if (entries_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw PreconditionError("entry count does not match dimensions");
  }
  for (int e : entries_) {
    if (e > kEntryCap || e < -kEntryCap) {
      throw DomainError("entry " + std::to_string(e) + " exceeds magnitude 2^20");
    }
  }
  derive();
}

namespace {

std::vector<int> flatten(const std::vector<std::vector<int>>& rows, int& cols) {
  cols = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  std::vector<int> flat;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols) throw PreconditionError("ragged matrix rows");
    flat.insert(flat.end(), r.begin(), r.end());
  }
  return flat;
}

std::vector<std::vector<int>> to_vectors(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> out;
  for (auto r : rows) out.emplace_back(r);
  return out;
}

}  // namespace

SignMatrix::SignMatrix(const std::vector<std::vector<int>>& rows) : SignMatrix(0, 0, {}) {
  int cols = 0;
  auto flat = flatten(rows, cols);
  *this = SignMatrix(static_cast<int>(rows.size()), cols, std::move(flat));
}

SignMatrix::SignMatrix(std::initializer_list<std::initializer_list<int>> rows)
    : SignMatrix(to_vectors(rows)) {}

void SignMatrix::derive() {
  sign_ = true;
  for (int e : entries_) {
    if (e < -1 || e > 1) {
      sign_ = false;
      break;
    }
  }
  plus_.clear();
  minus_.clear();
  if (!sign_) return;
  plus_.assign(static_cast<std::size_t>(rows_), 0);
  minus_.assign(static_cast<std::size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      int e = (*this)(i, j);
      if (e == 1) plus_[static_cast<std::size_t>(i)] |= Mask{1} << j;
      if (e == -1) minus_[static_cast<std::size_t>(i)] |= Mask{1} << j;
    }
  }
}

Mask SignMatrix::plus_mask(int i) const {
  if (!sign_) throw DomainError("row masks require entries in {-1,0,1}");
  return plus_.at(static_cast<std::size_t>(i));
}

Mask SignMatrix::minus_mask(int i) const {
  if (!sign_) throw DomainError("row masks require entries in {-1,0,1}");
  return minus_.at(static_cast<std::size_t>(i));
}

SignMatrix SignMatrix::transpose() const {
  std::vector<int> t(entries_.size());
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
  }
  return {cols_, rows_, std::move(t)};
}

SignMatrix SignMatrix::select_rows(std::span<const int> order) const {
  std::vector<int> out;
  out.reserve(order.size() * static_cast<std::size_t>(cols_));
  for (int i : order) {
    auto r = row(i);
    out.insert(out.end(), r.begin(), r.end());
  }
  return {static_cast<int>(order.size()), cols_, std::move(out)};
}

SignMatrix SignMatrix::select_cols(std::span<const int> order) const {
  std::vector<int> out;
  out.reserve(order.size() * static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i) {
    for (int j : order) out.push_back((*this)(i, j));
  }
  return {rows_, static_cast<int>(order.size()), std::move(out)};
}

int weight(std::span<const int> v) {
  int w = 0;
  for (int x : v) w += x != 0;
  return w;
}

namespace {

// Next meaningful line with comments stripped; false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    bool blank = true;
    for (char c : line) {
      if (!std::isspace(static_cast<unsigned char>(c))) {
        blank = false;
        break;
      }
    }
    if (!blank) return true;
  }
  return false;
}

std::vector<long long> parse_ints(const std::string& line, int lineno) {
  std::istringstream ss(line);
  std::vector<long long> out;
  std::string tok;
  while (ss >> tok) {
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      throw FormatError("not an integer: '" + tok + "'", lineno);
    }
    if (used != tok.size()) throw FormatError("not an integer: '" + tok + "'", lineno);
    out.push_back(v);
  }
  return out;
}

}  // namespace

SignMatrix read_matrix(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_line(in, line, lineno)) throw FormatError("empty matrix input");
  auto header = parse_ints(line, lineno);
  if (header.size() != 2 || header[0] < 0 || header[1] < 0) {
    throw FormatError("header must be 'k l' with non-negative integers", lineno);
  }
  if (header[1] > kMaskCap) {
    throw CapacityError("matrix has " + std::to_string(header[1]) + " columns; limit is " +
                        std::to_string(kMaskCap));
  }
  const int k = static_cast<int>(header[0]);
  const int l = static_cast<int>(header[1]);
  std::vector<int> entries;
  entries.reserve(static_cast<std::size_t>(k) * l);
  for (int i = 0; i < k; ++i) {
    if (!next_line(in, line, lineno)) {
      throw FormatError("expected " + std::to_string(k) + " rows, got " + std::to_string(i), lineno);
    }
    auto vals = parse_ints(line, lineno);
    if (static_cast<int>(vals.size()) != l) {
      throw FormatError("expected " + std::to_string(l) + " entries, got " +
                            std::to_string(vals.size()),
                        lineno);
    }
    for (long long v : vals) {
      if (v > kEntryCap || v < -kEntryCap) throw DomainError("entry exceeds magnitude 2^20");
      entries.push_back(static_cast<int>(v));
    }
  }
  if (next_line(in, line, lineno)) throw FormatError("trailing content after matrix", lineno);
  return {k, l, std::move(entries)};
}

SignMatrix parse_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const SignMatrix& m) {
  out << m.rows() << ' ' << m.cols() << '\n';
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

std::string to_text(const SignMatrix& m) {
  std::ostringstream ss;
  write_matrix(ss, m);
  return ss.str();
}

std::string to_compact(const SignMatrix& m) {
  std::string s;
  for (int i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
  }
  return s;
}

}  // namespace offord
