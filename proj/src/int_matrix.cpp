#include "offord/int_matrix.hpp"

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "offord/error.hpp"

namespace offord {

IntMatrix::IntMatrix(int rows, int cols, std::int64_t fill) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw PreconditionError("matrix dimensions must be non-negative");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), fill);
}

IntMatrix::IntMatrix(int rows, int cols, std::vector<std::int64_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw PreconditionError("matrix dimensions must be non-negative");
  if (data_.size() != static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw PreconditionError("entry count does not match dimensions");
  }
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = static_cast<int>(rows.size());
  cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != cols_) throw PreconditionError("ragged matrix rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool IntMatrix::is_binary() const {
  for (auto e : data_) {
    if (e != 0 && e != 1) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

IntMatrix IntMatrix::stacked(const IntMatrix& below) const {
  if (below.cols_ != cols_ && rows_ > 0 && below.rows_ > 0) {
    throw PreconditionError("stacked matrices need equal column counts");
  }
  IntMatrix out = rows_ > 0 ? *this : IntMatrix(0, below.cols_);
  out.rows_ += below.rows_;
  out.data_.insert(out.data_.end(), below.data_.begin(), below.data_.end());
  return out;
}

IntMatrix IntMatrix::beside(const IntMatrix& right) const {
  if (right.rows_ != rows_) throw PreconditionError("joined matrices need equal row counts");
  IntMatrix out(rows_, cols_ + right.cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out(i, j) = (*this)(i, j);
    for (int j = 0; j < right.cols_; ++j) out(i, cols_ + j) = right(i, j);
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shapes differ");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("matrix shapes differ");
  IntMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

std::string to_string(RankMethod method) {
  return method == RankMethod::FractionFree64 ? "fraction-free-64" : "arbitrary-precision";
}

namespace {

using BigInt = boost::multiprecision::cpp_int;

// Bareiss elimination with column skipping. Every stored value is a minor of
// the input, so each division is exact.
std::optional<int> bareiss_64(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::int64_t> a = m.entries();
  auto at = [&](int i, int j) -> std::int64_t& { return a[static_cast<std::size_t>(i) * cols + j]; };
  std::int64_t prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const __int128 p = at(r, c);
    for (int i = r + 1; i < rows; ++i) {
      const __int128 f = at(i, c);
      for (int j = c + 1; j < cols; ++j) {
        const __int128 v = (p * at(i, j) - f * at(r, j)) / prev;
        if (v > INT64_MAX || v < INT64_MIN) return std::nullopt;
        at(i, j) = static_cast<std::int64_t>(v);
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

int bareiss_big(const IntMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<BigInt> a(m.entries().begin(), m.entries().end());
  auto at = [&](int i, int j) -> BigInt& { return a[static_cast<std::size_t>(i) * cols + j]; };
  BigInt prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j) {
        at(i, j) = (at(r, c) * at(i, j) - at(i, c) * at(r, j)) / prev;
      }
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1U) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1U;
  }
  return r;
}

}  // namespace

RankResult rank_exact(const IntMatrix& m) {
  if (auto r = bareiss_64(m)) return {*r, RankMethod::FractionFree64};
  return rank_exact_bigint(m);
}

RankResult rank_exact_bigint(const IntMatrix& m) { return {bareiss_big(m), RankMethod::ArbitraryPrecision}; }

int rank_mod_p(const IntMatrix& m, std::uint64_t p) {
  if (p < 2 || p >= (std::uint64_t{1} << 62)) throw PreconditionError("modulus must lie in [2, 2^62)");
  const int rows = m.rows();
  const int cols = m.cols();
  std::vector<std::uint64_t> a(m.entries().size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t v = m.entries()[i] % static_cast<std::int64_t>(p);
    a[i] = static_cast<std::uint64_t>(v < 0 ? v + static_cast<std::int64_t>(p) : v);
  }
  auto at = [&](int i, int j) -> std::uint64_t& { return a[static_cast<std::size_t>(i) * cols + j]; };
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i) {
      if (at(i, c) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != r) {
      for (int j = c; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const std::uint64_t inv = pow_mod(at(r, c), p - 2, p);
    for (int i = r + 1; i < rows; ++i) {
      if (at(i, c) == 0) continue;
      const std::uint64_t f = mul_mod(at(i, c), inv, p);
      for (int j = c; j < cols; ++j) {
        at(i, j) = (at(i, j) + p - mul_mod(f, at(r, j), p)) % p;
      }
    }
    ++r;
  }
  return r;
}

bool one_in_rowspace(const IntMatrix& m) {
  if (m.cols() == 0) return true;
  return rank_exact(m.stacked(IntMatrix::ones(1, m.cols()))).rank == rank_exact(m).rank;
}

IntMatrix read_bipartite_matrix(std::istream& in) {
  std::string line;
  int line_no = 0;
  int p = -1;
  int q = -1;
  std::vector<std::int64_t> entries;
  int rows_read = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;
    if (p < 0) {
      if (first != "bipartite" || !(ls >> p >> q) || p < 0 || q < 0) {
        throw FormatError("expected header \"bipartite p q\"", line_no);
      }
      std::string extra;
      if (ls >> extra) throw FormatError("trailing text after header", line_no);
      continue;
    }
    if (rows_read == p) throw FormatError("more than " + std::to_string(p) + " rows", line_no);
    std::istringstream rs(line);
    std::string tok;
    int count = 0;
    while (rs >> tok) {
      if (tok != "0" && tok != "1") throw FormatError("entries must be 0 or 1", line_no);
      entries.push_back(tok == "1");
      ++count;
    }
    if (count != q) {
      throw FormatError("row has " + std::to_string(count) + " entries, expected " + std::to_string(q), line_no);
    }
    ++rows_read;
  }
  if (p < 0) throw FormatError("missing \"bipartite p q\" header", line_no);
  if (rows_read != p) throw FormatError("expected " + std::to_string(p) + " rows", line_no);
  return {p, q, std::move(entries)};
}

void write_bipartite_matrix(std::ostream& out, const IntMatrix& b) {
  out << "bipartite " << b.rows() << ' ' << b.cols() << '\n';
  for (int i = 0; i < b.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) out << (j ? " " : "") << b(i, j);
    out << '\n';
  }
}

}  // namespace offord
