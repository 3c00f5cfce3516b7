#include "offord/canonical.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace offord {

namespace {

void put_entry(std::string& out, int e) {
  // Offset into [0, 2^21] and write big-endian so byte order is numeric order.
  const auto u = static_cast<std::uint32_t>(e + static_cast<int>(kEntryCap));
  out.push_back(static_cast<char>((u >> 16) & 0xFF));
  out.push_back(static_cast<char>((u >> 8) & 0xFF));
  out.push_back(static_cast<char>(u & 0xFF));
}

std::string header(int rows, int cols) {
  std::string s;
  s.push_back(static_cast<char>(rows & 0xFF));
  s.push_back(static_cast<char>(cols & 0xFF));
  return s;
}

// Branch-and-bound over row orders. Each level appends a row and refines the
// column blocks by that row's entries; the prefix of the output is then fixed,
// so a prefix larger than the incumbent's closes the branch.
class Minimiser {
 public:
  explicit Minimiser(const SignMatrix& m) : m_(m), used_(static_cast<std::size_t>(m.rows()), false) {}

  SignMatrix run() {
    std::vector<int> order(static_cast<std::size_t>(m_.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> bounds{0, m_.cols()};
    rows_.clear();
    out_.clear();
    descend(order, bounds);
    return {m_.rows(), m_.cols(), *best_};
  }

 private:
  void descend(const std::vector<int>& order, const std::vector<int>& bounds) {
    const int depth = static_cast<int>(rows_.size());
    const std::size_t width = static_cast<std::size_t>(m_.cols());
    if (depth == m_.rows()) {
      best_ = out_;
      return;
    }
    for (int r = 0; r < m_.rows(); ++r) {
      if (used_[static_cast<std::size_t>(r)]) continue;
      std::vector<int> next = order;
      std::vector<int> next_bounds{0};
      for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        auto first = next.begin() + bounds[b];
        auto last = next.begin() + bounds[b + 1];
        std::stable_sort(first, last, [&](int x, int y) { return m_(r, x) < m_(r, y); });
        for (int p = bounds[b] + 1; p < bounds[b + 1]; ++p) {
          if (m_(r, next[static_cast<std::size_t>(p)]) != m_(r, next[static_cast<std::size_t>(p - 1)])) {
            next_bounds.push_back(p);
          }
        }
        next_bounds.push_back(bounds[b + 1]);
      }
      const std::size_t mark = out_.size();
      for (int c : next) out_.push_back(m_(r, c));
      if (best_) {
        const auto prefix_end = static_cast<std::ptrdiff_t>((depth + 1) * width);
        auto cmp = std::lexicographical_compare_three_way(out_.begin(), out_.end(), best_->begin(),
                                                          best_->begin() + prefix_end);
        if (cmp > 0) {
          out_.resize(mark);
          continue;
        }
      }
      used_[static_cast<std::size_t>(r)] = true;
      rows_.push_back(r);
      descend(next, next_bounds);
      rows_.pop_back();
      used_[static_cast<std::size_t>(r)] = false;
      out_.resize(mark);
    }
  }

  const SignMatrix& m_;
  std::vector<bool> used_;
  std::vector<int> rows_;
  std::vector<int> out_;
  std::optional<std::vector<int>> best_;
};

}  // namespace

std::string CanonicalKey::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s;
  for (unsigned char c : bytes_) {
    s.push_back(digits[c >> 4]);
    s.push_back(digits[c & 0xF]);
  }
  return s;
}

CanonicalKey encode_key(const SignMatrix& m) {
  std::string s = header(m.rows(), m.cols());
  for (int e : m.entries()) put_entry(s, e);
  return CanonicalKey(std::move(s));
}

SignMatrix sort_columns(const SignMatrix& m) {
  std::vector<int> order(static_cast<std::size_t>(m.cols()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    for (int i = 0; i < m.rows(); ++i) {
      if (m(i, x) != m(i, y)) return m(i, x) < m(i, y);
    }
    return false;
  });
  return m.select_cols(order);
}

SignMatrix canonical_matrix(const SignMatrix& m) {
  if (m.rows() == 0) return m;
  return Minimiser(m).run();
}

CanonicalKey canonical_form(const SignMatrix& m) { return encode_key(canonical_matrix(m)); }

bool equivalent(const SignMatrix& a, const SignMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace offord
