#include "offord/omega.hpp"

#include <algorithm>

#include <bit>
#include <set>

#include "offord/error.hpp"

namespace offord {

StarResult star(const SignMatrix& a) {
  std::vector<int> keep;
  for (int j = 0; j < a.cols(); ++j) {
    bool zero = true;
    for (int i = 0; i < a.rows() && zero; ++i) zero = a(i, j) == 0;
    if (!zero) keep.push_back(j);
  }
  return {a.select_cols(keep), a.cols() - static_cast<int>(keep.size())};
}

bool is_reduced(const SignMatrix& a) {
  std::set<std::vector<int>> seen;
  for (int i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    if (weight(r) < 2) return false;
    if (!seen.emplace(r.begin(), r.end()).second) return false;
  }
  return true;
}

NormalizeOutcome normalize_to_reduced(const SignMatrix& a) {
  for (int i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    if (weight(r) != 1) continue;
    for (int x : r) {
      if (x != 0 && x != 1) {
        return NormalizeOutcome(ShortCircuit{i, std::uint64_t{1} << (a.cols() - 1)});
      }
    }
  }
  std::vector<int> keep;
  std::set<std::vector<int>> seen;
  for (int i = 0; i < a.rows(); ++i) {
    auto r = a.row(i);
    if (weight(r) <= 1) continue;
    if (seen.emplace(r.begin(), r.end()).second) keep.push_back(i);
  }
  return NormalizeOutcome(a.select_rows(keep));
}

OmegaResult omega_enumerate(const SignMatrix& a, bool collect_members) {
  const int l = a.cols();
  if (l > kMaskCap) throw CapacityError("omega enumeration limited to 30 columns");
  OmegaResult result;
  if (collect_members) result.members.emplace();
  const std::uint64_t total = std::uint64_t{1} << l;
  for (std::uint64_t b = 0; b < total; ++b) {
    bool ok = true;
    for (int i = 0; i < a.rows() && ok; ++i) {
      std::int64_t dot = 0;
      for (int j = 0; j < l; ++j) {
        if ((b >> j) & 1U) dot += a(i, j);
      }
      ok = dot == 0 || dot == 1;
    }
    if (!ok) continue;
    ++result.count;
    if (collect_members) result.members->emplace_back(l, static_cast<Mask>(b));
  }
  if (collect_members) {
    // String order: component 1 is the most significant.
    auto reversed = [l](Mask m) {
      Mask r = 0;
      for (int j = 0; j < l; ++j) r |= ((m >> j) & 1U) << (l - 1 - j);
      return r;
    };
    std::sort(result.members->begin(), result.members->end(),
              [&](const BitVector& x, const BitVector& y) { return reversed(x.bits()) < reversed(y.bits()); });
  }
  return result;
}

std::uint64_t omega_count_fast(const SignMatrix& a) {
  if (!a.is_sign()) throw DomainError("fast omega count requires entries in {-1,0,1}");
  const int l = a.cols();
  if (l > kMaskCap) throw CapacityError("omega enumeration limited to 30 columns");
  const int k = a.rows();
  std::vector<Mask> plus(static_cast<std::size_t>(k));
  std::vector<Mask> minus(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    plus[static_cast<std::size_t>(i)] = a.plus_mask(i);
    minus[static_cast<std::size_t>(i)] = a.minus_mask(i);
  }
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << l;
  for (std::uint64_t wide = 0; wide < total; ++wide) {
    const Mask b = static_cast<Mask>(wide);
    bool ok = true;
    for (int i = 0; i < k; ++i) {
      const int d = std::popcount(b & plus[static_cast<std::size_t>(i)]) -
                    std::popcount(b & minus[static_cast<std::size_t>(i)]);
      if (d != 0 && d != 1) {
        ok = false;
        break;
      }
    }
    count += ok;
  }
  return count;
}

}  // namespace offord
