#include "offord/extremal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "offord/error.hpp"

namespace offord {

ExtremalFamily parse_extremal_family(const std::string& text) {
  if (text == "B") return ExtremalFamily::B;
  if (text == "Bprime" || text == "B'") return ExtremalFamily::Bprime;
  if (text == "D") return ExtremalFamily::D;
  throw PreconditionError("family must be B, Bprime or D");
}

std::string to_string(ExtremalFamily family) {
  switch (family) {
    case ExtremalFamily::B: return "B";
    case ExtremalFamily::Bprime: return "Bprime";
    case ExtremalFamily::D: return "D";
  }
  return "?";
}

IntMatrix all_binary_columns(int l) {
  if (l < 0) throw PreconditionError("l must be non-negative");
  if (l > 20) throw CapacityError("l = " + std::to_string(l) + " is too large");
  const int q = 1 << l;
  IntMatrix m(l, q);
  for (int c = 0; c < q; ++c) {
    for (int i = 0; i < l; ++i) m(i, c) = (c >> i) & 1;
  }
  return m;
}

BipartiteGraph build_extremal(ExtremalFamily family, int l) {
  if (l < 1) throw PreconditionError("l must be at least 1");
  if (l > 12) throw CapacityError("extremal constructions are limited to l <= 12");
  IntMatrix all = all_binary_columns(l);
  switch (family) {
    case ExtremalFamily::B: return BipartiteGraph(all);
    case ExtremalFamily::Bprime: {
      IntMatrix m(l, (1 << l) - 1);
      for (int i = 0; i < l; ++i) {
        for (int c = 1; c < (1 << l); ++c) m(i, c - 1) = all(i, c);
      }
      return BipartiteGraph(m);
    }
    case ExtremalFamily::D: return BipartiteGraph(all.stacked(IntMatrix::ones(l, 1 << l) - all));
  }
  throw PreconditionError("unknown family");
}

OrderFamily parse_order_family(const std::string& text) {
  std::string t = text;
  std::replace(t.begin(), t.end(), '-', '_');
  if (t == "kotlov_lovasz_m" || t == "m") return OrderFamily::KotlovLovaszM;
  if (t == "bipartite_rank") return OrderFamily::BipartiteRank;
  if (t == "cobipartite_corank") return OrderFamily::CobipartiteCorank;
  throw PreconditionError("unknown order family " + text);
}

std::string to_string(OrderFamily family) {
  switch (family) {
    case OrderFamily::KotlovLovaszM: return "kotlov_lovasz_m";
    case OrderFamily::BipartiteRank: return "bipartite_rank";
    case OrderFamily::CobipartiteCorank: return "cobipartite_corank";
  }
  return "?";
}

std::int64_t extremal_order(OrderFamily family, int r) {
  if (r > 120) throw CapacityError("r = " + std::to_string(r) + " is too large");
  auto pow2 = [](int e) { return std::int64_t{1} << e; };
  switch (family) {
    case OrderFamily::KotlovLovaszM:
      if (r < 2) throw PreconditionError("m(r) needs r >= 2");
      if (r % 2 == 0) return pow2(r / 2 + 1) - 2;
      return 5 * pow2((r - 3) / 2) - 2;
    case OrderFamily::BipartiteRank:
      if (r < 2) throw PreconditionError("bipartite rank order needs r >= 2");
      if (r % 2 != 0) throw DomainError("a bipartite graph has even rank; r = " + std::to_string(r) + " is odd");
      return pow2(r / 2) + r / 2 - 1;
    case OrderFamily::CobipartiteCorank:
      if (r < 3) throw PreconditionError("cobipartite corank order needs r >= 3");
      if (r % 2 == 0) return pow2(r / 2 - 1) + r - 2;
      return pow2((r - 1) / 2) + (r - 1) / 2;
  }
  throw PreconditionError("unknown order family");
}

IntMatrix template_matrix(int l) {
  if (l < 1) throw PreconditionError("l must be at least 1");
  if (l > 13) throw CapacityError("template matrix is limited to l <= 13");
  IntMatrix top = all_binary_columns(l - 1);
  const int q = top.cols();
  return top.stacked(IntMatrix::ones(1, q)).stacked(IntMatrix::ones(l - 1, q) - top);
}

namespace {

void check_embed_input(const IntMatrix& b) {
  if (!b.is_binary()) throw PreconditionError("matrix entries must be 0 or 1");
  for (int i = 0; i < b.rows(); ++i) {
    bool zero = true;
    for (auto e : b.row(i)) zero = zero && e == 0;
    if (zero) throw PreconditionError("row " + std::to_string(i) + " is zero");
    for (int k = i + 1; k < b.rows(); ++k) {
      if (std::equal(b.row(i).begin(), b.row(i).end(), b.row(k).begin())) {
        throw PreconditionError("rows " + std::to_string(i) + " and " + std::to_string(k) + " are identical");
      }
    }
  }
  for (int j = 0; j < b.cols(); ++j) {
    for (int k = j + 1; k < b.cols(); ++k) {
      bool same = true;
      for (int i = 0; i < b.rows() && same; ++i) same = b(i, j) == b(i, k);
      if (same) {
        throw PreconditionError("columns " + std::to_string(j) + " and " + std::to_string(k) + " are identical");
      }
    }
  }
}

class Embedder {
 public:
  Embedder(const IntMatrix& b, int coords) : b_(b), coords_(coords) {
    pattern_.assign(static_cast<std::size_t>(b.cols()), 0);
    plus_.assign(static_cast<std::size_t>(coords), -1);
    minus_.assign(static_cast<std::size_t>(coords), -1);
  }

  bool run() { return place(0); }

 private:
  bool place(int r) {
    if (r == b_.rows()) return true;
    const auto row = b_.row(r);
    if (!one_used_ && std::all_of(row.begin(), row.end(), [](auto e) { return e == 1; })) {
      one_used_ = true;
      if (place(r + 1)) return true;
      one_used_ = false;
    }
    for (int i = 0; i < used_; ++i) {
      if (plus_[i] < 0 && matches(r, i, false)) {
        plus_[i] = r;
        if (place(r + 1)) return true;
        plus_[i] = -1;
      }
      if (minus_[i] < 0 && matches(r, i, true)) {
        minus_[i] = r;
        if (place(r + 1)) return true;
        minus_[i] = -1;
      }
    }
    if (used_ < coords_) {
      const int i = used_++;
      plus_[i] = r;
      for (int c = 0; c < b_.cols(); ++c) pattern_[c] |= static_cast<std::uint32_t>(b_(r, c)) << i;
      if (groups_fit() && place(r + 1)) return true;
      for (int c = 0; c < b_.cols(); ++c) pattern_[c] &= ~(std::uint32_t{1} << i);
      plus_[i] = -1;
      --used_;
    }
    return false;
  }

  // Coordinate i is already fixed by its other sign.
  bool matches(int r, int i, bool negated) const {
    for (int c = 0; c < b_.cols(); ++c) {
      const int bit = static_cast<int>((pattern_[c] >> i) & 1U);
      if ((negated ? 1 - b_(r, c) : b_(r, c)) != bit) return false;
    }
    return true;
  }

  // Columns agreeing on every fixed coordinate need distinct completions.
  bool groups_fit() const {
    const std::int64_t room = std::int64_t{1} << (coords_ - used_);
    std::map<std::uint32_t, std::int64_t> count;
    for (auto p : pattern_) {
      if (++count[p] > room) return false;
    }
    return true;
  }

  const IntMatrix& b_;
  int coords_;
  int used_ = 0;
  bool one_used_ = false;
  std::vector<std::uint32_t> pattern_;
  std::vector<int> plus_;
  std::vector<int> minus_;
};

}  // namespace

bool embeds_in_template(const IntMatrix& b, int l) {
  if (l < 1) throw PreconditionError("l must be at least 1");
  if (l > 31) throw CapacityError("l = " + std::to_string(l) + " is too large");
  check_embed_input(b);
  if (b.rows() > 2 * l - 1) return false;
  if (static_cast<std::int64_t>(b.cols()) > (std::int64_t{1} << (l - 1))) return false;
  return Embedder(b, l - 1).run();
}

IntMatrix exceptional_basis(const std::vector<int>& x) {
  if (x.size() != 6) throw PreconditionError("x must have length 6");
  int w = 0;
  for (int v : x) {
    if (v != 0 && v != 1) throw PreconditionError("x must be a 0/1 vector");
    w += v;
  }
  if (w != 2 && w != 3) throw PreconditionError("x must have weight 2 or 3");
  IntMatrix xi(1, 6);
  IntMatrix cx(1, 6);
  for (int j = 0; j < 6; ++j) {
    xi(0, j) = x[j];
    cx(0, j) = 1 - x[j];
  }
  const IntMatrix id = IntMatrix::identity(6);
  return id.stacked(xi).stacked(IntMatrix::ones(1, 6)).stacked(IntMatrix::ones(6, 6) - id).stacked(cx);
}

std::optional<std::vector<int>> exceptional_parameter(const IntMatrix& b) {
  if (b.rows() != 15) return std::nullopt;
  const int rb = rank_exact(b).rank;
  if (rb != 6) return std::nullopt;
  for (int mask = 0; mask < 64; ++mask) {
    const int w = __builtin_popcount(static_cast<unsigned>(mask));
    if (w != 2 && w != 3) continue;
    std::vector<int> x(6);
    for (int j = 0; j < 6; ++j) x[j] = (mask >> j) & 1;
    if (rank_exact(b.beside(exceptional_basis(x))).rank == 6) return x;
  }
  return std::nullopt;
}

}  // namespace offord
