#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "offord/sign_matrix.hpp"

namespace offord {

/// The set of 0/1 vectors b with b.A^T a 0/1 vector, or just its size.
struct OmegaResult {
  std::uint64_t count = 0;
  std::optional<std::vector<BitVector>> members;
};

struct StarResult {
  SignMatrix matrix;  // zero columns removed, order kept
  int removed = 0;    // |Omega(A)| = 2^removed * |Omega(matrix)|
};

StarResult star(const SignMatrix& a);

// Every row has weight >= 2 and no two rows coincide.
bool is_reduced(const SignMatrix& a);

// Emitted when a weight-one row carries an entry other than 1: that row alone
// caps |Omega| at 2^(l-1).
struct ShortCircuit {
  int row = 0;
  std::uint64_t bound = 0;
};

class NormalizeOutcome {
 public:
  explicit NormalizeOutcome(SignMatrix reduced) : value_(std::move(reduced)) {}
  explicit NormalizeOutcome(ShortCircuit cert) : value_(cert) {}

  bool short_circuited() const { return std::holds_alternative<ShortCircuit>(value_); }
  const SignMatrix& reduced() const { return std::get<SignMatrix>(value_); }
  const ShortCircuit& certificate() const { return std::get<ShortCircuit>(value_); }

 private:
  std::variant<SignMatrix, ShortCircuit> value_;
};

// Drops duplicate rows, zero rows and rows equal to a unit vector; a weight-one
// row with any other non-zero value short-circuits instead. Row order is kept.
NormalizeOutcome normalize_to_reduced(const SignMatrix& a);

// Reference path: all 2^l vectors, plain integer inner products, any entries.
// Members come sorted by their printed strings.
OmegaResult omega_enumerate(const SignMatrix& a, bool collect_members = false);

// Popcount path over the derived row masks; {-1,0,1} entries only.
std::uint64_t omega_count_fast(const SignMatrix& a);

}  // namespace offord
