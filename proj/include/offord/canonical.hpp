#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>

#include "offord/sign_matrix.hpp"

namespace offord {

/// Byte string naming a row/column permutation class of matrices. Byte order
/// agrees with the row-major lexicographic order of the entries.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  std::string hex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend std::strong_ordering operator<=>(const CanonicalKey& a, const CanonicalKey& b) {
    return a.bytes_.compare(b.bytes_) <=> 0;
  }

 private:
  std::string bytes_;
};

// Key of the matrix exactly as given (no minimisation).
CanonicalKey encode_key(const SignMatrix& m);

// The lexicographically least row-major entry sequence over all row and
// column permutations.
SignMatrix canonical_matrix(const SignMatrix& m);
CanonicalKey canonical_form(const SignMatrix& m);

// Columns sorted as tuples (row 0 most significant). For a fixed row order
// this is the least arrangement.
SignMatrix sort_columns(const SignMatrix& m);

bool equivalent(const SignMatrix& a, const SignMatrix& b);

}  // namespace offord

template <>
struct std::hash<offord::CanonicalKey> {
  std::size_t operator()(const offord::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
