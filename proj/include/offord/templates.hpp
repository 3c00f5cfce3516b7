#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "offord/canonical.hpp"
#include "offord/sign_matrix.hpp"

namespace offord {

enum class EqualityKind { A1, A2, A3, A4, None };

std::string to_string(EqualityKind kind);

/// Which extremal template a reduced matrix matches, with its parameters.
/// A1: b in {0,-1}. A2: signs a_1..a_{k-1}, c in {0,1}. A3: none. A4: the
/// first-column signs.
struct EqualityClass {
  EqualityKind kind = EqualityKind::None;
  std::vector<int> signs;
  std::optional<int> b;
  std::optional<int> c;

  std::string describe() const;
};

// k x (k+2):  [1 1 | -I_{k-1} 0 ; 1 1 | 0 b]
SignMatrix template_a1(int k, int b);
// k x (k+2):  [a -a | I_{k-1} 0 ; 1 -1 | 0 c], a has k-1 signs
SignMatrix template_a2(std::span<const int> a, int c);
// k x (k+1):  [1 | -I_k]
SignMatrix template_a3(int k);
// k x (k+1):  [s | I_k]
SignMatrix template_a4(std::span<const int> signs);

struct TemplateInstance {
  EqualityClass cls;
  SignMatrix matrix;
};

// Every parameterisation of A1..A4 for k rows, ordered A3, A4, A1, A2.
std::vector<TemplateInstance> equality_templates(int k);

// Requires a reduced matrix. Matches A* against the zero-column-free form of
// every template; None when k >= l.
EqualityClass classify_equality(const SignMatrix& a);

// The k x (k+2) block shape
//   [+-1 +-1 | diag(+-1) 0 ; +-1 +-1 | 0 a],  a in {0,+-1},
// all sign choices. For k = 2 this is the B0 family.
std::vector<SignMatrix> block_shape_family(int k);

// Canonical keys of star(M) for every M in block_shape_family(k).
std::vector<CanonicalKey> block_shape_keys(int k);

}  // namespace offord
