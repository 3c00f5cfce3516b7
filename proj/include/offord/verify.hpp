#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "offord/sign_matrix.hpp"
#include "offord/templates.hpp"

namespace offord {

struct Fraction {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Fraction reduced() const;
  std::string to_string() const;
  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num * b.den == b.num * a.den;
  }
};

enum class LemmaPart { I, II, III, IV, V };

LemmaPart parse_lemma_part(const std::string& text);
std::string to_string(LemmaPart part);

/// One part of the two- and three-row sweep: rows, the range of the largest
/// row weight, the column limit and the bound |Omega(A*)| <= (num/den) * 2^s (strict when `strict`).
struct LemmaScope {
  LemmaPart part = LemmaPart::I;
  int rows = 2;
  int top_weight_lo = 2;
  int top_weight_hi = 2;
  int max_cols = 1;
  Fraction ratio;
  bool strict = false;
  // Rows k of the excluded block-shape family, or 0 for no exclusion.
  int excluded_shape_rows = 0;
};

LemmaScope lemma_scope(LemmaPart part);

struct VerifyOptions {
  int threads = 1;
  std::optional<std::chrono::milliseconds> budget;
  // Keep the excluded classes in the sweep (diagnostic).
  bool disable_exclusion = false;
  // Part (iv) only: stop at 12 columns instead of 15.
  bool restrict_cols = false;
  std::size_t witness_limit = 100;
};

struct Witness {
  SignMatrix matrix;  // canonical A*
  int zero_cols = 0;  // columns removed from A (k x l sweeps)
  std::uint64_t omega = 0;
  Fraction bound;
  std::string note;
  EqualityKind kind = EqualityKind::None;
};

struct VerificationReport {
  std::string scope;
  nlohmann::json scope_detail;
  std::string bound;
  std::uint64_t candidates = 0;
  std::uint64_t excluded = 0;
  std::optional<Witness> max_witness;
  Fraction max_ratio;  // |Omega(A*)| / 2^s, part sweeps only
  std::vector<Witness> violations;
  std::vector<Witness> equality_witnesses;
  std::uint64_t equality_count = 0;
  std::vector<std::string> equality_classes;
  bool complete = true;
  // The time budget ran out before every unit finished.
  bool budget_exhausted = false;
  std::size_t units_done = 0;
  std::size_t units_total = 0;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return violations.empty(); }
  // "pass", "fail" (violations found) or "partial" (no violation, sweep cut short).
  std::string verdict() const;
};

VerificationReport verify_lemma_comput(LemmaPart part, const VerifyOptions& options = {});

// Exhaustive over reduced k x l {0,+-1} matrices, k <= 3 and l <= 6.
VerificationReport verify_main_theorem(int k, int l, const VerifyOptions& options = {});

nlohmann::json to_json(const VerificationReport& report, bool with_elapsed = true);

}  // namespace offord
