#include "offord/verify.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "offord/bounds.hpp"
#include "offord/canonical.hpp"
#include "offord/enumerate.hpp"
#include "offord/error.hpp"
#include "offord/omega.hpp"
#include "offord/parallel.hpp"

namespace offord {

Fraction Fraction::reduced() const {
  if (num == 0) return {0, 1};
  const std::uint64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

std::string Fraction::to_string() const {
  const Fraction r = reduced();
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

LemmaPart parse_lemma_part(const std::string& text) {
  if (text == "i" || text == "1") return LemmaPart::I;
  if (text == "ii" || text == "2") return LemmaPart::II;
  if (text == "iii" || text == "3") return LemmaPart::III;
  if (text == "iv" || text == "4") return LemmaPart::IV;
  if (text == "v" || text == "5") return LemmaPart::V;
  throw PreconditionError("lemma part must be one of i, ii, iii, iv, v");
}

std::string to_string(LemmaPart part) {
  switch (part) {
    case LemmaPart::I: return "i";
    case LemmaPart::II: return "ii";
    case LemmaPart::III: return "iii";
    case LemmaPart::IV: return "iv";
    case LemmaPart::V: return "v";
  }
  return "?";
}

LemmaScope lemma_scope(LemmaPart part) {
  switch (part) {
    case LemmaPart::I: return {part, 2, 6, 7, 14, {1, 2}, false, 0};
    case LemmaPart::II: return {part, 2, 4, 5, 10, {5, 8}, true, 0};
    case LemmaPart::III: return {part, 2, 3, 3, 6, {9, 16}, false, 2};
    case LemmaPart::IV: return {part, 3, 4, 5, 15, {1, 2}, false, 0};
    case LemmaPart::V: return {part, 3, 3, 3, 9, {1, 2}, false, 3};
  }
  throw PreconditionError("unknown lemma part");
}

std::string VerificationReport::verdict() const {
  if (!violations.empty()) return "fail";
  return complete ? "pass" : "partial";
}

namespace {

struct Partial {
  std::uint64_t candidates = 0;
  std::uint64_t excluded = 0;
  std::optional<Witness> max_witness;
  std::vector<Witness> violations;
  std::vector<Witness> equality;
  std::uint64_t equality_count = 0;
  bool complete = true;
};

// a/2^sa > b/2^sb
bool ratio_greater(std::uint64_t a, int sa, std::uint64_t b, int sb) {
  return (a << sb) > (b << sa);
}

bool witness_less(const Witness& x, const Witness& y) {
  auto kx = encode_key(x.matrix);
  auto ky = encode_key(y.matrix);
  if (kx != ky) return kx < ky;
  return x.zero_cols < y.zero_cols;
}

using Evaluate = std::function<void(const SignMatrix&, Partial&)>;

struct SweepResult {
  Partial merged;
  std::size_t units_done = 0;
  std::size_t units_total = 0;
};

SweepResult sweep(const EnumerationScope& scope, const VerifyOptions& options, const Evaluate& evaluate,
                  bool ratio_max) {
  const auto units = first_row_classes(scope);
  std::vector<Partial> partials(units.size());
  const Deadline deadline(options.budget);
  parallel_for(units.size(), options.threads, [&](std::size_t u) {
    Partial& p = partials[u];
    if (deadline.expired()) {
      p.complete = false;
      return;
    }
    std::uint64_t tick = 0;
    const bool done = enumerate_first_row(scope, units[u], [&](const SignMatrix& m) {
      evaluate(m, p);
      if (deadline.bounded() && (++tick & 255U) == 0 && deadline.expired()) return false;
      return true;
    });
    p.complete = done;
  });

  SweepResult out;
  out.units_total = units.size();
  Partial& all = out.merged;
  for (auto& p : partials) {
    all.candidates += p.candidates;
    all.excluded += p.excluded;
    all.equality_count += p.equality_count;
    all.complete = all.complete && p.complete;
    out.units_done += p.complete;
    std::move(p.violations.begin(), p.violations.end(), std::back_inserter(all.violations));
    std::move(p.equality.begin(), p.equality.end(), std::back_inserter(all.equality));
    if (p.max_witness) {
      if (!all.max_witness) {
        all.max_witness = p.max_witness;
        continue;
      }
      const Witness& a = *p.max_witness;
      const Witness& b = *all.max_witness;
      bool take = false;
      if (ratio_max) {
        take = ratio_greater(a.omega, a.matrix.cols(), b.omega, b.matrix.cols()) ||
               (!ratio_greater(b.omega, b.matrix.cols(), a.omega, a.matrix.cols()) && witness_less(a, b));
      } else {
        take = a.omega > b.omega || (a.omega == b.omega && witness_less(a, b));
      }
      if (take) all.max_witness = p.max_witness;
    }
  }
  std::sort(all.violations.begin(), all.violations.end(), witness_less);
  std::sort(all.equality.begin(), all.equality.end(), witness_less);
  return out;
}

void finish_report(VerificationReport& r, SweepResult& s, const VerifyOptions& options) {
  Partial& m = s.merged;
  r.candidates = m.candidates;
  r.excluded = m.excluded;
  r.max_witness = m.max_witness;
  r.equality_count = m.equality_count;
  r.complete = m.complete;
  r.budget_exhausted = !m.complete;
  r.units_done = s.units_done;
  r.units_total = s.units_total;
  std::set<std::string> kinds;
  for (const auto& w : m.equality) {
    if (w.kind != EqualityKind::None) kinds.insert(to_string(w.kind));
  }
  r.equality_classes.assign(kinds.begin(), kinds.end());
  r.violations = std::move(m.violations);
  r.equality_witnesses = std::move(m.equality);
  if (r.equality_witnesses.size() > options.witness_limit) r.equality_witnesses.erase(r.equality_witnesses.begin() + static_cast<std::ptrdiff_t>(options.witness_limit), r.equality_witnesses.end());
}

void keep_max(Partial& p, const Witness& w, bool ratio_max) {
  if (!p.max_witness) {
    p.max_witness = w;
    return;
  }
  const Witness& b = *p.max_witness;
  bool take = false;
  if (ratio_max) {
    take = ratio_greater(w.omega, w.matrix.cols(), b.omega, b.matrix.cols()) ||
           (!ratio_greater(b.omega, b.matrix.cols(), w.omega, w.matrix.cols()) && witness_less(w, b));
  } else {
    take = w.omega > b.omega || (w.omega == b.omega && witness_less(w, b));
  }
  if (take) p.max_witness = w;
}

SignMatrix pad_zero_cols(const SignMatrix& m, int extra) {
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(m.rows()) * (m.cols() + extra));
  for (int i = 0; i < m.rows(); ++i) {
    auto r = m.row(i);
    e.insert(e.end(), r.begin(), r.end());
    e.insert(e.end(), static_cast<std::size_t>(extra), 0);
  }
  return {m.rows(), m.cols() + extra, std::move(e)};
}

}  // namespace

VerificationReport verify_lemma_comput(LemmaPart part, const VerifyOptions& options) {
  const auto start = Clock::now();
  const LemmaScope ls = lemma_scope(part);
  int max_cols = ls.max_cols;
  const bool restricted = options.restrict_cols && part == LemmaPart::IV;
  if (restricted) max_cols = 12;

  std::unordered_set<CanonicalKey> excluded_keys;
  if (ls.excluded_shape_rows > 0 && !options.disable_exclusion) {
    for (auto& k : block_shape_keys(ls.excluded_shape_rows)) excluded_keys.insert(k);
  }

  const EnumerationScope scope{ls.rows, 2, ls.top_weight_hi, max_cols, ls.top_weight_lo};
  const Fraction ratio = ls.ratio;
  auto evaluate = [&](const SignMatrix& m, Partial& p) {
    if (!excluded_keys.empty() && excluded_keys.contains(encode_key(m))) {
      ++p.excluded;
      return;
    }
    ++p.candidates;
    const int s = m.cols();
    const std::uint64_t omega = omega_count_fast(m);
    const std::uint64_t lhs = omega * ratio.den;
    const std::uint64_t rhs = ratio.num << s;
    Witness w{m, 0, omega, Fraction{rhs, ratio.den}.reduced(), {}, EqualityKind::None};
    keep_max(p, w, true);
    const bool ok = ls.strict ? lhs < rhs : lhs <= rhs;
    if (!ok) {
      w.note = "exceeds bound";
      p.violations.push_back(w);
    } else if (lhs == rhs) {
      ++p.equality_count;
      p.equality.push_back(w);
    }
  };
  SweepResult res = sweep(scope, options, evaluate, true);

  VerificationReport r;
  r.scope = "lemma part " + to_string(part);
  r.scope_detail = {{"part", to_string(part)},
                    {"k", ls.rows},
                    {"t", {ls.top_weight_lo, ls.top_weight_hi}},
                    {"maxCols", max_cols},
                    {"exclusion", ls.excluded_shape_rows > 0 && !options.disable_exclusion},
                    {"restricted", restricted}};
  r.bound = std::string("|Omega(A*)| ") + (ls.strict ? "< " : "<= ") + ratio.to_string() + " * 2^s";
  finish_report(r, res, options);
  if (r.max_witness) r.max_ratio = Fraction{r.max_witness->omega, std::uint64_t{1} << r.max_witness->matrix.cols()}.reduced();
  if (restricted) r.complete = false;
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

VerificationReport verify_main_theorem(int k, int l, const VerifyOptions& options) {
  if (k < 1 || l < 1) throw PreconditionError("theorem sweep requires k, l >= 1");
  if (k > 3 || l > 6) throw CapacityError("theorem sweep supports k <= 3 and l <= 6");
  const auto start = Clock::now();
  const std::uint64_t bound = lo_bound(k, l).value;
  const bool characterised = k <= l - 1;

  VerificationReport r;
  r.scope = "theorem k=" + std::to_string(k) + " l=" + std::to_string(l);
  r.scope_detail = {{"k", k}, {"l", l}, {"characterisesEquality", characterised}};
  r.bound = std::to_string(bound);

  SweepResult res;
  if (l >= 2) {
    const EnumerationScope scope{k, 2, l, l, 0};
    auto evaluate = [&](const SignMatrix& m, Partial& p) {
      ++p.candidates;
      const int zero_cols = l - m.cols();
      const std::uint64_t omega = omega_count_fast(m) << zero_cols;
      Witness w{m, zero_cols, omega, Fraction{bound, 1}, {}, EqualityKind::None};
      if (characterised) w.kind = classify_equality(pad_zero_cols(m, zero_cols)).kind;
      keep_max(p, w, false);
      if (omega > bound) {
        w.note = "exceeds bound";
        p.violations.push_back(w);
        return;
      }
      if (omega == bound) {
        ++p.equality_count;
        if (characterised && w.kind == EqualityKind::None) {
          w.note = "attains bound but matches no template";
          p.violations.push_back(w);
        }
        p.equality.push_back(w);
      } else if (characterised && w.kind != EqualityKind::None) {
        w.note = "template class below bound";
        p.violations.push_back(w);
      }
    };
    res = sweep(scope, options, evaluate, false);
  }
  finish_report(r, res, options);
  r.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return r;
}

namespace {

nlohmann::json rows_json(const SignMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::string s;
    for (int j = 0; j < m.cols(); ++j) {
      if (j) s += ' ';
      s += std::to_string(m(i, j));
    }
    rows.push_back(s);
  }
  return rows;
}

nlohmann::json witness_json(const Witness& w) {
  nlohmann::json j = {{"matrix", rows_json(w.matrix)},
                      {"cols", w.matrix.cols()},
                      {"omega", w.omega},
                      {"bound", w.bound.to_string()}};
  if (w.zero_cols) j["zeroCols"] = w.zero_cols;
  if (w.kind != EqualityKind::None) j["class"] = to_string(w.kind);
  if (!w.note.empty()) j["note"] = w.note;
  return j;
}

}  // namespace

nlohmann::json to_json(const VerificationReport& r, bool with_elapsed) {
  nlohmann::json j;
  j["scope"] = r.scope;
  j["scopeDetail"] = r.scope_detail;
  j["verdict"] = r.verdict();
  j["candidates"] = r.candidates;
  j["excluded"] = r.excluded;
  j["bound"] = r.bound;
  if (r.max_witness) {
    j["maxOmega"] = witness_json(*r.max_witness);
    if (r.max_ratio.num) j["maxRatio"] = r.max_ratio.to_string();
  } else {
    j["maxOmega"] = nullptr;
  }
  j["violations"] = nlohmann::json::array();
  for (const auto& w : r.violations) j["violations"].push_back(witness_json(w));
  j["equalityCount"] = r.equality_count;
  j["equalityClasses"] = r.equality_classes;
  j["equalityWitnesses"] = nlohmann::json::array();
  for (const auto& w : r.equality_witnesses) j["equalityWitnesses"].push_back(witness_json(w));
  j["complete"] = r.complete;
  j["budgetExhausted"] = r.budget_exhausted;
  j["coverage"] = {{"done", r.units_done}, {"total", r.units_total}};
  if (with_elapsed) j["elapsedMs"] = r.elapsed.count();
  return j;
}

}  // namespace offord
