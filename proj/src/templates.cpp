#include "offord/templates.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "offord/error.hpp"
#include "offord/omega.hpp"

namespace offord {

namespace {

std::vector<std::vector<int>> sign_vectors(int n) {
  std::vector<std::vector<int>> out;
  for (unsigned m = 0; m < (1U << n); ++m) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = ((m >> i) & 1U) ? -1 : 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<int>> zeros(int rows, int cols) {
  return std::vector<std::vector<int>>(static_cast<std::size_t>(rows),
                                       std::vector<int>(static_cast<std::size_t>(cols), 0));
}

void require_rows(int k) {
  if (k < 1) throw PreconditionError("template needs at least one row");
  if (k > kMaskCap - 2) throw CapacityError("template too wide");
}

}  // namespace

std::string to_string(EqualityKind kind) {
  switch (kind) {
    case EqualityKind::A1: return "A1";
    case EqualityKind::A2: return "A2";
    case EqualityKind::A3: return "A3";
    case EqualityKind::A4: return "A4";
    case EqualityKind::None: return "None";
  }
  return "None";
}

std::string EqualityClass::describe() const {
  std::string s = to_string(kind);
  if (!signs.empty()) {
    s += " signs=(";
    for (std::size_t i = 0; i < signs.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(signs[i]);
    }
    s += ')';
  }
  if (b) s += " b=" + std::to_string(*b);
  if (c) s += " c=" + std::to_string(*c);
  return s;
}

SignMatrix template_a1(int k, int b) {
  require_rows(k);
  if (b != 0 && b != -1) throw PreconditionError("A1 parameter b must be 0 or -1");
  auto m = zeros(k, k + 2);
  for (int i = 0; i < k; ++i) {
    m[i][0] = 1;
    m[i][1] = 1;
    if (i < k - 1) m[i][2 + i] = -1;
  }
  m[k - 1][k + 1] = b;
  return SignMatrix(m);
}

SignMatrix template_a2(std::span<const int> a, int c) {
  const int k = static_cast<int>(a.size()) + 1;
  require_rows(k);
  if (c != 0 && c != 1) throw PreconditionError("A2 parameter c must be 0 or 1");
  auto m = zeros(k, k + 2);
  for (int i = 0; i < k - 1; ++i) {
    if (a[i] != 1 && a[i] != -1) throw PreconditionError("A2 signs must be +-1");
    m[i][0] = a[i];
    m[i][1] = -a[i];
    m[i][2 + i] = 1;
  }
  m[k - 1][0] = 1;
  m[k - 1][1] = -1;
  m[k - 1][k + 1] = c;
  return SignMatrix(m);
}

SignMatrix template_a3(int k) {
  require_rows(k);
  auto m = zeros(k, k + 1);
  for (int i = 0; i < k; ++i) {
    m[i][0] = 1;
    m[i][1 + i] = -1;
  }
  return SignMatrix(m);
}

SignMatrix template_a4(std::span<const int> signs) {
  const int k = static_cast<int>(signs.size());
  require_rows(k);
  auto m = zeros(k, k + 1);
  for (int i = 0; i < k; ++i) {
    if (signs[i] != 1 && signs[i] != -1) throw PreconditionError("A4 signs must be +-1");
    m[i][0] = signs[i];
    m[i][1 + i] = 1;
  }
  return SignMatrix(m);
}

std::vector<TemplateInstance> equality_templates(int k) {
  std::vector<TemplateInstance> out;
  out.push_back({{EqualityKind::A3, {}, {}, {}}, template_a3(k)});
  for (const auto& s : sign_vectors(k)) {
    out.push_back({{EqualityKind::A4, s, {}, {}}, template_a4(s)});
  }
  for (int b : {0, -1}) {
    out.push_back({{EqualityKind::A1, {}, b, {}}, template_a1(k, b)});
  }
  for (const auto& a : sign_vectors(k - 1)) {
    for (int c : {0, 1}) {
      out.push_back({{EqualityKind::A2, a, {}, c}, template_a2(a, c)});
    }
  }
  return out;
}

namespace {

struct KeyedTemplate {
  CanonicalKey key;
  EqualityClass cls;
};

const std::vector<KeyedTemplate>& keyed_templates(int k) {
  static std::mutex mu;
  static std::map<int, std::vector<KeyedTemplate>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  std::vector<KeyedTemplate> keyed;
  for (auto& t : equality_templates(k)) {
    keyed.push_back({canonical_form(star(t.matrix).matrix), t.cls});
  }
  return cache.emplace(k, std::move(keyed)).first->second;
}

}  // namespace

EqualityClass classify_equality(const SignMatrix& a) {
  if (!is_reduced(a)) throw PreconditionError("classify_equality requires a reduced matrix");
  const int k = a.rows();
  const int l = a.cols();
  if (k < 1 || k >= l) return {};
  if (!a.is_sign()) return {};
  const CanonicalKey key = canonical_form(star(a).matrix);
  for (const auto& t : keyed_templates(k)) {
    if (t.key == key) return t.cls;
  }
  return {};
}

std::vector<SignMatrix> block_shape_family(int k) {
  require_rows(k);
  std::vector<SignMatrix> out;
  const auto left = sign_vectors(2 * k);
  const auto diag = sign_vectors(k - 1);
  for (const auto& lv : left) {
    for (const auto& dv : diag) {
      for (int a : {0, 1, -1}) {
        auto m = zeros(k, k + 2);
        for (int i = 0; i < k; ++i) {
          m[i][0] = lv[static_cast<std::size_t>(2 * i)];
          m[i][1] = lv[static_cast<std::size_t>(2 * i + 1)];
          if (i < k - 1) m[i][2 + i] = dv[static_cast<std::size_t>(i)];
        }
        m[k - 1][k + 1] = a;
        out.emplace_back(m);
      }
    }
  }
  return out;
}

std::vector<CanonicalKey> block_shape_keys(int k) {
  std::vector<CanonicalKey> keys;
  for (const auto& m : block_shape_family(k)) keys.push_back(canonical_form(star(m).matrix));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

}  // namespace offord
