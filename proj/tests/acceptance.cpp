// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "offord/bounds.hpp"
#include "offord/canonical.hpp"
#include "offord/census.hpp"
#include "offord/extremal.hpp"
#include "offord/graph.hpp"
#include "offord/graph_canon.hpp"
#include "offord/int_matrix.hpp"
#include "offord/omega.hpp"
#include "offord/parallel.hpp"
#include "offord/templates.hpp"
#include "offord/verify.hpp"

using namespace offord;
using Seconds = std::chrono::duration<double>;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

int threads() { return default_thread_count(); }

Outcome sweep_parts() {
  Outcome o;
  VerifyOptions opt;
  opt.threads = threads();
  const std::pair<LemmaPart, double> parts[] = {
      {LemmaPart::III, 60}, {LemmaPart::II, 600}, {LemmaPart::I, 600}, {LemmaPart::V, 1800}, {LemmaPart::IV, 7200}};
  std::ostringstream s;
  for (auto [part, limit] : parts) {
    const auto t0 = Clock::now();
    auto r = verify_lemma_comput(part, opt);
    const double secs = Seconds(Clock::now() - t0).count();
    s << to_string(part) << ":" << r.verdict() << "/" << r.candidates << " classes/" << static_cast<int>(secs * 1000)
      << "ms ";
    o.require(r.complete && r.violations.empty(), "part " + to_string(part) + " " + r.verdict());
    o.require(secs < limit, "part " + to_string(part) + " over time");
  }
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome cost() {
  Outcome o;
  auto c = estimate_cost_t7();
  o.require(c.row_choices == 1267, "rowChoices " + std::to_string(c.row_choices));
  o.require(c.inner_products == 3035648, "innerProducts " + std::to_string(c.inner_products));
  if (o.ok) o.detail = "rowChoices 1267, innerProducts 3035648";
  return o;
}

// Canonical forms of every template for k rows, zero columns stripped and then
// padded back with zero columns to width l.
std::set<CanonicalKey> template_classes(int k, int l) {
  std::set<CanonicalKey> out;
  for (const auto& t : equality_templates(k)) {
    const auto s = star(t.matrix).matrix;
    if (s.cols() > l) continue;
    std::vector<int> e;
    for (int i = 0; i < k; ++i) {
      e.insert(e.end(), s.row(i).begin(), s.row(i).end());
      e.insert(e.end(), static_cast<std::size_t>(l - s.cols()), 0);
    }
    SignMatrix padded(k, l, e);
    if (is_reduced(padded)) out.insert(canonical_form(padded));
  }
  return out;
}

Outcome bound_sweep() {
  Outcome o;
  VerifyOptions opt;
  opt.threads = threads();
  opt.witness_limit = 1 << 20;
  const auto t0 = Clock::now();
  std::uint64_t candidates = 0;
  for (int k = 1; k <= 3; ++k) {
    for (int l = 1; l <= 6; ++l) {
      const std::string at = "(" + std::to_string(k) + "," + std::to_string(l) + ")";
      auto r = verify_main_theorem(k, l, opt);
      candidates += r.candidates;
      const auto bound = lo_bound(k, l).value;
      o.require(r.violations.empty(), at + " violations");
      if (r.max_witness) o.require(r.max_witness->omega <= bound, at + " exceeds bound");
      if (k <= l - 1) {
        o.require(r.max_witness && r.max_witness->omega == bound, at + " bound not attained");
        std::set<CanonicalKey> found;
        for (const auto& w : r.equality_witnesses) {
          std::vector<int> e;
          for (int i = 0; i < k; ++i) {
            e.insert(e.end(), w.matrix.row(i).begin(), w.matrix.row(i).end());
            e.insert(e.end(), static_cast<std::size_t>(w.zero_cols), 0);
          }
          found.insert(canonical_form(SignMatrix(k, l, e)));
          o.require(w.kind != EqualityKind::None, at + " unclassified equality");
        }
        o.require(found.size() == r.equality_count, at + " witness list truncated");
        o.require(found == template_classes(k, l), at + " equality set differs from the templates");
      } else if (r.max_witness && r.max_witness->omega == bound) {
        o.require(r.equality_classes.empty(), at + " classified outside the characterised range");
      }
    }
  }
  const double secs = Seconds(Clock::now() - t0).count();
  o.require(secs < 1200, "over time");
  if (o.ok) o.detail = std::to_string(candidates) + " classes over k<=3, l<=6, " + std::to_string(static_cast<int>(secs * 1000)) + "ms";
  return o;
}

Outcome fixtures() {
  Outcome o;
  for (int k = 2; k <= 4; ++k) {
    const std::uint64_t want = (std::uint64_t{1} << (k + 1)) + 2;
    for (int b : {0, -1}) o.require(omega_count_fast(template_a1(k, b)) == want, "A1 k=" + std::to_string(k));
    for (int mask = 0; mask < (1 << (k - 1)); ++mask) {
      std::vector<int> a;
      for (int i = 0; i < k - 1; ++i) a.push_back((mask >> i) & 1 ? -1 : 1);
      for (int c : {0, 1}) o.require(omega_count_fast(template_a2(a, c)) == want, "A2 k=" + std::to_string(k));
    }
  }
  for (int k = 1; k <= 5; ++k) {
    const std::uint64_t want = (std::uint64_t{1} << k) + 1;
    o.require(omega_count_fast(template_a3(k)) == want, "A3 k=" + std::to_string(k));
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> s;
      for (int i = 0; i < k; ++i) s.push_back((mask >> i) & 1 ? -1 : 1);
      o.require(omega_count_fast(template_a4(s)) == want, "A4 k=" + std::to_string(k));
    }
  }
  auto r = omega_enumerate(SignMatrix{{1, -1, 1, 0}, {1, 1, 0, -1}}, true);
  std::string list;
  for (const auto& b : *r.members) list += (list.empty() ? "" : ", ") + b.to_string();
  o.require(list == "0000, 0010, 0110, 0111, 1000, 1001, 1101, 1111", "member list " + list);
  if (o.ok) o.detail = "members {" + list + "}";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto t0 = Clock::now();
  std::uint64_t checked = 0;
  for (int k = 1; k <= 2; ++k) {
    for (int l = 1; l <= 5; ++l) {
      const int cells = k * l;
      std::vector<int> e(static_cast<std::size_t>(cells), -1);
      while (true) {
        SignMatrix a(k, l, e);
        ++checked;
        if (omega_count_fast(a) != omega_enumerate(a).count) o.require(false, "mismatch at " + to_compact(a));
        int pos = 0;
        while (pos < cells && e[pos] == 1) e[pos++] = -1;
        if (pos == cells) break;
        ++e[pos];
      }
    }
  }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> entry(-1, 1), rows(1, 4), cols(1, 12);
  for (int trial = 0; trial < 10000; ++trial) {
    const int k = rows(rng), l = cols(rng);
    std::vector<int> e(static_cast<std::size_t>(k * l));
    for (auto& x : e) x = entry(rng);
    SignMatrix a(k, l, e);
    ++checked;
    if (omega_count_fast(a) != omega_enumerate(a).count) o.require(false, "mismatch at " + to_compact(a));
  }
  const double secs = Seconds(Clock::now() - t0).count();
  o.require(secs < 300, "over time");
  if (o.ok) o.detail = std::to_string(checked) + " matrices agree";
  return o;
}

Outcome ones_vector_rank() {
  Outcome o;
  std::mt19937_64 rng(8128);
  std::uniform_int_distribution<int> size(1, 8), entry(-3, 3);
  int grew = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = size(rng);
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = i; j < n; ++j) m(i, j) = m(j, i) = entry(rng);
    }
    const int r = rank_exact(m).rank;
    const int rj = rank_exact(m + IntMatrix::ones(n, n)).rank;
    const bool inside = one_in_rowspace(m);
    grew += rj == r + 1;
    if ((rj == r + 1) != !inside) o.require(false, "trial " + std::to_string(trial));
  }
  if (o.ok) o.detail = "1000 matrices, rank grew in " + std::to_string(grew);
  return o;
}

Outcome constructions() {
  Outcome o;
  for (int l = 1; l <= 8; ++l) {
    auto g = build_extremal(ExtremalFamily::Bprime, l).graph();
    const std::string at = " l=" + std::to_string(l);
    o.require(is_reduced_graph(g), "B' not reduced" + at);
    o.require(g.order() == (1 << l) + l - 1, "B' order" + at);
    o.require(graph_rank(g) == 2 * l, "B' rank" + at);
    o.require(g.order() == extremal_order(OrderFamily::BipartiteRank, 2 * l), "B' extremal order" + at);
  }
  for (int l = 1; l <= 6; ++l) {
    const std::string at = " l=" + std::to_string(l);
    auto d = complement(build_extremal(ExtremalFamily::D, l).graph());
    o.require(is_coreduced_graph(d), "D complement not coreduced" + at);
    o.require(d.order() == (1 << l) + 2 * l, "D order" + at);
    o.require(graph_corank(d) == 2 * l + 2, "D corank" + at);
    o.require(d.order() == extremal_order(OrderFamily::CobipartiteCorank, 2 * l + 2), "D extremal order" + at);
    auto b = complement(build_extremal(ExtremalFamily::B, l).graph());
    o.require(b.order() == (1 << l) + l, "B order" + at);
    o.require(graph_corank(b) == 2 * l + 1, "B corank" + at);
    o.require(b.order() == extremal_order(OrderFamily::CobipartiteCorank, 2 * l + 1), "B extremal order" + at);
  }
  if (o.ok) o.detail = "B'_1..B'_8, D_1..D_6 and B_1..B_6 complements";
  return o;
}

Outcome bipartite_census() {
  Outcome o;
  CensusOptions opt;
  opt.threads = threads();
  const std::pair<int, std::string> want[] = {
      {2, canonical_key(Graph(2, {{0, 1}}))},
      {4, canonical_key(build_extremal(ExtremalFamily::Bprime, 2).graph())},
      {6, canonical_key(build_extremal(ExtremalFamily::Bprime, 3).graph())},
  };
  const std::int64_t maxima[] = {2, 5, 10};
  std::ostringstream s;
  for (int i = 0; i < 3; ++i) {
    auto [r, key] = want[i];
    auto c = bipartite_rank_census(r, opt);
    const std::string at = " r=" + std::to_string(r);
    o.require(c.complete, "incomplete" + at);
    o.require(c.max_order == maxima[i], "max " + std::to_string(c.max_order) + at);
    o.require(c.extremal.size() == 1 && c.extremal[0].key == key, "extremal graph" + at);
    s << "r=" << r << " max " << c.max_order << " (" << c.extremal.size() << " extremal) ";
  }
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome cobipartite_census() {
  Outcome o;
  CensusOptions opt;
  opt.threads = threads();
  const auto t0 = Clock::now();
  std::map<int, std::map<int, std::size_t>> blunt;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : all_graphs(n)) {
      if (is_cobipartite(g) && is_coreduced_graph(g)) ++blunt[graph_corank(g)][n];
    }
  }
  std::ostringstream s;
  for (int r = 3; r <= 8; ++r) {
    auto c = cobipartite_corank_census(r, opt);
    const std::string at = " r=" + std::to_string(r);
    o.require(c.complete, "incomplete" + at);
    o.require(c.max_order == extremal_order(OrderFamily::CobipartiteCorank, r),
              "max " + std::to_string(c.max_order) + at);
    if (!c.unique_predicted()) {
      std::string found;
      for (const auto& e : c.extremal) found += (found.empty() ? "" : ",") + e.key;
      o.require(false, "extremal graphs {" + found + "} vs predicted " + c.predicted_key + at);
    }
    std::map<int, std::size_t> small;
    for (auto [n, count] : c.classes_by_order) {
      if (n <= 7) small[n] = count;
    }
    o.require(small == blunt[r], "all-graphs cross-check" + at);
    s << "r=" << r << " max " << c.max_order << " ";
  }
  const double secs = Seconds(Clock::now() - t0).count();
  o.require(secs < 3600, "over time");
  if (o.ok) o.detail = s.str();
  return o;
}

Outcome twin_invariance() {
  Outcome o;
  std::mt19937_64 rng(1729);
  std::uniform_int_distribution<int> size(1, 10);
  std::bernoulli_distribution edge(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = size(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (edge(rng)) g.add_edge(u, v);
      }
    }
    const int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
    auto open = g.neighbors(v);
    auto closed = open;
    closed.push_back(v);
    const Graph twin = g.with_vertex(open), cotwin = g.with_vertex(closed);
    if (!twins(twin, v, n) || graph_rank(twin) != graph_rank(g)) o.require(false, "twin trial " + std::to_string(trial));
    if (!cotwins(cotwin, v, n) || graph_corank(cotwin) != graph_corank(g)) {
      o.require(false, "cotwin trial " + std::to_string(trial));
    }
  }
  if (o.ok) o.detail = "200 random graphs";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"sweep parts i-v exhaustive", sweep_parts},
      {"cost estimate", cost},
      {"bound sweep k<=3, l<=6", bound_sweep},
      {"template fixture values", fixtures},
      {"fast path equals oracle", oracle_equivalence},
      {"rank of M+J vs ones vector", ones_vector_rank},
      {"extremal constructions", constructions},
      {"bipartite rank census", bipartite_census},
      {"cobipartite corank census", cobipartite_census},
      {"twin and cotwin invariance", twin_invariance},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = Seconds(Clock::now() - t0).count();
    failed += !o.ok;
    std::printf("criterion %2zu %s: %s (%.1fs) %s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
