#include "offord/census.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "offord/error.hpp"
#include "offord/extremal.hpp"
#include "offord/graph_canon.hpp"
#include "offord/graph_io.hpp"

namespace offord {

GraphFlags graph_flags(const Graph& g) {
  return {is_reduced_graph(g), is_coreduced_graph(g), is_bipartite(g), is_cobipartite(g)};
}

std::string to_string(const GraphFlags& f) {
  std::string out;
  auto add = [&](bool on, const char* name) {
    if (!on) return;
    if (!out.empty()) out += ',';
    out += name;
  };
  add(f.reduced, "reduced");
  add(f.coreduced, "coreduced");
  add(f.bipartite, "bipartite");
  add(f.cobipartite, "cobipartite");
  return out.empty() ? "-" : out;
}

CensusRecord make_record(const Graph& g) {
  CensusRecord r;
  r.graph = canonical_graph(g);
  r.key = to_graph6(r.graph);
  r.order = g.order();
  r.rank = graph_rank(r.graph);
  r.corank = graph_corank(r.graph);
  r.flags = graph_flags(r.graph);
  return r;
}

std::vector<Graph> all_graphs(int n) {
  if (n < 0) throw PreconditionError("order must be non-negative");
  if (n > 9) throw CapacityError("all-graphs generation is limited to order 9");
  std::vector<Graph> level{Graph(0)};
  for (int m = 1; m <= n; ++m) {
    std::map<std::string, Graph> next;
    for (const auto& g : level) {
      for (std::uint32_t s = 0; s < (1U << (m - 1)); ++s) {
        std::vector<int> nb;
        for (int v = 0; v < m - 1; ++v) {
          if ((s >> v) & 1U) nb.push_back(v);
        }
        Graph h = canonical_graph(g.with_vertex(nb));
        std::string key = to_graph6(h);
        next.try_emplace(std::move(key), std::move(h));
      }
    }
    level.clear();
    for (auto& [k, g] : next) level.push_back(std::move(g));
  }
  return level;
}

namespace {

// Determinant of a small square matrix by cofactor expansion.
std::int64_t small_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == 0) continue;
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    d += ((j % 2) ? -1 : 1) * m[0][j] * small_det(minor);
  }
  return d;
}

// A p x l set of distinct nonzero 0/1 rows of rank l, with every 0/1 vector
// of its column space beyond its own columns.
struct RowSet {
  int l = 0;
  std::vector<std::uint32_t> rows;     // masks over the l coordinates
  std::vector<std::uint32_t> own;      // its l columns, masks over rows
  std::vector<std::uint32_t> extra;    // other nonzero 0/1 columns in the span
};

std::vector<RowSet> row_sets(int l) {
  const int nv = (1 << l) - 1;
  std::vector<int> perm(static_cast<std::size_t>(l));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> vector_perm;  // vector index image under each coordinate permutation
  do {
    std::vector<int> img(static_cast<std::size_t>(nv + 1));
    for (int v = 0; v <= nv; ++v) {
      int w = 0;
      for (int i = 0; i < l; ++i) {
        if ((v >> i) & 1) w |= 1 << perm[i];
      }
      img[v] = w;
    }
    vector_perm.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<RowSet> out;
  for (std::uint32_t set = 1; set < (1U << nv); ++set) {
    if (std::popcount(set) < l) continue;
    bool minimal = true;
    for (const auto& img : vector_perm) {
      std::uint32_t t = 0;
      for (int v = 1; v <= nv; ++v) {
        if ((set >> (v - 1)) & 1U) t |= 1U << (img[v] - 1);
      }
      if (t < set) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    RowSet rs;
    rs.l = l;
    for (int v = 1; v <= nv; ++v) {
      if ((set >> (v - 1)) & 1U) rs.rows.push_back(static_cast<std::uint32_t>(v));
    }
    const int p = static_cast<int>(rs.rows.size());
    IntMatrix w(p, l);
    for (int i = 0; i < p; ++i) {
      for (int j = 0; j < l; ++j) w(i, j) = (rs.rows[i] >> j) & 1U;
    }
    if (rank_exact(w).rank != l) continue;
    // Greedy row basis.
    std::vector<int> basis;
    IntMatrix acc(0, l);
    for (int i = 0; i < p && static_cast<int>(basis.size()) < l; ++i) {
      IntMatrix trial = acc.stacked(IntMatrix(1, l, std::vector<std::int64_t>(w.row(i).begin(), w.row(i).end())));
      if (rank_exact(trial).rank > static_cast<int>(basis.size())) {
        basis.push_back(i);
        acc = trial;
      }
    }
    std::vector<std::vector<std::int64_t>> w0(static_cast<std::size_t>(l), std::vector<std::int64_t>(l));
    for (int a = 0; a < l; ++a) {
      for (int b = 0; b < l; ++b) w0[a][b] = w(basis[a], b);
    }
    const std::int64_t det = small_det(w0);
    // adj[j][a] = cofactor C[a][j]
    std::vector<std::vector<std::int64_t>> adj(static_cast<std::size_t>(l), std::vector<std::int64_t>(l));
    for (int a = 0; a < l; ++a) {
      for (int b = 0; b < l; ++b) {
        std::vector<std::vector<std::int64_t>> minor;
        for (int i = 0; i < l; ++i) {
          if (i == a) continue;
          std::vector<std::int64_t> row;
          for (int k = 0; k < l; ++k) {
            if (k != b) row.push_back(w0[i][k]);
          }
          minor.push_back(std::move(row));
        }
        adj[b][a] = (((a + b) % 2) ? -1 : 1) * small_det(minor);
      }
    }
    for (int j = 0; j < l; ++j) {
      std::uint32_t col = 0;
      for (int i = 0; i < p; ++i) col |= ((rs.rows[i] >> j) & 1U) << i;
      rs.own.push_back(col);
    }
    for (std::uint32_t y0 = 1; y0 < (1U << l); ++y0) {
      std::vector<std::int64_t> x(static_cast<std::size_t>(l), 0);
      for (int j = 0; j < l; ++j) {
        for (int a = 0; a < l; ++a) x[j] += adj[j][a] * ((y0 >> a) & 1U);
      }
      std::uint32_t col = 0;
      bool ok = true;
      for (int i = 0; i < p && ok; ++i) {
        std::int64_t y = 0;
        for (int j = 0; j < l; ++j) y += w(i, j) * x[j];
        if (y == det) {
          col |= 1U << i;
        } else if (y != 0) {
          ok = false;
        }
      }
      if (ok && std::find(rs.own.begin(), rs.own.end(), col) == rs.own.end()) rs.extra.push_back(col);
    }
    std::sort(rs.extra.begin(), rs.extra.end());
    out.push_back(std::move(rs));
  }
  return out;
}

// Bipartite graph with rows of the set and the chosen columns (and an
// optional isolated column vertex).
Graph bipartite_from(const RowSet& rs, std::uint32_t pick, bool zero_col) {
  const int p = static_cast<int>(rs.rows.size());
  std::vector<std::uint32_t> cols = rs.own;
  for (std::size_t k = 0; k < rs.extra.size(); ++k) {
    if ((pick >> k) & 1U) cols.push_back(rs.extra[k]);
  }
  const int q = static_cast<int>(cols.size()) + (zero_col ? 1 : 0);
  Graph g(p + q);
  for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
    for (int i = 0; i < p; ++i) {
      if ((cols[j] >> i) & 1U) g.add_edge(i, p + j);
    }
  }
  return g;
}

struct Found {
  std::map<std::string, Graph> classes;
  bool complete = true;
};

using Visit = std::function<void(const Graph&, std::map<std::string, Graph>&)>;

Found sweep_row_sets(const std::vector<int>& ls, bool zero_cols, const CensusOptions& options, const Visit& visit) {
  std::vector<RowSet> units;
  for (int l : ls) {
    auto sets = row_sets(l);
    std::move(sets.begin(), sets.end(), std::back_inserter(units));
  }
  std::vector<std::map<std::string, Graph>> local(units.size());
  std::vector<char> done(units.size(), 0);
  const Deadline deadline(options.budget);
  parallel_for(units.size(), options.threads, [&](std::size_t u) {
    if (deadline.expired()) return;
    const RowSet& rs = units[u];
    const std::uint32_t picks = 1U << rs.extra.size();
    for (std::uint32_t pick = 0; pick < picks; ++pick) {
      for (int z = 0; z <= (zero_cols ? 1 : 0); ++z) visit(bipartite_from(rs, pick, z == 1), local[u]);
      if ((pick & 255U) == 255U && deadline.expired()) return;
    }
    done[u] = 1;
  });
  Found f;
  for (std::size_t u = 0; u < units.size(); ++u) {
    f.complete = f.complete && done[u];
    f.classes.merge(local[u]);
  }
  return f;
}

CensusResult summarise(std::string mode, int r, std::int64_t expected, const Graph& predicted, Found& found) {
  CensusResult res;
  res.mode = std::move(mode);
  res.r = r;
  res.expected_max = expected;
  res.predicted_key = canonical_key(predicted);
  res.complete = found.complete;
  for (const auto& [key, g] : found.classes) {
    ++res.classes_by_order[g.order()];
    res.max_order = std::max<std::int64_t>(res.max_order, g.order());
  }
  for (const auto& [key, g] : found.classes) {
    if (g.order() != res.max_order) continue;
    CensusRecord rec = make_record(g);
    rec.extremal = true;
    res.extremal.push_back(std::move(rec));
  }
  return res;
}

}  // namespace

CensusResult bipartite_rank_census(int r, const CensusOptions& options) {
  const bool allowed = r == 2 || r == 4 || r == 6 || (r == 8 && options.extended);
  if (!allowed) {
    throw CapacityError(r == 8 ? "bipartite rank census at r = 8 needs the extended flag"
                               : "bipartite rank census supports r in {2, 4, 6} (8 extended)");
  }
  const auto start = Clock::now();
  const int l = r / 2;
  Found found = sweep_row_sets({l}, false, options, [](const Graph& g, std::map<std::string, Graph>& out) {
    Graph c = canonical_graph(g);
    out.try_emplace(to_graph6(c), std::move(c));
  });
  CensusResult res = summarise("bipartite-rank", r, extremal_order(OrderFamily::BipartiteRank, r),
                               build_extremal(ExtremalFamily::Bprime, l).graph(), found);
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return res;
}

CensusResult cobipartite_corank_census(int r, const CensusOptions& options) {
  if (r < 3 || r > 8) throw CapacityError("cobipartite corank census supports 3 <= r <= 8");
  const auto start = Clock::now();
  // r - 1 <= 2 rank(B) <= r + 1
  std::vector<int> ls;
  for (int l = 1; 2 * l <= r + 1; ++l) {
    if (2 * l >= r - 1) ls.push_back(l);
  }
  Found found = sweep_row_sets(ls, true, options, [r](const Graph& g, std::map<std::string, Graph>& out) {
    Graph h = complement(g);
    if (graph_corank(h) != r) return;
    Graph c = canonical_graph(h);
    out.try_emplace(to_graph6(c), std::move(c));
  });
  const Graph predicted = r % 2 == 0 ? complement(build_extremal(ExtremalFamily::D, r / 2 - 1).graph())
                                     : complement(build_extremal(ExtremalFamily::B, (r - 1) / 2).graph());
  CensusResult res =
      summarise("cobipartite-corank", r, extremal_order(OrderFamily::CobipartiteCorank, r), predicted, found);
  res.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
  return res;
}

bool extend_census(int r, const RecordSink& sink, const CensusOptions& options) {
  if (r < 3 || r > 6) throw CapacityError("extension census supports 3 <= r <= 6");
  const Deadline deadline(options.budget);
  std::vector<Graph> frontier;
  for (auto& g : all_graphs(r)) {
    if (is_coreduced_graph(g) && graph_corank(g) == r) frontier.push_back(std::move(g));
  }
  for (const auto& g : frontier) sink(make_record(g));
  while (!frontier.empty()) {
    std::vector<std::map<std::string, Graph>> local(frontier.size());
    std::vector<char> done(frontier.size(), 0);
    parallel_for(frontier.size(), options.threads, [&](std::size_t u) {
      if (deadline.expired()) return;
      const Graph& g = frontier[u];
      const int n = g.order();
      if (n >= 30) throw CapacityError("extension census exceeded 30 vertices");
      std::vector<std::uint32_t> closed(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) {
        closed[v] = 1U << v;
        for (int w = 0; w < n; ++w) {
          if (g.adjacent(v, w)) closed[v] |= 1U << w;
        }
      }
      for (std::uint32_t s = 0; s < (1U << n); ++s) {
        bool cotwin = false;
        for (int v = 0; v < n && !cotwin; ++v) cotwin = ((s >> v) & 1U) && closed[v] == s;
        if (cotwin) continue;
        std::vector<int> nb;
        for (int v = 0; v < n; ++v) {
          if ((s >> v) & 1U) nb.push_back(v);
        }
        Graph h = g.with_vertex(nb);
        if (graph_corank(h) != r) continue;
        Graph c = canonical_graph(h);
        local[u].try_emplace(to_graph6(c), std::move(c));
        if ((s & 1023U) == 1023U && deadline.expired()) return;
      }
      done[u] = 1;
    });
    std::map<std::string, Graph> level;
    bool complete = true;
    for (std::size_t u = 0; u < frontier.size(); ++u) {
      complete = complete && done[u];
      level.merge(local[u]);
    }
    frontier.clear();
    for (auto& [key, g] : level) {
      sink(make_record(g));
      frontier.push_back(std::move(g));
    }
    if (!complete) return false;
  }
  return true;
}

std::vector<CensusRecord> extend_census(int r, const CensusOptions& options) {
  std::vector<CensusRecord> out;
  if (!extend_census(r, [&](const CensusRecord& rec) { out.push_back(rec); }, options)) {
    throw CapacityError("extension census ran out of budget");
  }
  return out;
}

void save_census(std::ostream& out, std::vector<CensusRecord> records) {
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  for (const auto& r : records) {
    std::string flags = to_string(r.flags);
    if (r.extremal) flags = flags == "-" ? "extremal" : flags + ",extremal";
    out << r.key << '\t' << r.order << '\t' << r.rank << '\t' << r.corank << '\t' << flags << '\n';
  }
}

void save_census(const std::string& path, const std::vector<CensusRecord>& records) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  save_census(out, records);
}

namespace {

int parse_int_field(const std::string& s, int line) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw FormatError("field \"" + s + "\" is not an integer", line);
  }
  if (used != s.size() || v < 0) throw FormatError("field \"" + s + "\" is not a non-negative integer", line);
  return v;
}

}  // namespace

std::vector<CensusRecord> load_census(std::istream& in) {
  std::vector<CensusRecord> out;
  std::set<std::string> seen;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, '\t')) fields.push_back(f);
    if (fields.size() != 5) throw FormatError("expected 5 tab-separated fields", line_no);
    Graph g;
    try {
      g = from_graph6(fields[0]);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), line_no);
    }
    CensusRecord claimed;
    claimed.key = fields[0];
    claimed.order = parse_int_field(fields[1], line_no);
    claimed.rank = parse_int_field(fields[2], line_no);
    claimed.corank = parse_int_field(fields[3], line_no);
    if (fields[4] != "-") {
      std::stringstream fs(fields[4]);
      std::string tok;
      while (std::getline(fs, tok, ',')) {
        if (tok == "reduced") claimed.flags.reduced = true;
        else if (tok == "coreduced") claimed.flags.coreduced = true;
        else if (tok == "bipartite") claimed.flags.bipartite = true;
        else if (tok == "cobipartite") claimed.flags.cobipartite = true;
        else if (tok == "extremal") claimed.extremal = true;
        else throw FormatError("unknown flag \"" + tok + "\"", line_no);
      }
    }
    CensusRecord actual = make_record(g);
    if (actual.key != claimed.key) throw IntegrityError("graph6 is not in canonical form", line_no);
    if (actual.order != claimed.order) throw IntegrityError("order field disagrees with the graph", line_no);
    if (actual.rank != claimed.rank) throw IntegrityError("rank field disagrees with the graph", line_no);
    if (actual.corank != claimed.corank) throw IntegrityError("corank field disagrees with the graph", line_no);
    if (!(actual.flags == claimed.flags)) throw IntegrityError("flags disagree with the graph", line_no);
    if (!seen.insert(actual.key).second) throw IntegrityError("duplicate record", line_no);
    actual.extremal = claimed.extremal;
    out.push_back(std::move(actual));
  }
  return out;
}

std::vector<CensusRecord> load_census(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return load_census(in);
}

}  // namespace offord
