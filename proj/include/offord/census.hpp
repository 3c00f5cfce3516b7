#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "offord/graph.hpp"
#include "offord/parallel.hpp"

namespace offord {

struct GraphFlags {
  bool reduced = false;
  bool coreduced = false;
  bool bipartite = false;
  bool cobipartite = false;
  friend bool operator==(const GraphFlags&, const GraphFlags&) = default;
};

GraphFlags graph_flags(const Graph& g);
// Comma-separated names of the set flags, or "-" when none is set.
std::string to_string(const GraphFlags& flags);

struct CensusRecord {
  std::string key;  // graph6 of the canonical form
  Graph graph;      // canonical form
  int order = 0;
  int rank = 0;
  int corank = 0;
  GraphFlags flags;
  bool extremal = false;

  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// Canonicalises g and computes every invariant.
CensusRecord make_record(const Graph& g);

// One canonical representative per isomorphism class on n vertices, sorted by key.
std::vector<Graph> all_graphs(int n);

struct CensusOptions {
  int threads = 1;
  std::optional<std::chrono::milliseconds> budget;
  // bipartite rank census: allow r = 8.
  bool extended = false;
};

struct CensusResult {
  std::string mode;
  int r = 0;
  std::int64_t expected_max = 0;
  std::int64_t max_order = 0;
  // order -> number of isomorphism classes with the target invariant
  std::map<int, std::size_t> classes_by_order;
  std::vector<CensusRecord> extremal;  // sorted by key
  // Key of the graph the closed-form family predicts at the maximum.
  std::string predicted_key;
  bool complete = true;
  std::chrono::milliseconds elapsed{0};

  bool max_matches() const { return max_order == expected_max; }
  bool unique_predicted() const { return extremal.size() == 1 && extremal[0].key == predicted_key; }
};

// Reduced bipartite graphs of rank r (r in {2,4,6}; 8 with options.extended).
CensusResult bipartite_rank_census(int r, const CensusOptions& options = {});

// Coreduced cobipartite graphs of corank r, 3 <= r <= 8.
CensusResult cobipartite_corank_census(int r, const CensusOptions& options = {});

// Grows coreduced graphs of corank r one vertex at a time from the order-r
// seeds; 3 <= r <= 6. Records arrive level by level, sorted by key within a level.
using RecordSink = std::function<void(const CensusRecord&)>;
bool extend_census(int r, const RecordSink& sink, const CensusOptions& options = {});
std::vector<CensusRecord> extend_census(int r, const CensusOptions& options = {});

// Lines "graph6<TAB>order<TAB>rank<TAB>corank<TAB>flags", sorted by key.
void save_census(std::ostream& out, std::vector<CensusRecord> records);
void save_census(const std::string& path, const std::vector<CensusRecord>& records);
// Recomputes every field; FormatError on malformed lines, IntegrityError on mismatches.
std::vector<CensusRecord> load_census(std::istream& in);
std::vector<CensusRecord> load_census(const std::string& path);

}  // namespace offord
