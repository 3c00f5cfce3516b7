#include "offord/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "offord/bounds.hpp"
#include "offord/census.hpp"
#include "offord/error.hpp"
#include "offord/extremal.hpp"
#include "offord/graph_canon.hpp"
#include "offord/graph_io.hpp"
#include "offord/omega.hpp"
#include "offord/parallel.hpp"
#include "offord/templates.hpp"
#include "offord/verify.hpp"

namespace offord::cli {

namespace {

using nlohmann::json;

struct Config {
  std::string format = "auto";
  std::string output;
  int threads = 1;
  double budget = 0;
  std::string input;
  bool members = false;
  int k = 0;
  int l = 0;
  bool all = false;
  std::string part;
  bool no_exclusion = false;
  bool restrict_cols = false;
  std::size_t witness_limit = 100;
  std::string family;
  bool complement = false;
  std::string mode;
  int r = 0;
  bool extended = false;
  std::string save;
  bool elapsed = true;
};

json matrix_rows(const SignMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    std::string s;
    for (int j = 0; j < m.cols(); ++j) s += (j ? " " : "") + std::to_string(m(i, j));
    rows.push_back(s);
  }
  return rows;
}

SignMatrix load_matrix(const std::string& path) {
  if (path == "-") return read_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_matrix(in);
}

Graph load_graph(const std::string& path) {
  if (path == "-") return read_graph(std::cin);
  return read_graph_file(path);
}

IntMatrix load_bipartite(const std::string& path) {
  if (path == "-") return read_bipartite_matrix(std::cin);
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_bipartite_matrix(in);
}

class Runner {
 public:
  Runner(const Config& cfg, std::ostream& out) : cfg_(cfg), out_(out) {}

  std::string format(const char* fallback) const { return cfg_.format == "auto" ? fallback : cfg_.format; }

  void emit(const std::string& text) {
    if (cfg_.output.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(cfg_.output);
    if (!f) throw FormatError("cannot write " + cfg_.output);
    f << text;
  }
  void emit(const json& j) { emit(j.dump(2) + "\n"); }

  VerifyOptions verify_options() const {
    VerifyOptions o;
    o.threads = cfg_.threads;
    if (cfg_.budget > 0) o.budget = std::chrono::milliseconds(static_cast<std::int64_t>(cfg_.budget * 1000));
    o.disable_exclusion = cfg_.no_exclusion;
    o.restrict_cols = cfg_.restrict_cols;
    o.witness_limit = cfg_.witness_limit;
    return o;
  }

  CensusOptions census_options() const {
    CensusOptions o;
    o.threads = cfg_.threads;
    if (cfg_.budget > 0) o.budget = std::chrono::milliseconds(static_cast<std::int64_t>(cfg_.budget * 1000));
    o.extended = cfg_.extended;
    return o;
  }

  int omega() {
    const SignMatrix a = load_matrix(cfg_.input);
    OmegaResult res;
    if (a.is_sign() && !cfg_.members) {
      res.count = omega_count_fast(a);
    } else {
      res = omega_enumerate(a, cfg_.members);
    }
    const std::string f = format("text");
    if (f == "json") {
      json j = {{"rows", a.rows()}, {"cols", a.cols()}, {"count", res.count}};
      if (res.members) {
        j["members"] = json::array();
        for (const auto& b : *res.members) j["members"].push_back(b.to_string());
      }
      emit(j);
    } else if (f == "csv") {
      std::string s = "count\n" + std::to_string(res.count) + "\n";
      if (res.members) {
        s += "member\n";
        for (const auto& b : *res.members) s += b.to_string() + "\n";
      }
      emit(s);
    } else {
      std::string s = std::to_string(res.count) + "\n";
      if (res.members) {
        for (const auto& b : *res.members) s += b.to_string() + "\n";
      }
      emit(s);
    }
    return kOk;
  }

  int normalize() {
    const SignMatrix a = load_matrix(cfg_.input);
    const NormalizeOutcome n = normalize_to_reduced(a);
    const std::string f = format("text");
    if (f == "json") {
      if (n.short_circuited()) {
        emit(json{{"shortCircuit", {{"row", n.certificate().row}, {"bound", n.certificate().bound}}}});
      } else {
        emit(json{{"reduced", matrix_rows(n.reduced())}, {"rows", n.reduced().rows()}, {"cols", n.reduced().cols()}});
      }
    } else if (n.short_circuited()) {
      emit("short-circuit row " + std::to_string(n.certificate().row) + " bound " +
           std::to_string(n.certificate().bound) + "\n");
    } else {
      emit(to_text(n.reduced()));
    }
    return kOk;
  }

  int bound() {
    const BoundSpec b = lo_bound(cfg_.k, cfg_.l);
    const std::string f = format("text");
    if (f == "json") {
      emit(json{{"k", b.k}, {"l", b.l}, {"value", b.value}});
    } else if (f == "csv") {
      emit("k,l,value\n" + std::to_string(b.k) + "," + std::to_string(b.l) + "," + std::to_string(b.value) + "\n");
    } else {
      emit(std::to_string(b.value) + "\n");
    }
    return kOk;
  }

  int classify() {
    const SignMatrix a = load_matrix(cfg_.input);
    const EqualityClass c = classify_equality(a);
    if (format("text") == "json") {
      json j = {{"class", to_string(c.kind)}, {"description", c.describe()}};
      if (!c.signs.empty()) j["signs"] = c.signs;
      if (c.b) j["b"] = *c.b;
      if (c.c) j["c"] = *c.c;
      emit(j);
    } else {
      emit(c.describe() + "\n");
    }
    return kOk;
  }

  int report_exit(const VerificationReport& r) const {
    if (!r.violations.empty()) return kViolation;
    if (r.budget_exhausted) return kCapacity;
    return kOk;
  }

  std::string report_text(const VerificationReport& r) const {
    std::ostringstream s;
    s << r.scope << ": " << r.verdict() << "\n";
    s << "candidates " << r.candidates << "\n";
    if (r.excluded) s << "excluded " << r.excluded << "\n";
    s << "bound " << r.bound << "\n";
    if (r.max_witness) {
      s << "maxOmega " << r.max_witness->omega << " at " << to_compact(r.max_witness->matrix) << "\n";
      if (r.max_ratio.num) s << "maxRatio " << r.max_ratio.to_string() << "\n";
    }
    s << "violations " << r.violations.size() << "\n";
    s << "equalityCount " << r.equality_count << "\n";
    s << "coverage " << r.units_done << "/" << r.units_total << "\n";
    return s.str();
  }

  int verify_lemma() {
    const VerificationReport r = verify_lemma_comput(parse_lemma_part(cfg_.part), verify_options());
    const std::string f = format("json");
    if (f == "json") {
      emit(to_json(r, cfg_.elapsed));
    } else {
      emit(report_text(r));
    }
    return report_exit(r);
  }

  int verify_theorem() {
    std::vector<std::pair<int, int>> cases;
    if (cfg_.all) {
      for (int k = 1; k <= 3; ++k) {
        for (int l = 1; l <= 6; ++l) cases.emplace_back(k, l);
      }
    } else {
      if (cfg_.k < 1 || cfg_.l < 1) throw PreconditionError("verify-theorem needs --k and --l, or --all");
      cases.emplace_back(cfg_.k, cfg_.l);
    }
    json reports = json::array();
    std::string text;
    int code = kOk;
    for (auto [k, l] : cases) {
      const VerificationReport r = verify_main_theorem(k, l, verify_options());
      reports.push_back(to_json(r, cfg_.elapsed));
      text += report_text(r);
      const int c = report_exit(r);
      if (c == kViolation || (c == kCapacity && code == kOk)) code = c;
    }
    if (format("json") == "json") {
      emit(cfg_.all ? reports : reports[0]);
    } else {
      emit(text);
    }
    return code;
  }

  int cost_estimate() {
    const CostEstimate c = estimate_cost_t7();
    const std::string f = format("text");
    if (f == "json") {
      json terms = json::array();
      for (const auto& t : c.breakdown) {
        terms.push_back({{"i", t.i}, {"j", t.j}, {"r", t.r}, {"rowChoices", t.row_choices},
                         {"innerProducts", t.inner_products}});
      }
      emit(json{{"rowChoices", c.row_choices}, {"innerProducts", c.inner_products}, {"breakdown", terms}});
    } else if (f == "csv") {
      std::string s = "i,j,r,rowChoices,innerProducts\n";
      for (const auto& t : c.breakdown) {
        s += std::to_string(t.i) + "," + std::to_string(t.j) + "," + std::to_string(t.r) + "," +
             std::to_string(t.row_choices) + "," + std::to_string(t.inner_products) + "\n";
      }
      emit(s);
    } else {
      emit("rowChoices " + std::to_string(c.row_choices) + "\ninnerProducts " + std::to_string(c.inner_products) +
           "\n");
    }
    return kOk;
  }

  int rank(bool corank) {
    const Graph g = load_graph(cfg_.input);
    const IntMatrix m = corank ? g.adjacency() + IntMatrix::identity(g.order()) : g.adjacency();
    const RankResult r = rank_exact(m);
    if (format("text") == "json") {
      emit(json{{corank ? "corank" : "rank", r.rank}, {"order", g.order()}, {"method", to_string(r.method)}});
    } else {
      emit(std::to_string(r.rank) + "\n");
    }
    return kOk;
  }

  int construct() {
    const ExtremalFamily fam = parse_extremal_family(cfg_.family);
    const BipartiteGraph b = build_extremal(fam, cfg_.l);
    Graph g = b.graph();
    if (cfg_.complement) g = complement(g);
    const std::string f = format("text");
    if (f == "json") {
      json j = {{"family", to_string(fam)}, {"l", cfg_.l}, {"complement", cfg_.complement},
                {"order", g.order()}, {"graph6", to_graph6(g)}};
      if (!cfg_.complement) {
        j["p"] = b.p();
        j["q"] = b.q();
      }
      j["edges"] = to_edge_json(g)["edges"];
      emit(j);
    } else if (cfg_.complement) {
      emit(to_graph6(g) + "\n");
    } else {
      std::ostringstream s;
      write_bipartite_matrix(s, b.matrix());
      emit(s.str());
    }
    return kOk;
  }

  static json record_json(const CensusRecord& r) {
    return {{"graph6", r.key}, {"order", r.order}, {"rank", r.rank}, {"corank", r.corank},
            {"flags", to_string(r.flags)}, {"extremal", r.extremal}};
  }

  int census() {
    const CensusOptions opts = census_options();
    json j;
    json violations = json::array();
    bool complete = true;
    std::vector<CensusRecord> saved;
    if (cfg_.mode == "bipartite-rank" || cfg_.mode == "cobipartite-corank") {
      const CensusResult c = cfg_.mode == "bipartite-rank" ? bipartite_rank_census(cfg_.r, opts)
                                                           : cobipartite_corank_census(cfg_.r, opts);
      complete = c.complete;
      j = {{"mode", c.mode}, {"r", c.r}, {"maxOrder", c.max_order}, {"expectedMax", c.expected_max},
           {"predicted", c.predicted_key}};
      json by_order = json::object();
      for (auto [o, n] : c.classes_by_order) by_order[std::to_string(o)] = n;
      j["classesByOrder"] = by_order;
      j["extremal"] = json::array();
      for (const auto& rec : c.extremal) j["extremal"].push_back(record_json(rec));
      if (complete && !c.max_matches()) {
        violations.push_back({{"kind", "max-order"}, {"expected", c.expected_max}, {"found", c.max_order}});
      }
      if (complete && !c.unique_predicted()) {
        json keys = json::array();
        for (const auto& rec : c.extremal) keys.push_back(rec.key);
        violations.push_back({{"kind", "extremal-not-unique-predicted"}, {"predicted", c.predicted_key},
                              {"found", keys}});
      }
      saved = c.extremal;
      if (cfg_.elapsed) j["elapsedMs"] = c.elapsed.count();
    } else if (cfg_.mode == "extend") {
      const auto start = Clock::now();
      std::map<int, std::size_t> by;
      std::int64_t max_order = 0;
      complete = extend_census(cfg_.r, [&](const CensusRecord& rec) {
        ++by[rec.order];
        max_order = std::max<std::int64_t>(max_order, rec.order);
        saved.push_back(rec);
      }, opts);
      j = {{"mode", "extend"}, {"r", cfg_.r}, {"total", saved.size()}, {"maxOrder", max_order}};
      json by_order = json::object();
      for (auto [o, n] : by) by_order[std::to_string(o)] = n;
      j["classesByOrder"] = by_order;
      j["extremal"] = json::array();
      for (auto& rec : saved) {
        if (rec.order == max_order) {
          rec.extremal = true;
          j["extremal"].push_back(record_json(rec));
        }
      }
      if (cfg_.elapsed) {
        j["elapsedMs"] = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
      }
    } else {
      throw PreconditionError("census mode must be bipartite-rank, cobipartite-corank or extend");
    }
    j["complete"] = complete;
    j["violations"] = violations;
    j["verdict"] = !violations.empty() ? "fail" : (complete ? "pass" : "partial");
    if (!cfg_.save.empty()) save_census(cfg_.save, saved);
    if (format("json") == "json") {
      emit(j);
    } else {
      std::ostringstream s;
      s << j["mode"].get<std::string>() << " r=" << cfg_.r << ": " << j["verdict"].get<std::string>() << "\n";
      s << "maxOrder " << j["maxOrder"].dump() << "\n";
      for (const auto& e : j["extremal"]) s << "extremal " << e["graph6"].get<std::string>() << "\n";
      emit(s.str());
    }
    if (!violations.empty()) return kViolation;
    return complete ? kOk : kCapacity;
  }

  int embed_check() {
    const IntMatrix b = load_bipartite(cfg_.input);
    const bool ok = embeds_in_template(b, cfg_.l);
    if (format("text") == "json") {
      json j = {{"embeds", ok}, {"p", b.rows()}, {"q", b.cols()}, {"l", cfg_.l}};
      if (cfg_.l == 6) {
        auto x = exceptional_parameter(b);
        j["exceptionalParameter"] = x ? json(*x) : json(nullptr);
      }
      emit(j);
    } else {
      emit(std::string(ok ? "true" : "false") + "\n");
    }
    return kOk;
  }

 private:
  const Config& cfg_;
  std::ostream& out_;
};

void error_json(std::ostream& err, const std::string& kind, const std::string& message, int line = 0) {
  json j = {{"error", kind}, {"message", message}};
  if (line > 0) j["line"] = line;
  err << j.dump() << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  cfg.threads = default_thread_count();
  CLI::App app{"Littlewood-Offord counting, exhaustive verification and rank/corank census tools", "offord"};
  app.require_subcommand(1);
  app.option_defaults()->always_capture_default();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"auto", "json", "text", "csv"}));
    sub->add_option("-o,--output", cfg.output, "Write the report to a file");
  };
  auto parallel = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads, "Worker threads (default: OFFORD_THREADS or hardware count)")
        ->check(CLI::Range(1, 4096));
    sub->add_option("--budget", cfg.budget, "Wall-clock budget in seconds")->check(CLI::PositiveNumber);
    sub->add_flag("--elapsed,!--no-elapsed", cfg.elapsed, "Include elapsed-time fields");
  };

  auto* omega = app.add_subcommand("omega", "Count Omega(A) for a matrix file");
  omega->add_option("matrix", cfg.input, "Matrix file ('-' for stdin)")->required();
  omega->add_flag("--members", cfg.members, "List the members");
  common(omega);

  auto* normalize = app.add_subcommand("normalize", "Reduce a matrix file");
  normalize->add_option("matrix", cfg.input)->required();
  common(normalize);

  auto* bound = app.add_subcommand("bound", "Upper bound on |Omega| for reduced k x l matrices");
  bound->add_option("--k", cfg.k)->required()->check(CLI::Range(1, 1 << 20));
  bound->add_option("--l", cfg.l)->required()->check(CLI::Range(1, 1 << 20));
  common(bound);

  auto* classify = app.add_subcommand("classify", "Match a reduced matrix against the equality templates");
  classify->add_option("matrix", cfg.input)->required();
  common(classify);

  auto* lemma = app.add_subcommand("verify-lemma", "Exhaustive check of one two/three-row bound");
  lemma->add_option("--part", cfg.part, "i, ii, iii, iv or v")->required();
  lemma->add_flag("--no-exclusion", cfg.no_exclusion, "Keep the excluded block shapes (diagnostic)");
  lemma->add_flag("--restrict", cfg.restrict_cols, "Part iv only: stop at 12 columns");
  lemma->add_option("--witness-limit", cfg.witness_limit, "Equality witnesses kept in the report");
  common(lemma);
  parallel(lemma);

  auto* theorem = app.add_subcommand("verify-theorem", "Exhaustive check of the bound for k x l matrices");
  theorem->add_option("--k", cfg.k)->check(CLI::Range(1, 3));
  theorem->add_option("--l", cfg.l)->check(CLI::Range(1, 6));
  theorem->add_flag("--all", cfg.all, "Every k <= 3, l <= 6");
  theorem->add_option("--witness-limit", cfg.witness_limit);
  common(theorem);
  parallel(theorem);

  auto* cost = app.add_subcommand("cost-estimate", "Closed-form search cost for the weight-7 two-row sweep");
  common(cost);

  auto* rank = app.add_subcommand("rank", "Rank of a graph's adjacency matrix");
  rank->add_option("graph", cfg.input, "graph6, JSON edge list or bipartite text")->required();
  common(rank);
  auto* corank = app.add_subcommand("corank", "Rank of A(G) + I");
  corank->add_option("graph", cfg.input)->required();
  common(corank);

  auto* construct = app.add_subcommand("construct", "Build an extremal bipartite graph");
  construct->add_option("--family", cfg.family, "B, Bprime or D")->required();
  construct->add_option("--l", cfg.l)->required();
  construct->add_flag("--complement", cfg.complement, "Emit the complement (graph6)");
  common(construct);

  auto* census = app.add_subcommand("census", "Isomorph-free extremal census");
  census->add_option("--mode", cfg.mode, "bipartite-rank, cobipartite-corank or extend")
      ->required()
      ->check(CLI::IsMember({"bipartite-rank", "cobipartite-corank", "extend"}));
  census->add_option("--r", cfg.r)->required();
  census->add_flag("--extended", cfg.extended, "Allow the larger bipartite range");
  census->add_option("--save", cfg.save, "Write the records to a census file");
  common(census);
  parallel(census);

  auto* embed = app.add_subcommand("embed-check", "Test whether a 0/1 matrix sits inside the stacked template");
  embed->add_option("matrix", cfg.input, "Bipartite text file")->required();
  embed->add_option("--l", cfg.l)->required();
  common(embed);

  std::vector<std::string> rev(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    error_json(err, "usage", e.what());
    return kUsage;
  }

  Runner runner(cfg, out);
  try {
    if (omega->parsed()) return runner.omega();
    if (normalize->parsed()) return runner.normalize();
    if (bound->parsed()) return runner.bound();
    if (classify->parsed()) return runner.classify();
    if (lemma->parsed()) return runner.verify_lemma();
    if (theorem->parsed()) return runner.verify_theorem();
    if (cost->parsed()) return runner.cost_estimate();
    if (rank->parsed()) return runner.rank(false);
    if (corank->parsed()) return runner.rank(true);
    if (construct->parsed()) return runner.construct();
    if (census->parsed()) return runner.census();
    if (embed->parsed()) return runner.embed_check();
  } catch (const FormatError& e) {
    error_json(err, e.kind(), e.what(), e.line());
    return kUsage;
  } catch (const IntegrityError& e) {
    error_json(err, e.kind(), e.what(), e.line());
    return kUsage;
  } catch (const CapacityError& e) {
    error_json(err, e.kind(), e.what());
    return kCapacity;
  } catch (const Error& e) {
    error_json(err, e.kind(), e.what());
    return kUsage;
  } catch (const std::exception& e) {
    error_json(err, "internal", e.what());
    return kUsage;
  }
  error_json(err, "usage", "no subcommand");
  return kUsage;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv, argv + argc);
  return run(args, out, err);
}

}  // namespace offord::cli
