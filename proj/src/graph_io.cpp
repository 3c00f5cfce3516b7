#include "offord/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "offord/error.hpp"

namespace offord {

namespace {

void put_size(std::string& out, std::uint64_t n) {
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n < 258048) {
    out.push_back(126);
    for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int s = 30; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63U) + 63));
  }
}

}  // namespace

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  put_size(out, static_cast<std::uint64_t>(n));
  int acc = 0;
  int used = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

Graph from_graph6(std::string_view text) {
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= text.size()) throw FormatError("graph6 string is truncated");
    const int c = static_cast<unsigned char>(text[pos++]);
    if (c < 63 || c > 126) throw FormatError("graph6 byte out of range");
    return c - 63;
  };
  std::uint64_t n = 0;
  int first = next();
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
  } else {
    int second = next();
    int groups = 3;
    if (second == 63) {
      groups = 6;
      second = next();
    }
    n = static_cast<std::uint64_t>(second);
    for (int i = 1; i < groups; ++i) n = (n << 6) | static_cast<std::uint64_t>(next());
  }
  if (n > 100000) throw CapacityError("graph6 order " + std::to_string(n) + " is too large");
  Graph g(static_cast<int>(n));
  int acc = 0;
  int left = 0;
  for (int j = 1; j < static_cast<int>(n); ++j) {
    for (int i = 0; i < j; ++i) {
      if (left == 0) {
        acc = next();
        left = 6;
      }
      --left;
      if ((acc >> left) & 1) g.add_edge(i, j);
    }
  }
  if (left > 0 && (acc & ((1 << left) - 1)) != 0) throw FormatError("graph6 padding bits are not zero");
  if (pos != text.size()) throw FormatError("trailing bytes after graph6 data");
  return g;
}

nlohmann::json to_edge_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.order()}, {"edges", edges}};
}

Graph from_edge_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
    throw FormatError("edge list needs an integer field \"n\"");
  }
  const auto n = j["n"].get<std::int64_t>();
  if (n < 0) throw FormatError("\"n\" must be non-negative");
  if (n > 100000) throw CapacityError("graph order " + std::to_string(n) + " is too large");
  Graph g(static_cast<int>(n));
  if (!j.contains("edges")) return g;
  if (!j["edges"].is_array()) throw FormatError("\"edges\" must be an array");
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw FormatError("each edge must be a pair of integers");
    }
    const auto u = e[0].get<std::int64_t>();
    const auto v = e[1].get<std::int64_t>();
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge endpoint out of range");
    if (u == v) throw FormatError("loops are not allowed");
    g.add_edge(static_cast<int>(u), static_cast<int>(v));
  }
  return g;
}

Graph read_graph(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string all = buf.str();
  std::istringstream lines(all);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line[start] == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(all);
      } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
      }
      return from_edge_json(j);
    }
    if (line.compare(start, 9, "bipartite") == 0) {
      std::istringstream again(all);
      return BipartiteGraph(read_bipartite_matrix(again)).graph();
    }
    std::string g6 = line.substr(start);
    while (!g6.empty() && (g6.back() == ' ' || g6.back() == '\t' || g6.back() == '\r')) g6.pop_back();
    return from_graph6(g6);
  }
  throw FormatError("graph file is empty");
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_graph(in);
}

}  // namespace offord
