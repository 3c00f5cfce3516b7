#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "offord/int_matrix.hpp"

namespace offord {

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, const std::vector<std::pair<int, int>>& edges);
  // Throws DomainError unless the matrix is symmetric 0/1 with zero diagonal.
  static Graph from_adjacency(const IntMatrix& a);

  int order() const { return n_; }
  bool adjacent(int u, int v) const { return adj_[index(u, v)] != 0; }
  void add_edge(int u, int v);
  void remove_edge(int u, int v);
  int degree(int v) const;
  std::vector<int> neighbors(int v) const;
  std::vector<std::pair<int, int>> edges() const;
  std::size_t edge_count() const;

  IntMatrix adjacency() const;
  // New vertex n joined to every listed vertex.
  Graph with_vertex(const std::vector<int>& neighborhood) const;
  Graph induced(const std::vector<int>& vertices) const;
  // Vertex v becomes new_label[v].
  Graph relabeled(const std::vector<int>& new_label) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t index(int u, int v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<std::uint8_t> adj_;
};

// Bipartite graph given by its p x q biadjacency matrix. Vertices 0..p-1 are
// the rows, p..p+q-1 the columns.
class BipartiteGraph {
 public:
  explicit BipartiteGraph(IntMatrix b);

  int p() const { return b_.rows(); }
  int q() const { return b_.cols(); }
  const IntMatrix& matrix() const { return b_; }
  Graph graph() const;

 private:
  IntMatrix b_;
};

RankResult graph_rank_result(const Graph& g);
int graph_rank(const Graph& g);
// rank(A + I)
int graph_corank(const Graph& g);

// N(u) = N(v)
bool twins(const Graph& g, int u, int v);
// N[u] = N[v]
bool cotwins(const Graph& g, int u, int v);
bool has_isolated_vertex(const Graph& g);
// No isolated vertex and no twins.
bool is_reduced_graph(const Graph& g);
bool is_coreduced_graph(const Graph& g);

Graph complement(const Graph& g);

// Two-colouring check; fills `side` with 0/1 when given.
bool is_bipartite(const Graph& g, std::vector<int>* side = nullptr);
bool is_cobipartite(const Graph& g);

}  // namespace offord
