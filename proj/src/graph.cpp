#include "offord/graph.hpp"

#include <queue>
#include <string>

#include "offord/error.hpp"

namespace offord {

Graph::Graph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("graph order must be non-negative");
  adj_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(u, v);
}

Graph Graph::from_adjacency(const IntMatrix& a) {
  if (a.rows() != a.cols()) throw DomainError("adjacency matrix must be square");
  Graph g(a.rows());
  for (int i = 0; i < a.rows(); ++i) {
    if (a(i, i) != 0) throw DomainError("adjacency matrix has a non-zero diagonal entry");
    for (int j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0 && a(i, j) != 1) throw DomainError("adjacency entries must be 0 or 1");
      if (a(i, j) != a(j, i)) throw DomainError("adjacency matrix is not symmetric");
      if (a(i, j)) g.adj_[g.index(i, j)] = 1;
    }
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  adj_[index(u, v)] = 1;
  adj_[index(v, u)] = 1;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  adj_[index(u, v)] = 0;
  adj_[index(v, u)] = 0;
}

int Graph::degree(int v) const {
  int d = 0;
  for (int u = 0; u < n_; ++u) d += adjacent(v, u);
  return d;
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (int u = 0; u < n_; ++u) {
    if (adjacent(v, u)) out.push_back(u);
  }
  return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u) {
    for (int v = u + 1; v < n_; ++v) {
      if (adjacent(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

std::size_t Graph::edge_count() const {
  std::size_t c = 0;
  for (auto x : adj_) c += x;
  return c / 2;
}

IntMatrix Graph::adjacency() const {
  IntMatrix a(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) a(i, j) = adjacent(i, j);
  }
  return a;
}

Graph Graph::with_vertex(const std::vector<int>& neighborhood) const {
  Graph g(n_ + 1);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) g.adj_[g.index(i, j)] = adj_[index(i, j)];
  }
  for (int v : neighborhood) g.add_edge(n_, v);
  return g;
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  const int m = static_cast<int>(vertices.size());
  Graph g(m);
  for (int i = 0; i < m; ++i) {
    check_vertex(vertices[i]);
    for (int j = 0; j < m; ++j) g.adj_[g.index(i, j)] = adj_[index(vertices[i], vertices[j])];
  }
  return g;
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
  if (static_cast<int>(new_label.size()) != n_) throw PreconditionError("labeling has the wrong length");
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) g.adj_[g.index(new_label[i], new_label[j])] = adj_[index(i, j)];
  }
  return g;
}

BipartiteGraph::BipartiteGraph(IntMatrix b) : b_(std::move(b)) {
  if (!b_.is_binary()) throw DomainError("biadjacency entries must be 0 or 1");
}

Graph BipartiteGraph::graph() const {
  Graph g(p() + q());
  for (int i = 0; i < p(); ++i) {
    for (int j = 0; j < q(); ++j) {
      if (b_(i, j)) g.add_edge(i, p() + j);
    }
  }
  return g;
}

RankResult graph_rank_result(const Graph& g) { return rank_exact(g.adjacency()); }

int graph_rank(const Graph& g) { return graph_rank_result(g).rank; }

int graph_corank(const Graph& g) {
  return rank_exact(g.adjacency() + IntMatrix::identity(g.order())).rank;
}

bool twins(const Graph& g, int u, int v) {
  if (u == v) throw PreconditionError("twin test needs two distinct vertices");
  for (int w = 0; w < g.order(); ++w) {
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

bool cotwins(const Graph& g, int u, int v) {
  if (u == v) throw PreconditionError("cotwin test needs two distinct vertices");
  if (!g.adjacent(u, v)) return false;
  for (int w = 0; w < g.order(); ++w) {
    if (w == u || w == v) continue;
    if (g.adjacent(u, w) != g.adjacent(v, w)) return false;
  }
  return true;
}

bool has_isolated_vertex(const Graph& g) {
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) return true;
  }
  return false;
}

bool is_reduced_graph(const Graph& g) {
  if (has_isolated_vertex(g)) return false;
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (twins(g, u, v)) return false;
    }
  }
  return true;
}

bool is_coreduced_graph(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (cotwins(g, u, v)) return false;
    }
  }
  return true;
}

Graph complement(const Graph& g) {
  Graph c(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) c.add_edge(u, v);
    }
  }
  return c;
}

bool is_bipartite(const Graph& g, std::vector<int>* side) {
  std::vector<int> colour(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<int> todo;
    todo.push(s);
    while (!todo.empty()) {
      const int u = todo.front();
      todo.pop();
      for (int v = 0; v < g.order(); ++v) {
        if (!g.adjacent(u, v)) continue;
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          todo.push(v);
        } else if (colour[v] == colour[u]) {
          return false;
        }
      }
    }
  }
  if (side) *side = std::move(colour);
  return true;
}

bool is_cobipartite(const Graph& g) { return is_bipartite(complement(g)); }

}  // namespace offord
