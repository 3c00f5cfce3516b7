#include "offord/graph_canon.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

#include "offord/graph_io.hpp"

namespace offord {

namespace {

using Cells = std::vector<std::vector<int>>;

// Splits cells by neighbour counts into each splitter cell until stable.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  std::vector<int> count(static_cast<std::size_t>(n));
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t s = 0; s < cells.size(); ++s) {
      std::fill(count.begin(), count.end(), 0);
      for (int w : cells[s]) {
        for (int v = 0; v < n; ++v) count[v] += g.adjacent(v, w);
      }
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::stable_sort(cell.begin(), cell.end(), [&](int a, int b) { return count[a] < count[b]; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= cell.size(); ++i) {
          if (i == cell.size() || count[cell[i]] != count[cell[start]]) {
            next.emplace_back(cell.begin() + static_cast<std::ptrdiff_t>(start),
                              cell.begin() + static_cast<std::ptrdiff_t>(i));
            start = i;
          }
        }
      }
      if (next.size() != cells.size()) changed = true;
      cells = std::move(next);
    }
  }
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(static_cast<std::size_t>(n_));
      std::iota(cells[0].begin(), cells[0].end(), 0);
    }
    refine(g_, cells);
    std::vector<int> path;
    search(cells, path);
    return best_label_;
  }

 private:
  struct Leaf {
    std::vector<int> label;   // vertex -> position
    std::vector<int> vertex;  // position -> vertex
    std::vector<int> path;
    std::string key;
  };

  std::string key_of(const std::vector<int>& vertex) const {
    std::string key;
    key.reserve(static_cast<std::size_t>(n_) * (n_ - 1) / 2);
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) key.push_back(g_.adjacent(vertex[i], vertex[j]) ? '1' : '0');
    }
    return key;
  }

  static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
    int c = 0;
    while (c < static_cast<int>(a.size()) && c < static_cast<int>(b.size()) && a[c] == b[c]) ++c;
    return c;
  }

  void add_automorphism(const Leaf& ref, const std::vector<int>& vertex) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[ref.vertex[i]] = vertex[i];
    generators_.push_back(std::move(gamma));
  }

  // Returns the depth to resume at, or -1 to continue normally.
  int search(const Cells& cells, std::vector<int>& path) {
    const int depth = static_cast<int>(path.size());
    if (static_cast<int>(cells.size()) == n_) return leaf(cells, path);

    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;
    }
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());
    std::vector<int> explored;
    for (int v : candidates) {
      if (!explored.empty() && same_orbit(path, v, explored)) continue;
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        std::vector<int> rest;
        for (int w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      refine(g_, child);
      path.push_back(v);
      const int jump = search(child, path);
      path.pop_back();
      if (jump >= 0 && jump < depth) return jump;
    }
    return -1;
  }

  bool same_orbit(const std::vector<int>& path, int v, const std::vector<int>& explored) const {
    UnionFind uf(n_);
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (int p : path) fixes = fixes && gamma[p] == p;
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, gamma[x]);
    }
    const int root = uf.find(v);
    for (int u : explored) {
      if (uf.find(u) == root) return true;
    }
    return false;
  }

  int leaf(const Cells& cells, const std::vector<int>& path) {
    Leaf cur;
    cur.vertex.resize(static_cast<std::size_t>(n_));
    cur.label.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) {
      cur.vertex[i] = cells[i][0];
      cur.label[cells[i][0]] = i;
    }
    cur.key = key_of(cur.vertex);
    cur.path = path;
    if (!first_) {
      first_ = cur;
      best_ = cur;
      best_label_ = cur.label;
      return -1;
    }
    if (cur.key == first_->key) {
      add_automorphism(*first_, cur.vertex);
      return common_prefix(cur.path, first_->path);
    }
    if (cur.key == best_->key) {
      add_automorphism(*best_, cur.vertex);
      return common_prefix(cur.path, best_->path);
    }
    if (cur.key > best_->key) {
      best_label_ = cur.label;
      best_ = std::move(cur);
    }
    return -1;
  }

  const Graph& g_;
  int n_;
  std::optional<Leaf> first_;
  std::optional<Leaf> best_;
  std::vector<int> best_label_;
  std::vector<std::vector<int>> generators_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  if (g.order() == 0) return {};
  return Canonizer(g).run();
}

Graph canonical_graph(const Graph& g) { return g.relabeled(canonical_labeling(g)); }

std::string canonical_key(const Graph& g) { return to_graph6(canonical_graph(g)); }

bool isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.edge_count() == b.edge_count() && canonical_key(a) == canonical_key(b);
}

}  // namespace offord
