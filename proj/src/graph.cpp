#include "ness/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <regex>
#include <stdexcept>
#include <string>

namespace ness::graph {

namespace {

// 0-based adjacency lists from 1-based edges.
std::vector<std::vector<int>> adjacency(const Digraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) adj[u - 1].push_back(v - 1);
  return adj;
}

std::vector<std::vector<int>> reverse_adjacency(const Digraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count);
  for (const auto& [u, v] : g.edges) adj[v - 1].push_back(u - 1);
  return adj;
}

}  // namespace

bool Digraph::has_edge(int from, int to) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

Digraph make_digraph(int vertex_count, std::vector<std::pair<int, int>> edges) {
  if (vertex_count < 1) throw std::invalid_argument("make_digraph: vertex_count must be positive");
  for (const auto& [u, v] : edges) {
    if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
      throw std::invalid_argument("make_digraph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("make_digraph: self-loops are not stored");
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Digraph{vertex_count, std::move(edges)};
}

Digraph support_digraph(const std::vector<CMatrix>& generators, double tol) {
  if (generators.empty()) throw std::invalid_argument("support_digraph: empty generator set");
  if (tol < 0) throw std::invalid_argument("support_digraph: negative tolerance");
  const Eigen::Index dim = generators.front().rows();
  std::vector<std::pair<int, int>> edges;
  for (const CMatrix& m : generators) {
    if (m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("support_digraph: dimension mismatch in generator set");
    const double scale = max_abs(m);
    if (scale == 0.0) continue;
    const double thr = tol * scale;
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        if (i != j && std::abs(m(i, j)) > thr)
          edges.emplace_back(static_cast<int>(i) + 1, static_cast<int>(j) + 1);
  }
  return make_digraph(static_cast<int>(dim), std::move(edges));
}

Digraph support_digraph(const SpCMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("support_digraph: matrix must be square");
  double scale = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpCMatrix::InnerIterator it(m, k); it; ++it) scale = std::max(scale, std::abs(it.value()));
  std::vector<std::pair<int, int>> edges;
  const double thr = tol * scale;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpCMatrix::InnerIterator it(m, k); it; ++it)
      if (it.row() != it.col() && std::abs(it.value()) > thr)
        edges.emplace_back(static_cast<int>(it.row()) + 1, static_cast<int>(it.col()) + 1);
  return make_digraph(static_cast<int>(m.rows()), std::move(edges));
}

Digraph support_digraph(const SpIMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("support_digraph: matrix must be square");
  std::vector<std::pair<int, int>> edges;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SpIMatrix::InnerIterator it(m, k); it; ++it)
      if (it.row() != it.col() && it.value() != 0)
        edges.emplace_back(static_cast<int>(it.row()) + 1, static_cast<int>(it.col()) + 1);
  return make_digraph(static_cast<int>(m.rows()), std::move(edges));
}

SccPartition scc(const Digraph& g) {
  const int n = g.vertex_count;
  const auto adj = adjacency(g);

  std::vector<int> index(n, -1), lowlink(n, 0), component(n, -1);
  std::vector<bool> on_stack(n, false);
  std::vector<int> stack;
  int next_index = 0, count = 0;

  // Iterative Tarjan; frame.second is the position within adj[frame.first].
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (index[root] != -1) continue;
    frames.emplace_back(root, 0);
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        const int w = adj[v][pos++];
        if (index[w] == -1) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.emplace_back(w, 0);
        } else if (on_stack[w]) {
          lowlink[v] = std::min(lowlink[v], index[w]);
        }
      } else {
        if (lowlink[v] == index[v]) {
          int w;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            component[w] = count;
          } while (w != v);
          ++count;
        }
        const int child = v;
        frames.pop_back();
        if (!frames.empty())
          lowlink[frames.back().first] = std::min(lowlink[frames.back().first], lowlink[child]);
      }
    }
  }
  return SccPartition{std::move(component), count};
}

bool is_strongly_connected(const Digraph& g) { return scc(g).component_count == 1; }

bool BitMatrix::all_true() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!get(i, j)) return false;
  return true;
}

bool BitMatrix::all_true_off_diagonal() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !get(i, j)) return false;
  return true;
}

BitMatrix reachability_closure(const Digraph& g) {
  const int n = g.vertex_count;
  const auto adj = adjacency(g);
  BitMatrix closure(n);
  std::vector<int> worklist;
  std::vector<bool> visited(n);
  for (int s = 0; s < n; ++s) {
    std::fill(visited.begin(), visited.end(), false);
    worklist.assign(1, s);
    visited[s] = true;
    while (!worklist.empty()) {
      const int v = worklist.back();
      worklist.pop_back();
      closure.set(s, v);
      for (int w : adj[v])
        if (!visited[w]) {
          visited[w] = true;
          worklist.push_back(w);
        }
    }
  }
  return closure;
}

bool is_entrywise_positive(const BitMatrix& closure, bool with_identity) {
  return with_identity ? closure.all_true() : closure.all_true_off_diagonal();
}

namespace {

// Boolean product out = a * b over bit-packed rows.
BitMatrix bool_multiply(const BitMatrix& a, const BitMatrix& b) {
  const int n = a.size();
  BitMatrix out(n);
  for (int i = 0; i < n; ++i) {
    std::uint64_t* dst = out.row(i);
    for (int j = 0; j < n; ++j) {
      if (!a.get(i, j)) continue;
      const std::uint64_t* src = b.row(j);
      for (int w = 0; w < b.stride(); ++w) dst[w] |= src[w];
    }
  }
  return out;
}

BitMatrix adjacency_bits(const Digraph& g, bool with_loops) {
  BitMatrix m(g.vertex_count);
  for (const auto& [u, v] : g.edges) m.set(u - 1, v - 1);
  if (with_loops)
    for (int i = 0; i < g.vertex_count; ++i) m.set(i, i);
  return m;
}

}  // namespace

std::optional<long> primitivity_index(const Digraph& g) {
  const BitMatrix base = adjacency_bits(g, /*with_loops=*/true);
  BitMatrix power = base;
  const long limit = static_cast<long>(g.vertex_count) * g.vertex_count;
  for (long k = 1; k <= limit; ++k) {
    if (power.all_true()) return k;
    BitMatrix next = bool_multiply(power, base);
    if (next == power) return std::nullopt;  // monotone fixpoint, never positive
    power = std::move(next);
  }
  return std::nullopt;
}

namespace {

// Kosaraju two-pass component count; intentionally a different algorithm
// than scc() so the equivalence suite cross-checks independent code paths.
int kosaraju_component_count(const Digraph& g) {
  const int n = g.vertex_count;
  const auto adj = adjacency(g);
  const auto radj = reverse_adjacency(g);

  std::vector<int> order;
  order.reserve(n);
  std::vector<bool> visited(n, false);
  std::vector<std::pair<int, std::size_t>> frames;
  for (int root = 0; root < n; ++root) {
    if (visited[root]) continue;
    visited[root] = true;
    frames.emplace_back(root, 0);
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      if (pos < adj[v].size()) {
        const int w = adj[v][pos++];
        if (!visited[w]) {
          visited[w] = true;
          frames.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        frames.pop_back();
      }
    }
  }

  std::fill(visited.begin(), visited.end(), false);
  int count = 0;
  std::vector<int> worklist;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (visited[*it]) continue;
    ++count;
    worklist.assign(1, *it);
    visited[*it] = true;
    while (!worklist.empty()) {
      const int v = worklist.back();
      worklist.pop_back();
      for (int w : radj[v])
        if (!visited[w]) {
          visited[w] = true;
          worklist.push_back(w);
        }
    }
  }
  return count;
}

}  // namespace

EquivalenceSuite equivalence_suite(const CMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("equivalence_suite: matrix must be square");
  const Digraph g = support_digraph(std::vector<CMatrix>{m}, tol);
  EquivalenceSuite suite;
  suite.strongly_connected = scc(g).component_count == 1;
  suite.closure_positive = is_entrywise_positive(reachability_closure(g), true);
  suite.primitive_with_loops = primitivity_index(g).has_value();
  suite.irreducible = kosaraju_component_count(g) == 1;
  return suite;
}

void write_dot(const Digraph& g, std::ostream& os, const std::string& name) {
  os << "digraph " << name << " {\n";
  for (int v = 1; v <= g.vertex_count; ++v) os << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
}

std::vector<std::pair<int, int>> parse_dot_edges(std::istream& is) {
  // Attribute-free edge lines only; annotation edges carry a [...] suffix.
  static const std::regex edge_re(R"(^\s*(\d+)\s*->\s*(\d+)\s*;\s*$)");
  std::vector<std::pair<int, int>> edges;
  std::string line;
  std::smatch m;
  while (std::getline(is, line))
    if (std::regex_match(line, m, edge_re)) edges.emplace_back(std::stoi(m[1]), std::stoi(m[2]));
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

}  // namespace ness::graph
