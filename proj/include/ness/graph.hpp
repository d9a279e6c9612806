#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "ness/linalg.hpp"

namespace ness::graph {

// Directed graph on vertices 1..vertex_count. Edges are stored sorted and
// unique; self-loops are rejected at construction (the diagonal of a support
// pattern carries no connectivity information).
struct Digraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int from, int to) const;
};

// Validates endpoints, sorts and deduplicates. Throws on self-loops or
// out-of-range endpoints.
Digraph make_digraph(int vertex_count, std::vector<std::pair<int, int>> edges);

struct SccPartition {
  std::vector<int> component_ids;  // component_ids[v-1], ids in 0..count-1
  int component_count = 0;
};

// Support digraph of a generator set: edge (i, j) iff some matrix in the set
// has |entry(i, j)| > tol * (that matrix's largest absolute entry). The union
// is taken per matrix, never over the sum, so cancellations cannot delete
// edges. Diagonal entries are ignored.
Digraph support_digraph(const std::vector<CMatrix>& generators, double tol = 1e-12);
Digraph support_digraph(const SpCMatrix& m, double tol = 1e-12);
Digraph support_digraph(const SpIMatrix& m);

// Tarjan's single-pass algorithm, iterative; O(V + E).
SccPartition scc(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

// Square boolean matrix with bit-packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int n) : n_(n), stride_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * stride_, 0) {}

  int size() const { return n_; }
  bool get(int i, int j) const { return (bits_[static_cast<std::size_t>(i) * stride_ + j / 64] >> (j % 64)) & 1u; }
  void set(int i, int j) { bits_[static_cast<std::size_t>(i) * stride_ + j / 64] |= std::uint64_t{1} << (j % 64); }

  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * stride_; }
  std::uint64_t* row(int i) { return bits_.data() + static_cast<std::size_t>(i) * stride_; }
  int stride() const { return stride_; }

  bool all_true() const;
  bool all_true_off_diagonal() const;
  bool operator==(const BitMatrix& o) const { return n_ == o.n_ && bits_ == o.bits_; }

 private:
  int n_ = 0;
  int stride_ = 0;
  std::vector<std::uint64_t> bits_;
};

// Transitive closure in the boolean semiring, including the length-zero term
// (the diagonal is always set). Per-vertex traversal; never integer powers.
BitMatrix reachability_closure(const Digraph& g);

// All entries true. With with_identity = false the diagonal is not required.
bool is_entrywise_positive(const BitMatrix& closure, bool with_identity = true);

// Smallest K with (I + A)^K entrywise positive in the boolean semiring, where
// A is the adjacency pattern of g and the identity supplies a self-loop on
// every vertex. Empty when no such K <= vertex_count^2 exists; with full
// self-loops existence coincides with strong connectivity.
std::optional<long> primitivity_index(const Digraph& g);

// Four independently implemented predicates that are provably equivalent for
// the support pattern of a square matrix.
struct EquivalenceSuite {
  bool strongly_connected = false;   // Tarjan SCC count == 1
  bool closure_positive = false;     // per-vertex BFS closure all-true
  bool primitive_with_loops = false; // boolean powering of I + A
  bool irreducible = false;          // Kosaraju condensation has one node
  bool all_equal() const {
    return strongly_connected == closure_positive && closure_positive == primitive_with_loops &&
           primitive_with_loops == irreducible;
  }
};
EquivalenceSuite equivalence_suite(const CMatrix& m, double tol = 1e-12);

// Plain directed-graph text block, one edge per line "i -> j;". Annotation
// edges written by the figure emitters carry attributes and are skipped by
// the parser.
void write_dot(const Digraph& g, std::ostream& os, const std::string& name = "support");
std::vector<std::pair<int, int>> parse_dot_edges(std::istream& is);

}  // namespace ness::graph
