#pragma once

#include <cstdint>
#include <vector>

#include "bentgraph/boolean_function.h"

namespace bentgraph {

// Cay(Z2^n, C): vertices are all of Z2^n and u ~ w iff u xor w is in C.
// Loops are allowed: 0 in C puts a loop on every vertex.
class CayleyGraph {
 public:
  explicit CayleyGraph(PointSet connection_set);

  int arity() const { return set_.arity(); }
  std::uint32_t vertex_count() const { return std::uint32_t{1} << set_.arity(); }
  const PointSet& connection_set() const { return set_; }
  bool has_loops() const { return member_[0] != 0; }

  bool adjacent(std::uint32_t u, std::uint32_t w) const { return member_[u ^ w] != 0; }

  // |C|; a loop counts once.
  std::size_t degree() const { return set_.size(); }

  // Calls visit(u, w) for every non-loop edge with u < w, ordered by (u, w).
  template <typename Visit>
  void for_each_edge(Visit&& visit) const {
    const std::uint32_t v = vertex_count();
    for (std::uint32_t u = 0; u < v; ++u) {
      for (std::uint32_t w = u + 1; w < v; ++w) {
        if (adjacent(u, w)) visit(u, w);
      }
    }
  }

  // Calls visit(u) for every vertex carrying a loop.
  template <typename Visit>
  void for_each_loop(Visit&& visit) const {
    if (!has_loops()) return;
    for (std::uint32_t u = 0; u < vertex_count(); ++u) visit(u);
  }

  // Dense 0/1 adjacency matrix, loops on the diagonal. Guarded by
  // max_elimination_arity.
  std::vector<std::vector<std::int64_t>> adjacency_matrix(
      const ResourceLimits& limits = {}) const;

 private:
  PointSet set_;
  std::vector<std::uint8_t> member_;
};

CayleyGraph build_cayley(const BooleanFunction& f);

// Dimension of the GF(2) span of the members.
int gf2_span_dim(const PointSet& s);

// 2^(n - dim <Omega_f>): one component per coset of the span.
std::uint64_t component_count(const BooleanFunction& f);

// Component count by breadth-first search over the graph.
std::uint64_t component_count_by_search(const CayleyGraph& g);

// Number of nonzero eigenvalues. Up to max_elimination_arity this is also
// checked against elimination_rank; disagreement throws InvariantViolation.
std::uint64_t adjacency_rank(const BooleanFunction& f, const ResourceLimits& limits = {});

// Exact rank of the integer adjacency matrix by fraction-free elimination.
std::uint64_t elimination_rank(const CayleyGraph& g, const ResourceLimits& limits = {});

struct SymmetryReport {
  bool connected = false;
  bool has_minus_lambda0 = false;
  bool spectrum_symmetric = false;
};

SymmetryReport spectrum_symmetry_report(const BooleanFunction& f,
                                        const ResourceLimits& limits = {});

}  // namespace bentgraph
