#include "bentgraph/cayley.h"

#include <algorithm>
#include <queue>

#include <boost/multiprecision/cpp_int.hpp>

#include "bentgraph/transform.h"

namespace bentgraph {

namespace {

void require_elimination_arity(int n, const ResourceLimits& limits) {
  if (n > limits.max_elimination_arity) {
    throw ResourceLimitExceeded("dense adjacency matrix limited to n <= " +
                                std::to_string(limits.max_elimination_arity) + ", got n=" +
                                std::to_string(n));
  }
}

}  // namespace

CayleyGraph::CayleyGraph(PointSet connection_set)
    : set_(std::move(connection_set)), member_(std::size_t{1} << set_.arity(), 0) {
  for (auto c : set_.members()) member_[c] = 1;
}

std::vector<std::vector<std::int64_t>> CayleyGraph::adjacency_matrix(
    const ResourceLimits& limits) const {
  require_elimination_arity(arity(), limits);
  const std::uint32_t v = vertex_count();
  std::vector<std::vector<std::int64_t>> a(v, std::vector<std::int64_t>(v, 0));
  for (std::uint32_t u = 0; u < v; ++u) {
    for (std::uint32_t w = 0; w < v; ++w) a[u][w] = adjacent(u, w) ? 1 : 0;
  }
  return a;
}

CayleyGraph build_cayley(const BooleanFunction& f) { return CayleyGraph(support(f)); }

int gf2_span_dim(const PointSet& s) {
  // basis[b] holds a reduced vector whose leading bit is b.
  std::vector<std::uint32_t> basis(static_cast<std::size_t>(s.arity()), 0);
  int dim = 0;
  for (std::uint32_t x : s.members()) {
    for (int b = s.arity() - 1; b >= 0 && x != 0; --b) {
      if (!((x >> b) & 1u)) continue;
      if (basis[static_cast<std::size_t>(b)] == 0) {
        basis[static_cast<std::size_t>(b)] = x;
        ++dim;
        x = 0;
      } else {
        x ^= basis[static_cast<std::size_t>(b)];
      }
    }
  }
  return dim;
}

std::uint64_t component_count(const BooleanFunction& f) {
  return std::uint64_t{1} << (f.arity() - gf2_span_dim(support(f)));
}

std::uint64_t component_count_by_search(const CayleyGraph& g) {
  const std::uint32_t v = g.vertex_count();
  std::vector<std::uint8_t> seen(v, 0);
  std::uint64_t components = 0;
  std::queue<std::uint32_t> frontier;
  for (std::uint32_t start = 0; start < v; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = 1;
    frontier.push(start);
    while (!frontier.empty()) {
      const std::uint32_t u = frontier.front();
      frontier.pop();
      for (auto c : g.connection_set().members()) {
        const std::uint32_t w = u ^ c;
        if (!seen[w]) {
          seen[w] = 1;
          frontier.push(w);
        }
      }
    }
  }
  return components;
}

std::uint64_t elimination_rank(const CayleyGraph& g, const ResourceLimits& limits) {
  using boost::multiprecision::cpp_int;
  const auto dense = g.adjacency_matrix(limits);
  const std::size_t size = dense.size();
  std::vector<std::vector<cpp_int>> a(size, std::vector<cpp_int>(size));
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) a[i][j] = dense[i][j];
  }

  // Bareiss fraction-free elimination; entries stay integral minors.
  cpp_int prev_pivot = 1;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < size && rank < size; ++col) {
    std::size_t pivot = rank;
    while (pivot < size && a[pivot][col] == 0) ++pivot;
    if (pivot == size) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t i = rank + 1; i < size; ++i) {
      for (std::size_t j = col + 1; j < size; ++j) {
        cpp_int numerator = a[rank][col] * a[i][j] - a[i][col] * a[rank][j];
        if (numerator % prev_pivot != 0) throw InvariantViolation("inexact Bareiss division");
        a[i][j] = numerator / prev_pivot;
      }
      a[i][col] = 0;
    }
    prev_pivot = a[rank][col];
    ++rank;
  }
  return rank;
}

std::uint64_t adjacency_rank(const BooleanFunction& f, const ResourceLimits& limits) {
  const auto eig = cayley_eigenvalues(f, limits);
  const auto nonzero = static_cast<std::uint64_t>(
      std::count_if(eig.indexed.begin(), eig.indexed.end(), [](std::int64_t x) { return x != 0; }));
  if (f.arity() <= limits.max_elimination_arity) {
    const auto by_elimination = elimination_rank(build_cayley(f), limits);
    if (by_elimination != nonzero) {
      throw InvariantViolation("adjacency rank " + std::to_string(by_elimination) +
                               " differs from nonzero eigenvalue count " +
                               std::to_string(nonzero));
    }
  }
  return nonzero;
}

SymmetryReport spectrum_symmetry_report(const BooleanFunction& f, const ResourceLimits& limits) {
  const auto eig = cayley_eigenvalues(f, limits);
  SymmetryReport r;
  r.connected = component_count(f) == 1;
  r.has_minus_lambda0 = eig.multiplicity(-eig.lambda0()) > 0;
  // Sorted non-increasing: symmetric iff sorted[i] == -sorted[size-1-i].
  const auto& s = eig.sorted;
  r.spectrum_symmetric = std::equal(s.begin(), s.end(), s.rbegin(),
                                    [](std::int64_t a, std::int64_t b) { return a == -b; });
  return r;
}

}  // namespace bentgraph
