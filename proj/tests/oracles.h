#pragma once

// Slow reference computations used to check the library. Nothing here calls
// the code paths it is compared against.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "bentgraph/boolean_function.h"

namespace bentgraph::oracle {

inline int parity_dot(std::uint32_t a, std::uint32_t b) {
  int p = 0;
  for (std::uint32_t t = a & b; t; t >>= 1) p ^= static_cast<int>(t & 1u);
  return p;
}

// sum_x (-1)^(w.x) f(x), one w at a time.
inline std::vector<std::int64_t> naive_fourier(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.size(), 0);
  for (std::uint32_t w = 0; w < f.size(); ++w) {
    for (std::uint32_t x = 0; x < f.size(); ++x) {
      if (f(x)) out[w] += parity_dot(w, x) ? -1 : 1;
    }
  }
  return out;
}

// sum_x (-1)^(f(x) xor w.x)
inline std::vector<std::int64_t> naive_signed_walsh(const BooleanFunction& f) {
  std::vector<std::int64_t> out(f.size(), 0);
  for (std::uint32_t w = 0; w < f.size(); ++w) {
    for (std::uint32_t x = 0; x < f.size(); ++x) out[w] += (f(x) ^ parity_dot(w, x)) ? -1 : 1;
  }
  return out;
}

// Minimum distance over all 2^(n+1) affine functions, built pointwise.
inline std::uint64_t brute_nonlinearity(const BooleanFunction& f) {
  std::uint64_t best = f.size();
  for (std::uint32_t a = 0; a < f.size(); ++a) {
    for (int c = 0; c <= 1; ++c) {
      std::uint64_t d = 0;
      for (std::uint32_t x = 0; x < f.size(); ++x) d += (f(x) != (parity_dot(a, x) ^ c)) ? 1 : 0;
      best = std::min(best, d);
    }
  }
  return best;
}

// Dense adjacency from the definition u ~ w iff f(u xor w) = 1.
inline std::vector<std::vector<int>> adjacency(const BooleanFunction& f) {
  std::vector<std::vector<int>> a(f.size(), std::vector<int>(f.size(), 0));
  for (std::uint32_t u = 0; u < f.size(); ++u) {
    for (std::uint32_t w = 0; w < f.size(); ++w) a[u][w] = f(u ^ w);
  }
  return a;
}

// Connected components by repeated union over explicit edges.
inline std::uint64_t components_by_union_find(const BooleanFunction& f) {
  std::vector<std::uint32_t> parent(f.size());
  for (std::uint32_t i = 0; i < f.size(); ++i) parent[i] = i;
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint32_t u = 0; u < f.size(); ++u) {
    for (std::uint32_t w = 0; w < f.size(); ++w) {
      if (f(u ^ w)) parent[find(u)] = find(w);
    }
  }
  std::uint64_t roots = 0;
  for (std::uint32_t i = 0; i < f.size(); ++i) roots += find(i) == i;
  return roots;
}

// srg parameters of the simple graph on Omega_f \ {0}, counted with std::set
// neighbourhoods. Returns nullopt when the graph is not strongly regular.
// lambda / mu are nullopt when no adjacent / non-adjacent pair exists.
struct NaiveSrg {
  std::int64_t v, k;
  std::optional<std::int64_t> lambda, mu;
};

inline std::optional<NaiveSrg> naive_srg(const BooleanFunction& f) {
  const std::uint32_t v = f.size();
  std::vector<std::set<std::uint32_t>> nbr(v);
  for (std::uint32_t u = 0; u < v; ++u) {
    for (std::uint32_t w = 0; w < v; ++w) {
      if (u != w && f(u ^ w)) nbr[u].insert(w);
    }
  }
  NaiveSrg r{v, static_cast<std::int64_t>(nbr[0].size()), std::nullopt, std::nullopt};
  for (std::uint32_t u = 0; u < v; ++u) {
    if (static_cast<std::int64_t>(nbr[u].size()) != r.k) return std::nullopt;
    for (std::uint32_t w = u + 1; w < v; ++w) {
      std::int64_t common = 0;
      for (auto x : nbr[u]) common += nbr[w].count(x);
      auto& slot = nbr[u].count(w) ? r.lambda : r.mu;
      if (slot && *slot != common) return std::nullopt;
      slot = common;
    }
  }
  return r;
}

// Points appearing an odd number of times, counted with a std::map.
inline std::vector<std::uint32_t> odd_count(const std::vector<std::vector<std::uint32_t>>& sets) {
  std::map<std::uint32_t, int> count;
  for (const auto& s : sets) {
    for (auto x : s) ++count[x];
  }
  std::vector<std::uint32_t> out;
  for (const auto& [x, c] : count) {
    if (c % 2) out.push_back(x);
  }
  return out;
}

// Polynomial over GF(2) as a bit mask; true iff it has no factor of degree
// 1..deg/2.
inline bool irreducible(std::uint32_t poly) {
  auto degree = [](std::uint32_t p) { return 31 - __builtin_clz(p); };
  auto mod = [&](std::uint32_t a, std::uint32_t b) {
    while (a && degree(a) >= degree(b)) a ^= b << (degree(a) - degree(b));
    return a;
  };
  const int d = degree(poly);
  for (std::uint32_t q = 2; q < (1u << (d / 2 + 1)); ++q) {
    if (degree(q) >= 1 && degree(q) <= d / 2 && mod(poly, q) == 0) return false;
  }
  return true;
}

// Carry-less product reduced modulo poly, bit by bit.
inline std::uint32_t field_multiply(std::uint32_t a, std::uint32_t b, std::uint32_t poly) {
  auto degree = [](std::uint32_t p) { return 31 - __builtin_clz(p); };
  std::uint32_t prod = 0;
  for (int i = 0; i < 32; ++i) {
    if ((b >> i) & 1u) prod ^= a << i;
  }
  const int d = degree(poly);
  for (int i = 31; i >= d; --i) {
    if ((prod >> i) & 1u) prod ^= poly << (i - d);
  }
  return prod;
}

}  // namespace bentgraph::oracle
