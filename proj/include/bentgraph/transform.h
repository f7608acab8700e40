#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bentgraph/boolean_function.h"

namespace bentgraph {

// f*(w) = numerators[w] / 2^n, where numerators[w] = sum_x (-1)^(w.x) f(x).
// The implicit denominator is never reduced, so numerators[w] is also the
// Cayley graph eigenvalue belonging to the character Q_w.
struct FourierSpectrum {
  int n = 0;
  std::vector<std::int64_t> numerators;
};

// S(w) = sum_x (-1)^(f(x) xor w.x)
struct SignedWalshSpectrum {
  int n = 0;
  std::vector<std::int64_t> values;
};

// Unnormalised in-place Walsh-Hadamard butterfly:
// data[w] <- sum_x (-1)^(w.x) data[x]. data.size() must be a power of two.
void walsh_hadamard_transform(std::span<std::int64_t> data);

FourierSpectrum fourier(const BooleanFunction& f, const ResourceLimits& limits = {});
SignedWalshSpectrum signed_walsh(const BooleanFunction& f, const ResourceLimits& limits = {});

// Eigenvalues of Cay(Z2^n, Omega_f): indexed[i] belongs to Q_b(i), and
// sorted holds the same multiset in non-increasing order.
struct CayleyEigenvalues {
  std::vector<std::int64_t> indexed;
  std::vector<std::int64_t> sorted;

  std::int64_t lambda0() const { return indexed.front(); }
  std::size_t multiplicity(std::int64_t value) const;
};

CayleyEigenvalues cayley_eigenvalues(const BooleanFunction& f,
                                     const ResourceLimits& limits = {});

bool satisfies_parseval(const SignedWalshSpectrum& s);

// |S(w)| = 2^(n/2) for every w.
bool is_flat(const SignedWalshSpectrum& s);

}  // namespace bentgraph
