#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "bentgraph/boolean_function.h"
#include "bentgraph/vectorial.h"

namespace bentgraph {

// A bijection on {0, ..., size-1}.
class Permutation {
 public:
  // Throws InvalidInput unless mapping is a bijection.
  explicit Permutation(std::vector<std::uint32_t> mapping);

  static Permutation identity(std::uint32_t size);
  // Fisher-Yates driven by the same generator as random_function.
  static Permutation random(std::uint32_t size, std::uint64_t seed);

  std::uint32_t size() const { return static_cast<std::uint32_t>(mapping_.size()); }
  std::uint32_t operator()(std::uint32_t y) const { return mapping_[y]; }

 private:
  std::vector<std::uint32_t> mapping_;
};

// Maiorana-McFarland: f(x, y) = x . pi(y) xor g(y), where x holds the first
// n/2 input bits and y the last n/2.
BooleanFunction mm_bent(int n, const Permutation& pi, const BooleanFunction& g);

// Multiplication in GF(2^m) modulo the fixed polynomial for degree m.
std::uint32_t gf2m_multiply(std::uint32_t a, std::uint32_t b, int m);

// The reduction polynomial used for GF(2^m), m in 1..8, as a bit mask.
std::uint32_t gf2m_modulus(int m);

// F(x, y) = x * y in GF(2^(n/2)); an (n, n/2)-bent function.
VectorialFunction nyberg_vectorial_bent(int n);

// Every bent function of arity 2 or 4, ordered by truth-table value.
std::vector<BooleanFunction> enumerate_bent(int n);

// Reproducible truth table from std::mt19937_64(seed): entry i is bit
// (i mod 64) of the (i / 64)-th output word.
BooleanFunction random_function(int n, std::uint64_t seed);

}  // namespace bentgraph
