#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bentgraph {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input or violated precondition.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// A guarded computation was asked to run above its configured size limit.
class ResourceLimitExceeded : public Error {
 public:
  using Error::Error;
};

// srg parameters or spectra that do not describe any strongly regular graph.
class InfeasibleParameters : public Error {
 public:
  using Error::Error;
};

// Two independent computations disagreed. Never expected.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

// Size guards for the exponential-cost paths. All are arities unless noted.
struct ResourceLimits {
  int max_walsh_arity = 20;
  int max_brute_force_arity = 14;
  // Bound on m(n+1), the log2 of the number of affine maps Z2^n -> Z2^m
  // visited by the vectorial distance search.
  int max_vectorial_affine_bits = 19;
  int max_elimination_arity = 6;
  // Exhaustive srg pair counting keeps one bitset of 2^n bits per vertex.
  int max_srg_arity = 12;
};

// Largest arity any BooleanFunction may have (table of 2^24 entries).
inline constexpr int kMaxArity = 24;

// GF(2) dot product of two index-encoded vectors.
inline int dot(std::uint32_t a, std::uint32_t b) {
  return __builtin_popcount(a & b) & 1;
}

// n-bit string of i with x1 (the most significant bit) first.
std::string bit_string(std::uint32_t i, int n);

}  // namespace bentgraph
