#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bentgraph/common.h"

namespace bentgraph {

// Truth table of f : Z2^n -> Z2.
//
// Entry i holds f(b(i)), where b(i) = (x1, ..., xn) is the binary expansion
// of i with x1 the most significant bit: i = sum_j x_j 2^(n-j). Variable x_j
// therefore lives in bit (n - j) of an index, and index 0 is the all-zero
// input.
class BooleanFunction {
 public:
  // Throws InvalidInput unless table.size() == 2^n and all entries are 0/1.
  BooleanFunction(int n, std::vector<std::uint8_t> table);

  static BooleanFunction zero(int n);

  int arity() const { return n_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(table_.size()); }
  std::uint8_t operator()(std::uint32_t x) const { return table_[x]; }
  std::span<const std::uint8_t> table() const { return table_; }
  std::uint32_t weight() const;

  BooleanFunction complement() const;
  // Pointwise XOR; both operands must have the same arity.
  BooleanFunction operator^(const BooleanFunction& other) const;
  // x -> f(x xor shift)
  BooleanFunction translate(std::uint32_t shift) const;

  std::string to_bit_string() const;

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

// A set of n-bit vectors, kept sorted and duplicate free.
class PointSet {
 public:
  explicit PointSet(int n) : n_(n) {}
  // Throws InvalidInput on out-of-range or duplicate members.
  PointSet(int n, std::vector<std::uint32_t> members);

  int arity() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint32_t x) const;
  std::span<const std::uint32_t> members() const { return members_; }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  int n_;
  std::vector<std::uint32_t> members_;
};

// Parses a 0/1 string of length 2^n. Errors name the expected length or the
// offending position.
BooleanFunction from_truth_table(int n, std::string_view bits);

// The indicator function of s.
BooleanFunction from_support(const PointSet& s);

// Omega_f = { x : f(x) = 1 }
PointSet support(const BooleanFunction& f);

// All 2^(n+1) functions x -> a.x xor c, ordered by (a, c).
std::vector<BooleanFunction> affine_functions(int n, const ResourceLimits& limits = {});

// Minimum Hamming distance to an affine function, through the signed Walsh
// spectrum.
std::uint64_t nonlinearity(const BooleanFunction& f, const ResourceLimits& limits = {});

// Same quantity by scanning every affine function.
std::uint64_t nonlinearity_brute_force(const BooleanFunction& f,
                                       const ResourceLimits& limits = {});

// (2^n - 2^(n/2)) / 2 for even n.
std::uint64_t bent_nonlinearity(int n);

struct BentVerdict {
  bool bent = false;
  std::string reason;  // empty when bent

  explicit operator bool() const { return bent; }
};

// Odd arity is a negative verdict, not an error.
BentVerdict is_bent(const BooleanFunction& f, const ResourceLimits& limits = {});

}  // namespace bentgraph
