#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bentgraph/boolean_function.h"
#include "bentgraph/srg.h"

namespace bentgraph {

// F = (f1, ..., fm) : Z2^n -> Z2^m.
//
// An output vector y = (y1, ..., ym) and a combination vector v are encoded
// like inputs: y1 is the most significant of the m bits.
class VectorialFunction {
 public:
  // Throws InvalidInput for m == 0 or components of differing arity.
  explicit VectorialFunction(std::vector<BooleanFunction> components);

  // From a lookup table of 2^n outputs, each < 2^m.
  static VectorialFunction from_lookup(int n, int m, std::span<const std::uint32_t> outputs);

  int input_arity() const { return components_.front().arity(); }
  int output_arity() const { return static_cast<int>(components_.size()); }
  // 1-based, as in f1..fm.
  const BooleanFunction& component(int i) const { return components_.at(i - 1); }
  std::span<const BooleanFunction> components() const { return components_; }

  std::uint32_t operator()(std::uint32_t x) const;

 private:
  std::vector<BooleanFunction> components_;
};

// F.v = xor of the f_i with v_i = 1. v must be a nonzero m-bit vector.
BooleanFunction component_combination(const VectorialFunction& F, std::uint32_t v);

// min over nonzero v of nonlinearity(F.v).
std::uint64_t nl(const VectorialFunction& F, const ResourceLimits& limits = {});

// min over affine phi : Z2^n -> Z2^m of |{x : F(x) != phi(x)}|, by exhaustive
// branch-and-bound search. Guarded by max_vectorial_affine_bits on m(n+1).
std::uint64_t vectorial_distance_nl(const VectorialFunction& F,
                                    const ResourceLimits& limits = {});

struct VectorialBentVerdict {
  bool bent = false;
  std::optional<std::uint32_t> witness;  // a v whose combination is not bent

  explicit operator bool() const { return bent; }
};

VectorialBentVerdict is_vectorial_bent(const VectorialFunction& F,
                                       const ResourceLimits& limits = {});

PointSet symmetric_difference(const PointSet& a, const PointSet& b);

// Points lying in an odd number of the sets. The collection must be nonempty.
PointSet nary_symmetric_difference(std::span<const PointSet> sets);

struct SubsetReport {
  std::uint32_t subset = 0;  // indicator vector of I, encoded like v
  std::vector<int> indices;  // members of I, ascending, 1-based
  PointSet support;          // symmetric difference of the Omega_i, i in I
  bool matches_combination = false;
  SrgCheck check;
  bool lambda_equals_mu = false;
};

struct SupportSrgReport {
  std::vector<SubsetReport> subsets;  // ordered by indicator value
  std::vector<std::string> warnings;

  bool all_pass() const;
};

// For every nonempty I: builds Cay(Z2^n, symmetric difference of Omega_i over
// I), checks strong regularity with lambda == mu and that the set equals the
// support of the xor of the f_i over I.
SupportSrgReport check_support_srg_condition(const VectorialFunction& F);

}  // namespace bentgraph
