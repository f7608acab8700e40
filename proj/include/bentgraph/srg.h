#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bentgraph/boolean_function.h"
#include "bentgraph/cayley.h"

namespace bentgraph {

// srg(v, k, lambda, mu).
//
// lambda is undefined for edgeless graphs (no adjacent pair) and mu for
// complete graphs (no non-adjacent pair). An undefined count is stored as 0.
struct SrgParams {
  std::int64_t v = 0;
  std::int64_t k = 0;
  std::int64_t lambda = 0;
  std::int64_t mu = 0;
  bool lambda_defined = true;
  bool mu_defined = true;

  static SrgParams of(std::int64_t v, std::int64_t k, std::int64_t lambda, std::int64_t mu) {
    return {v, k, lambda, mu, true, true};
  }

  // lambda == mu, with the complete graph satisfying it vacuously.
  bool lambda_equals_mu() const;

  std::string to_string() const;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

// Adjacency spectrum k^1, theta1^m1, theta2^m2 with theta1 > theta2.
struct SrgSpectrum {
  std::int64_t k = 0;
  std::int64_t theta1 = 0;
  std::int64_t theta2 = 0;
  std::int64_t m1 = 0;
  std::int64_t m2 = 0;

  friend bool operator==(const SrgSpectrum&, const SrgSpectrum&) = default;
};

enum class LoopHandling {
  // Count on the simple graph over C \ {0}; the loop is only reported.
  drop_identity,
  // Keep loops: a looped vertex is its own neighbour, so common-neighbour
  // counts are taken over closed neighbourhoods.
  closed_neighbourhood,
};

struct SrgViolation {
  enum class Kind { degree, adjacent_pair, non_adjacent_pair };
  Kind kind = Kind::degree;
  std::uint32_t u = 0;
  std::uint32_t w = 0;
  std::int64_t expected = 0;
  std::int64_t found = 0;

  std::string to_string(int n) const;
};

struct SrgCheck {
  std::optional<SrgParams> params;
  std::optional<SrgViolation> violation;
  bool loops_dropped = false;

  bool is_srg() const { return params.has_value(); }
};

// Exhaustive pair counting with per-vertex neighbour bitsets. Returns the
// parameters or the first violating vertex/pair in (u, w) order.
// Guarded by max_srg_arity.
SrgCheck check_srg(const CayleyGraph& g, LoopHandling loops = LoopHandling::drop_identity,
                   const ResourceLimits& limits = {});

// k(k - lambda - 1) == mu(v - k - 1). Requires mu to be defined.
bool check_fundamental_identity(const SrgParams& p);

// Eigenvalues and multiplicities determined by the parameters. Throws
// InfeasibleParameters when they are not integral or violate the trace and
// vertex-count identities.
SrgSpectrum spectrum_from_params(const SrgParams& p);

// v = 1 + m1 + m2, lambda = k + theta1 + theta2 + theta1 theta2,
// mu = k + theta1 theta2.
SrgParams params_from_spectrum(const SrgSpectrum& s);

// The two families a bent Cayley graph can belong to, by support size
// (2^n + 2^(n/2))/2 ("plus") and (2^n - 2^(n/2))/2 ("minus").
struct BentParamPair {
  SrgParams plus;
  SrgParams minus;
};

BentParamPair predicted_bent_params(int n);

// Parameter equality where a complete graph (mu undefined) matches a
// prediction whose mu equals its lambda.
bool matches_prediction(const SrgParams& counted, const SrgParams& predicted);

struct LambdaMuVerdict {
  bool holds = false;
  SrgCheck check;
  std::vector<std::string> warnings;
};

// Whether G_f is strongly regular with lambda == mu. f(0) = 1 is analysed on
// Omega_f \ {0} with a warning.
LambdaMuVerdict is_srg_lambda_eq_mu(const BooleanFunction& f, const ResourceLimits& limits = {});

// The srg parameters listed in the published example table for the Cayley
// graphs of bent functions, n = 2, 4, ..., 10, in (plus, minus) order. Two
// entries are known to disagree with the closed-form families.
std::optional<BentParamPair> reference_table_params(int n);

struct TableDiscrepancy {
  int n = 0;
  SrgParams listed;
  SrgParams derived;
  std::string message;
};

// Discrepancy notes for a counted parameter set that matches one of the
// predicted families while the reference table lists something else.
std::optional<TableDiscrepancy> find_table_discrepancy(int n, const SrgParams& counted);

// Every discrepancy between predicted_bent_params(n) and the reference table.
std::vector<TableDiscrepancy> table_discrepancies(int n);

}  // namespace bentgraph
