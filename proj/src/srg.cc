#include "bentgraph/srg.h"

#include <bit>
#include <cmath>

namespace bentgraph {

bool SrgParams::lambda_equals_mu() const {
  if (!lambda_defined) return false;
  if (!mu_defined) return true;
  return lambda == mu;
}

std::string SrgParams::to_string() const {
  auto field = [](bool defined, std::int64_t x) { return defined ? std::to_string(x) : std::string("-"); };
  return "srg(" + std::to_string(v) + "," + std::to_string(k) + "," + field(lambda_defined, lambda) +
         "," + field(mu_defined, mu) + ")";
}

std::string SrgViolation::to_string(int n) const {
  switch (kind) {
    case Kind::degree:
      return "vertex " + bit_string(u, n) + " has degree " + std::to_string(found) +
             ", expected " + std::to_string(expected);
    case Kind::adjacent_pair:
      return "adjacent pair (" + bit_string(u, n) + ", " + bit_string(w, n) + ") has " +
             std::to_string(found) + " common neighbours, expected lambda=" +
             std::to_string(expected);
    case Kind::non_adjacent_pair:
      return "non-adjacent pair (" + bit_string(u, n) + ", " + bit_string(w, n) + ") has " +
             std::to_string(found) + " common neighbours, expected mu=" +
             std::to_string(expected);
  }
  return {};
}

SrgCheck check_srg(const CayleyGraph& g, LoopHandling loops, const ResourceLimits& limits) {
  if (g.arity() > limits.max_srg_arity) {
    throw ResourceLimitExceeded("srg pair counting limited to n <= " +
                                std::to_string(limits.max_srg_arity) + ", got n=" +
                                std::to_string(g.arity()));
  }
  const std::uint32_t v = g.vertex_count();
  const std::size_t words = (v + 63) / 64;

  std::vector<std::uint32_t> offsets;
  for (auto c : g.connection_set().members()) {
    if (c == 0 && loops == LoopHandling::drop_identity) continue;
    offsets.push_back(c);
  }

  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(v) * words, 0);
  for (std::uint32_t u = 0; u < v; ++u) {
    std::uint64_t* row = &nbr[u * words];
    for (auto c : offsets) {
      const std::uint32_t w = u ^ c;
      row[w / 64] |= std::uint64_t{1} << (w % 64);
    }
  }
  auto row = [&](std::uint32_t u) { return &nbr[u * words]; };

  SrgCheck result;
  result.loops_dropped = g.has_loops() && loops == LoopHandling::drop_identity;

  const auto k = static_cast<std::int64_t>(offsets.size());
  for (std::uint32_t u = 0; u < v; ++u) {
    std::int64_t deg = 0;
    for (std::size_t i = 0; i < words; ++i) deg += std::popcount(row(u)[i]);
    if (deg != k) {
      result.violation = SrgViolation{SrgViolation::Kind::degree, u, u, k, deg};
      return result;
    }
  }

  std::optional<std::int64_t> lambda;
  std::optional<std::int64_t> mu;
  for (std::uint32_t u = 0; u < v; ++u) {
    const std::uint64_t* ru = row(u);
    for (std::uint32_t w = u + 1; w < v; ++w) {
      const std::uint64_t* rw = row(w);
      std::int64_t common = 0;
      for (std::size_t i = 0; i < words; ++i) common += std::popcount(ru[i] & rw[i]);
      const bool adj = g.adjacent(u, w);
      auto& slot = adj ? lambda : mu;
      if (!slot) {
        slot = common;
      } else if (*slot != common) {
        const auto kind = adj ? SrgViolation::Kind::adjacent_pair
                              : SrgViolation::Kind::non_adjacent_pair;
        result.violation = SrgViolation{kind, u, w, *slot, common};
        return result;
      }
    }
  }

  SrgParams p;
  p.v = v;
  p.k = k;
  p.lambda = lambda.value_or(0);
  p.mu = mu.value_or(0);
  p.lambda_defined = lambda.has_value();
  p.mu_defined = mu.has_value();
  result.params = p;
  return result;
}

bool check_fundamental_identity(const SrgParams& p) {
  if (!p.mu_defined) throw InvalidInput("fundamental identity needs mu, " + p.to_string() + " is complete");
  return p.k * (p.k - p.lambda - 1) == p.mu * (p.v - p.k - 1);
}

namespace {

std::int64_t exact_isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

SrgSpectrum spectrum_from_params(const SrgParams& p) {
  if (!p.lambda_defined || !p.mu_defined) {
    throw InfeasibleParameters(p.to_string() + " has an undefined common-neighbour count");
  }
  const std::int64_t diff = p.lambda - p.mu;
  const std::int64_t disc = diff * diff + 4 * (p.k - p.mu);
  if (disc <= 0) {
    throw InfeasibleParameters(p.to_string() + ": discriminant " + std::to_string(disc) +
                               " is not positive");
  }
  const std::int64_t root = exact_isqrt(disc);
  if (root * root != disc) {
    throw InfeasibleParameters(p.to_string() + ": discriminant " + std::to_string(disc) +
                               " is not a perfect square");
  }
  if ((diff + root) % 2 != 0) {
    throw InfeasibleParameters(p.to_string() + ": eigenvalues are not integers");
  }
  SrgSpectrum s;
  s.k = p.k;
  s.theta1 = (diff + root) / 2;
  s.theta2 = (diff - root) / 2;

  const std::int64_t skew = 2 * p.k + (p.v - 1) * diff;
  if (skew % root != 0 || ((p.v - 1) - skew / root) % 2 != 0) {
    throw InfeasibleParameters(p.to_string() + ": multiplicities are not integers");
  }
  s.m1 = ((p.v - 1) - skew / root) / 2;
  s.m2 = ((p.v - 1) + skew / root) / 2;
  if (s.m1 < 0 || s.m2 < 0) {
    throw InfeasibleParameters(p.to_string() + ": negative multiplicity");
  }
  if (1 + s.m1 + s.m2 != p.v || s.k + s.m1 * s.theta1 + s.m2 * s.theta2 != 0) {
    throw InfeasibleParameters(p.to_string() + ": spectrum violates the trace identity");
  }
  return s;
}

SrgParams params_from_spectrum(const SrgSpectrum& s) {
  if (s.theta1 <= s.theta2) throw InvalidInput("spectrum needs theta1 > theta2");
  if (s.m1 < 0 || s.m2 < 0) throw InvalidInput("spectrum has a negative multiplicity");
  if (s.k + s.m1 * s.theta1 + s.m2 * s.theta2 != 0) {
    throw InvalidInput("spectrum violates the trace identity k + m1 theta1 + m2 theta2 = 0");
  }
  const std::int64_t product = s.theta1 * s.theta2;
  auto p = SrgParams::of(1 + s.m1 + s.m2, s.k, s.k + s.theta1 + s.theta2 + product, s.k + product);
  if (p.lambda < 0 || p.mu < 0) {
    throw InfeasibleParameters("spectrum gives negative common-neighbour counts " + p.to_string());
  }
  return p;
}

BentParamPair predicted_bent_params(int n) {
  if (n < 2 || n % 2 != 0 || n > 60) throw InvalidInput("bent parameters need even n in [2, 60]");
  const std::int64_t v = std::int64_t{1} << n;
  const std::int64_t root = std::int64_t{1} << (n / 2);
  const std::int64_t half_v = v / 2;
  auto family = [&](std::int64_t sign) {
    const std::int64_t k = (v + sign * root) / 2;
    const std::int64_t common = (v + sign * root - half_v) / 2;
    return SrgParams::of(v, k, common, common);
  };
  return {family(+1), family(-1)};
}

bool matches_prediction(const SrgParams& counted, const SrgParams& predicted) {
  if (counted.v != predicted.v || counted.k != predicted.k) return false;
  if (!counted.lambda_defined || counted.lambda != predicted.lambda) return false;
  if (!counted.mu_defined) return predicted.mu == predicted.lambda;
  return counted.mu == predicted.mu;
}

LambdaMuVerdict is_srg_lambda_eq_mu(const BooleanFunction& f, const ResourceLimits& limits) {
  LambdaMuVerdict verdict;
  if (f(0)) {
    verdict.warnings.push_back("f(0)=1: the connection set contains 0; analysed on Omega_f \\ {0}");
  }
  verdict.check = check_srg(build_cayley(f), LoopHandling::drop_identity, limits);
  verdict.holds = verdict.check.is_srg() && verdict.check.params->lambda_equals_mu();
  return verdict;
}

std::optional<BentParamPair> reference_table_params(int n) {
  switch (n) {
    case 2: return BentParamPair{SrgParams::of(4, 3, 1, 1), SrgParams::of(4, 1, 0, 0)};
    case 4: return BentParamPair{SrgParams::of(16, 10, 6, 6), SrgParams::of(16, 10, 2, 2)};
    case 6: return BentParamPair{SrgParams::of(64, 36, 20, 20), SrgParams::of(64, 28, 12, 12)};
    case 8: return BentParamPair{SrgParams::of(256, 136, 72, 72), SrgParams::of(256, 120, 56, 56)};
    case 10:
      return BentParamPair{SrgParams::of(1024, 528, 272, 272), SrgParams::of(1024, 496, 240, 240)};
    default: return std::nullopt;
  }
}

namespace {

TableDiscrepancy make_discrepancy(int n, const SrgParams& listed, const SrgParams& derived) {
  std::string message = "reference table lists " + listed.to_string() + " for n=" +
                        std::to_string(n) + " but the closed-form family gives " +
                        derived.to_string();
  if (!check_fundamental_identity(listed)) {
    message += "; " + listed.to_string() + " violates k(k-lambda-1)=mu(v-k-1)";
  }
  return {n, listed, derived, std::move(message)};
}

}  // namespace

std::optional<TableDiscrepancy> find_table_discrepancy(int n, const SrgParams& counted) {
  const auto listed = reference_table_params(n);
  if (!listed) return std::nullopt;
  const auto predicted = predicted_bent_params(n);
  if (matches_prediction(counted, predicted.plus) && !(listed->plus == predicted.plus)) {
    return make_discrepancy(n, listed->plus, predicted.plus);
  }
  if (matches_prediction(counted, predicted.minus) && !(listed->minus == predicted.minus)) {
    return make_discrepancy(n, listed->minus, predicted.minus);
  }
  return std::nullopt;
}

std::vector<TableDiscrepancy> table_discrepancies(int n) {
  std::vector<TableDiscrepancy> out;
  const auto listed = reference_table_params(n);
  if (!listed) return out;
  const auto predicted = predicted_bent_params(n);
  if (!(listed->plus == predicted.plus)) out.push_back(make_discrepancy(n, listed->plus, predicted.plus));
  if (!(listed->minus == predicted.minus)) {
    out.push_back(make_discrepancy(n, listed->minus, predicted.minus));
  }
  return out;
}

}  // namespace bentgraph
