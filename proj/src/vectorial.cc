#include "bentgraph/vectorial.h"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>

namespace bentgraph {

VectorialFunction::VectorialFunction(std::vector<BooleanFunction> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw InvalidInput("a vectorial function needs at least one component");
  if (components_.size() > 31) throw InvalidInput("at most 31 output components are supported");
  for (const auto& c : components_) {
    if (c.arity() != components_.front().arity()) {
      throw InvalidInput("components have arities " + std::to_string(components_.front().arity()) +
                         " and " + std::to_string(c.arity()));
    }
  }
}

VectorialFunction VectorialFunction::from_lookup(int n, int m, std::span<const std::uint32_t> outputs) {
  if (m < 1 || m > 31) throw InvalidInput("output arity must be in [1, 31]");
  if (n < 1 || n > kMaxArity || outputs.size() != (std::size_t{1} << n)) {
    throw InvalidInput("lookup table needs 2^n entries");
  }
  std::vector<BooleanFunction> comps;
  for (int i = 1; i <= m; ++i) {
    std::vector<std::uint8_t> t(outputs.size());
    for (std::size_t x = 0; x < outputs.size(); ++x) {
      if (outputs[x] >> m) throw InvalidInput("lookup entry " + std::to_string(x) + " exceeds m bits");
      t[x] = static_cast<std::uint8_t>((outputs[x] >> (m - i)) & 1u);
    }
    comps.emplace_back(n, std::move(t));
  }
  return VectorialFunction(std::move(comps));
}

std::uint32_t VectorialFunction::operator()(std::uint32_t x) const {
  std::uint32_t y = 0;
  for (const auto& c : components_) y = (y << 1) | c(x);
  return y;
}

BooleanFunction component_combination(const VectorialFunction& F, std::uint32_t v) {
  const int m = F.output_arity();
  if (v == 0) throw InvalidInput("combination vector must be nonzero");
  if (v >> m) throw InvalidInput("combination vector has more than m=" + std::to_string(m) + " bits");
  auto out = BooleanFunction::zero(F.input_arity());
  for (int i = 1; i <= m; ++i) {
    if ((v >> (m - i)) & 1u) out = out ^ F.component(i);
  }
  return out;
}

std::uint64_t nl(const VectorialFunction& F, const ResourceLimits& limits) {
  std::uint64_t best = std::uint64_t{1} << F.input_arity();
  for (std::uint32_t v = 1; v < (std::uint32_t{1} << F.output_arity()); ++v) {
    best = std::min(best, nonlinearity(component_combination(F, v), limits));
  }
  return best;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct DistanceSearch {
  int n;
  std::size_t words;
  std::uint64_t tail_mask;  // valid bits of the last word
  std::vector<Bits> component_bits;
  std::vector<Bits> variable_bits;  // variable_bits[b]: x -> bit b of x
  std::uint64_t best;

  std::uint64_t weight(const Bits& b) const {
    std::uint64_t w = 0;
    for (auto word : b) w += static_cast<std::uint64_t>(std::popcount(word));
    return w;
  }

  void search(std::size_t level, const Bits& disagreement) {
    if (level == component_bits.size()) {
      best = std::min(best, weight(disagreement));
      return;
    }
    Bits linear(words, 0);
    Bits next(words);
    const std::uint32_t count = std::uint32_t{1} << n;
    for (std::uint32_t step = 0; step < count; ++step) {
      if (step > 0) {
        // Gray-code walk over a: one variable flips per step.
        const int flip = std::countr_zero(step);
        for (std::size_t i = 0; i < words; ++i) linear[i] ^= variable_bits[static_cast<std::size_t>(flip)][i];
      }
      for (int constant = 0; constant <= 1; ++constant) {
        const std::uint64_t invert = constant ? ~std::uint64_t{0} : 0;
        for (std::size_t i = 0; i < words; ++i) {
          next[i] = disagreement[i] | (component_bits[level][i] ^ linear[i] ^ invert);
        }
        next[words - 1] &= tail_mask;
        if (weight(next) >= best) continue;
        search(level + 1, next);
      }
    }
  }
};

Bits to_bits(std::uint32_t size, std::size_t words, auto&& bit_at) {
  Bits b(words, 0);
  for (std::uint32_t x = 0; x < size; ++x) {
    if (bit_at(x)) b[x / 64] |= std::uint64_t{1} << (x % 64);
  }
  return b;
}

}  // namespace

std::uint64_t vectorial_distance_nl(const VectorialFunction& F, const ResourceLimits& limits) {
  const int n = F.input_arity();
  const int m = F.output_arity();
  if (m * (n + 1) > limits.max_vectorial_affine_bits) {
    throw ResourceLimitExceeded("affine-map search needs m(n+1) <= " +
                                std::to_string(limits.max_vectorial_affine_bits) + ", got " +
                                std::to_string(m * (n + 1)) + " (n=" + std::to_string(n) +
                                ", m=" + std::to_string(m) + ")");
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  DistanceSearch s;
  s.n = n;
  s.words = (size + 63) / 64;
  s.tail_mask = size % 64 == 0 ? ~std::uint64_t{0} : (std::uint64_t{1} << (size % 64)) - 1;
  for (const auto& c : F.components()) {
    s.component_bits.push_back(to_bits(size, s.words, [&](std::uint32_t x) { return c(x) != 0; }));
  }
  for (int b = 0; b < n; ++b) {
    s.variable_bits.push_back(to_bits(size, s.words, [&](std::uint32_t x) { return ((x >> b) & 1u) != 0; }));
  }
  s.best = size + 1;
  s.search(0, Bits(s.words, 0));
  return s.best;
}

VectorialBentVerdict is_vectorial_bent(const VectorialFunction& F, const ResourceLimits& limits) {
  for (std::uint32_t v = 1; v < (std::uint32_t{1} << F.output_arity()); ++v) {
    if (!is_bent(component_combination(F, v), limits)) return {false, v};
  }
  return {true, std::nullopt};
}

PointSet symmetric_difference(const PointSet& a, const PointSet& b) {
  if (a.arity() != b.arity()) {
    throw InvalidInput("symmetric difference of sets with arities " + std::to_string(a.arity()) +
                       " and " + std::to_string(b.arity()));
  }
  std::vector<std::uint32_t> out;
  std::set_symmetric_difference(a.members().begin(), a.members().end(), b.members().begin(),
                                b.members().end(), std::back_inserter(out));
  return PointSet(a.arity(), std::move(out));
}

PointSet nary_symmetric_difference(std::span<const PointSet> sets) {
  if (sets.empty()) throw InvalidInput("symmetric difference of an empty collection");
  const int n = sets.front().arity();
  std::map<std::uint32_t, std::size_t> count;
  for (const auto& s : sets) {
    if (s.arity() != n) throw InvalidInput("collection mixes arities");
    for (auto x : s.members()) ++count[x];
  }
  std::vector<std::uint32_t> out;
  for (const auto& [x, c] : count) {
    if (c % 2 == 1) out.push_back(x);
  }
  return PointSet(n, std::move(out));
}

bool SupportSrgReport::all_pass() const {
  return std::all_of(subsets.begin(), subsets.end(), [](const SubsetReport& r) {
    return r.lambda_equals_mu && r.matches_combination;
  });
}

SupportSrgReport check_support_srg_condition(const VectorialFunction& F) {
  const int n = F.input_arity();
  const int m = F.output_arity();
  SupportSrgReport report;
  if (n % 2 != 0) report.warnings.push_back("odd arity n=" + std::to_string(n) + ": no bent components exist");
  for (int i = 1; i <= m; ++i) {
    if (F.component(i)(0)) {
      report.warnings.push_back("f" + std::to_string(i) +
                                "(0)=1: loops are dropped before counting");
    }
  }

  std::vector<PointSet> supports;
  for (const auto& c : F.components()) supports.push_back(support(c));

  for (std::uint32_t v = 1; v < (std::uint32_t{1} << m); ++v) {
    SubsetReport r{.subset = v, .indices = {}, .support = PointSet(n), .matches_combination = false,
                   .check = {}, .lambda_equals_mu = false};
    std::vector<PointSet> chosen;
    for (int i = 1; i <= m; ++i) {
      if ((v >> (m - i)) & 1u) {
        r.indices.push_back(i);
        chosen.push_back(supports[static_cast<std::size_t>(i - 1)]);
      }
    }
    r.support = nary_symmetric_difference(chosen);
    r.matches_combination = r.support == support(component_combination(F, v));
    r.check = check_srg(CayleyGraph(r.support));
    r.lambda_equals_mu = r.check.is_srg() && r.check.params->lambda_equals_mu();
    report.subsets.push_back(std::move(r));
  }
  return report;
}

}  // namespace bentgraph
