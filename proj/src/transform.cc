#include "bentgraph/transform.h"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <functional>

namespace bentgraph {

namespace {

void require_walsh_arity(int n, const ResourceLimits& limits) {
  if (n > limits.max_walsh_arity) {
    throw ResourceLimitExceeded("Walsh transform limited to n <= " +
                                std::to_string(limits.max_walsh_arity) + ", got n=" +
                                std::to_string(n));
  }
}

}  // namespace

void walsh_hadamard_transform(std::span<std::int64_t> data) {
  const std::size_t size = data.size();
  if (!std::has_single_bit(size)) {
    throw InvalidInput("butterfly length " + std::to_string(size) + " is not a power of two");
  }
  for (std::size_t half = 1; half < size; half <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * half) {
      for (std::size_t i = block; i < block + half; ++i) {
        const std::int64_t a = data[i];
        const std::int64_t b = data[i + half];
        data[i] = a + b;
        data[i + half] = a - b;
      }
    }
  }
}

FourierSpectrum fourier(const BooleanFunction& f, const ResourceLimits& limits) {
  require_walsh_arity(f.arity(), limits);
  FourierSpectrum s{f.arity(), std::vector<std::int64_t>(f.table().begin(), f.table().end())};
  walsh_hadamard_transform(s.numerators);
  return s;
}

SignedWalshSpectrum signed_walsh(const BooleanFunction& f, const ResourceLimits& limits) {
  require_walsh_arity(f.arity(), limits);
  SignedWalshSpectrum s{f.arity(), std::vector<std::int64_t>(f.size())};
  for (std::uint32_t x = 0; x < f.size(); ++x) s.values[x] = f(x) ? -1 : 1;
  walsh_hadamard_transform(s.values);
  return s;
}

std::size_t CayleyEigenvalues::multiplicity(std::int64_t value) const {
  const auto range = std::equal_range(sorted.begin(), sorted.end(), value, std::greater<>());
  return static_cast<std::size_t>(range.second - range.first);
}

CayleyEigenvalues cayley_eigenvalues(const BooleanFunction& f, const ResourceLimits& limits) {
  CayleyEigenvalues e;
  e.indexed = fourier(f, limits).numerators;
  e.sorted = e.indexed;
  std::sort(e.sorted.begin(), e.sorted.end(), std::greater<>());
  return e;
}

bool satisfies_parseval(const SignedWalshSpectrum& s) {
  std::int64_t total = 0;
  for (auto v : s.values) total += v * v;
  return total == (std::int64_t{1} << (2 * s.n));
}

bool is_flat(const SignedWalshSpectrum& s) {
  if (s.n % 2 != 0) return false;
  const std::int64_t target = std::int64_t{1} << (s.n / 2);
  return std::all_of(s.values.begin(), s.values.end(),
                     [target](std::int64_t v) { return std::abs(v) == target; });
}

}  // namespace bentgraph
