#include "bentgraph/generators.h"

#include <random>

#include "bentgraph/transform.h"

namespace bentgraph {

Permutation::Permutation(std::vector<std::uint32_t> mapping) : mapping_(std::move(mapping)) {
  std::vector<std::uint8_t> hit(mapping_.size(), 0);
  for (auto y : mapping_) {
    if (y >= mapping_.size() || hit[y]) {
      throw InvalidInput("mapping is not a bijection on {0.." +
                         std::to_string(mapping_.size() - 1) + "}");
    }
    hit[y] = 1;
  }
}

Permutation Permutation::identity(std::uint32_t size) {
  std::vector<std::uint32_t> m(size);
  for (std::uint32_t i = 0; i < size; ++i) m[i] = i;
  return Permutation(std::move(m));
}

Permutation Permutation::random(std::uint32_t size, std::uint64_t seed) {
  std::vector<std::uint32_t> m(size);
  for (std::uint32_t i = 0; i < size; ++i) m[i] = i;
  std::mt19937_64 rng(seed);
  for (std::uint32_t i = size; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(rng() % i);
    std::swap(m[i - 1], m[j]);
  }
  return Permutation(std::move(m));
}

BooleanFunction mm_bent(int n, const Permutation& pi, const BooleanFunction& g) {
  if (n < 2 || n % 2 != 0 || n > kMaxArity) throw InvalidInput("Maiorana-McFarland needs even n >= 2");
  const int half = n / 2;
  const std::uint32_t side = std::uint32_t{1} << half;
  if (pi.size() != side) {
    throw InvalidInput("permutation has size " + std::to_string(pi.size()) + ", expected " +
                       std::to_string(side));
  }
  if (g.arity() != half) {
    throw InvalidInput("g has arity " + std::to_string(g.arity()) + ", expected " + std::to_string(half));
  }
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  for (std::uint32_t x = 0; x < side; ++x) {
    for (std::uint32_t y = 0; y < side; ++y) {
      t[(x << half) | y] = static_cast<std::uint8_t>(dot(x, pi(y)) ^ g(y));
    }
  }
  return BooleanFunction(n, std::move(t));
}

std::uint32_t gf2m_modulus(int m) {
  switch (m) {
    case 1: return 0b11;         // x + 1
    case 2: return 0b111;        // x^2 + x + 1
    case 3: return 0b1011;       // x^3 + x + 1
    case 4: return 0b10011;      // x^4 + x + 1
    case 5: return 0b100101;     // x^5 + x^2 + 1
    case 6: return 0b1000011;    // x^6 + x + 1
    case 7: return 0b10000011;   // x^7 + x + 1
    case 8: return 0b100011011;  // x^8 + x^4 + x^3 + x + 1
    default: throw InvalidInput("no reduction polynomial for GF(2^" + std::to_string(m) + ")");
  }
}

std::uint32_t gf2m_multiply(std::uint32_t a, std::uint32_t b, int m) {
  const std::uint32_t modulus = gf2m_modulus(m);
  const std::uint32_t top = std::uint32_t{1} << m;
  if (a >= top || b >= top) throw InvalidInput("operand outside GF(2^" + std::to_string(m) + ")");
  std::uint32_t product = 0;
  for (; b != 0; b >>= 1) {
    if (b & 1u) product ^= a;
    a <<= 1;
    if (a & top) a ^= modulus;
  }
  return product;
}

VectorialFunction nyberg_vectorial_bent(int n) {
  if (n < 2 || n % 2 != 0 || n > 16) throw InvalidInput("field-multiplication construction needs even n in [2, 16]");
  const int half = n / 2;
  const std::uint32_t mask = (std::uint32_t{1} << half) - 1;
  std::vector<std::uint32_t> outputs(std::size_t{1} << n);
  for (std::uint32_t i = 0; i < outputs.size(); ++i) {
    outputs[i] = gf2m_multiply(i >> half, i & mask, half);
  }
  return VectorialFunction::from_lookup(n, half, outputs);
}

std::vector<BooleanFunction> enumerate_bent(int n) {
  if (n != 2 && n != 4) throw InvalidInput("exhaustive bent enumeration supports n=2 and n=4 only");
  const std::uint32_t size = std::uint32_t{1} << n;
  const std::uint64_t tables = std::uint64_t{1} << size;
  const std::int64_t flat = std::int64_t{1} << (n / 2);
  std::vector<BooleanFunction> out;
  std::vector<std::int64_t> spectrum(size);
  for (std::uint64_t t = 0; t < tables; ++t) {
    for (std::uint32_t i = 0; i < size; ++i) spectrum[i] = ((t >> (size - 1 - i)) & 1u) ? -1 : 1;
    walsh_hadamard_transform(spectrum);
    bool is_flat = true;
    for (auto s : spectrum) is_flat = is_flat && (s == flat || s == -flat);
    if (!is_flat) continue;
    std::vector<std::uint8_t> table(size);
    for (std::uint32_t i = 0; i < size; ++i) table[i] = static_cast<std::uint8_t>((t >> (size - 1 - i)) & 1u);
    out.emplace_back(n, std::move(table));
  }
  return out;
}

BooleanFunction random_function(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxArity) throw InvalidInput("arity out of range");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> t(std::size_t{1} << n);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i % 64 == 0) word = rng();
    t[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
  }
  return BooleanFunction(n, std::move(t));
}

}  // namespace bentgraph
