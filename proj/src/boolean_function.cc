#include "bentgraph/boolean_function.h"

#include <algorithm>
#include <bit>
#include <cstdlib>

#include "bentgraph/transform.h"

namespace bentgraph {

std::string bit_string(std::uint32_t i, int n) {
  std::string out(static_cast<std::size_t>(n), '0');
  for (int j = 0; j < n; ++j) {
    if ((i >> (n - 1 - j)) & 1u) out[static_cast<std::size_t>(j)] = '1';
  }
  return out;
}

namespace {

void require_arity(int n, int lo) {
  if (n < lo || n > kMaxArity) {
    throw InvalidInput("arity " + std::to_string(n) + " outside [" + std::to_string(lo) +
                       ", " + std::to_string(kMaxArity) + "]");
  }
}

}  // namespace

BooleanFunction::BooleanFunction(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)) {
  require_arity(n, 1);
  const std::size_t expected = std::size_t{1} << n;
  if (table_.size() != expected) {
    throw InvalidInput("truth table has " + std::to_string(table_.size()) +
                       " entries, expected " + std::to_string(expected));
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] > 1) {
      throw InvalidInput("truth table entry " + std::to_string(i) + " is not 0 or 1");
    }
  }
}

BooleanFunction BooleanFunction::zero(int n) {
  require_arity(n, 1);
  return BooleanFunction(n, std::vector<std::uint8_t>(std::size_t{1} << n, 0));
}

std::uint32_t BooleanFunction::weight() const {
  return static_cast<std::uint32_t>(std::count(table_.begin(), table_.end(), std::uint8_t{1}));
}

BooleanFunction BooleanFunction::complement() const {
  std::vector<std::uint8_t> t(table_);
  for (auto& b : t) b ^= 1;
  return BooleanFunction(n_, std::move(t));
}

BooleanFunction BooleanFunction::operator^(const BooleanFunction& other) const {
  if (other.n_ != n_) {
    throw InvalidInput("cannot xor functions of arity " + std::to_string(n_) + " and " +
                       std::to_string(other.n_));
  }
  std::vector<std::uint8_t> t(table_);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] ^= other.table_[i];
  return BooleanFunction(n_, std::move(t));
}

BooleanFunction BooleanFunction::translate(std::uint32_t shift) const {
  if (shift >= size()) throw InvalidInput("translation vector has more than n bits");
  std::vector<std::uint8_t> t(table_.size());
  for (std::uint32_t x = 0; x < size(); ++x) t[x] = table_[x ^ shift];
  return BooleanFunction(n_, std::move(t));
}

std::string BooleanFunction::to_bit_string() const {
  std::string s(table_.size(), '0');
  for (std::size_t i = 0; i < table_.size(); ++i) s[i] = static_cast<char>('0' + table_[i]);
  return s;
}

PointSet::PointSet(int n, std::vector<std::uint32_t> members) : n_(n), members_(std::move(members)) {
  require_arity(n, 1);
  std::sort(members_.begin(), members_.end());
  const std::uint64_t bound = std::uint64_t{1} << n;
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= bound) {
      throw InvalidInput("point " + std::to_string(members_[i]) + " has more than " +
                         std::to_string(n) + " bits");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw InvalidInput("duplicate point " + bit_string(members_[i], n));
    }
  }
}

bool PointSet::contains(std::uint32_t x) const {
  return std::binary_search(members_.begin(), members_.end(), x);
}

BooleanFunction from_truth_table(int n, std::string_view bits) {
  require_arity(n, 1);
  const std::size_t expected = std::size_t{1} << n;
  if (bits.size() != expected) {
    throw InvalidInput("truth table of length " + std::to_string(bits.size()) +
                       ", expected length " + std::to_string(expected) + " for n=" +
                       std::to_string(n));
  }
  std::vector<std::uint8_t> t(expected);
  for (std::size_t i = 0; i < expected; ++i) {
    if (bits[i] != '0' && bits[i] != '1') {
      throw InvalidInput("non-binary symbol '" + std::string(1, bits[i]) + "' at position " +
                         std::to_string(i));
    }
    t[i] = static_cast<std::uint8_t>(bits[i] - '0');
  }
  return BooleanFunction(n, std::move(t));
}

BooleanFunction from_support(const PointSet& s) {
  auto f = BooleanFunction::zero(s.arity());
  std::vector<std::uint8_t> t(f.table().begin(), f.table().end());
  for (auto x : s.members()) t[x] = 1;
  return BooleanFunction(s.arity(), std::move(t));
}

PointSet support(const BooleanFunction& f) {
  std::vector<std::uint32_t> members;
  members.reserve(f.weight());
  for (std::uint32_t x = 0; x < f.size(); ++x) {
    if (f(x)) members.push_back(x);
  }
  return PointSet(f.arity(), std::move(members));
}

std::vector<BooleanFunction> affine_functions(int n, const ResourceLimits& limits) {
  require_arity(n, 1);
  if (n > limits.max_brute_force_arity) {
    throw ResourceLimitExceeded("affine enumeration limited to n <= " +
                                std::to_string(limits.max_brute_force_arity) + ", got n=" +
                                std::to_string(n));
  }
  const std::uint32_t size = std::uint32_t{1} << n;
  std::vector<BooleanFunction> out;
  out.reserve(std::size_t{2} * size);
  for (std::uint32_t a = 0; a < size; ++a) {
    for (std::uint8_t c = 0; c <= 1; ++c) {
      std::vector<std::uint8_t> t(size);
      for (std::uint32_t x = 0; x < size; ++x) t[x] = static_cast<std::uint8_t>(dot(a, x) ^ c);
      out.emplace_back(n, std::move(t));
    }
  }
  return out;
}

std::uint64_t nonlinearity(const BooleanFunction& f, const ResourceLimits& limits) {
  const auto s = signed_walsh(f, limits);
  std::int64_t peak = 0;
  for (auto v : s.values) peak = std::max(peak, std::abs(v));
  return static_cast<std::uint64_t>((std::int64_t{1} << (f.arity() - 1)) - peak / 2);
}

std::uint64_t nonlinearity_brute_force(const BooleanFunction& f, const ResourceLimits& limits) {
  const int n = f.arity();
  if (n > limits.max_brute_force_arity) {
    throw ResourceLimitExceeded("brute-force nonlinearity limited to n <= " +
                                std::to_string(limits.max_brute_force_arity) + ", got n=" +
                                std::to_string(n));
  }
  // Distance to a.x xor 1 is 2^n minus the distance to a.x, so the linear
  // half of the affine set is enough.
  const std::uint32_t size = f.size();
  std::uint64_t best = size;
  for (std::uint32_t a = 0; a < size; ++a) {
    std::uint64_t d = 0;
    for (std::uint32_t x = 0; x < size; ++x) d += (f(x) ^ dot(a, x));
    best = std::min({best, d, size - d});
  }
  return best;
}

std::uint64_t bent_nonlinearity(int n) {
  if (n < 2 || n % 2 != 0 || n > 62) throw InvalidInput("bent bound needs even n in [2, 62]");
  return ((std::uint64_t{1} << n) - (std::uint64_t{1} << (n / 2))) / 2;
}

BentVerdict is_bent(const BooleanFunction& f, const ResourceLimits& limits) {
  if (f.arity() % 2 != 0) return {false, "arity must be even"};
  const auto nl = nonlinearity(f, limits);
  const auto bound = bent_nonlinearity(f.arity());
  if (nl != bound) {
    return {false, "nonlinearity " + std::to_string(nl) + " differs from the bent value " +
                       std::to_string(bound)};
  }
  return {true, {}};
}

}  // namespace bentgraph
