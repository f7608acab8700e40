#include "bentgraph/cli/function_parser.h"

#include <bit>
#include <cctype>
#include <vector>

namespace bentgraph::cli {

namespace {

std::string valid_lengths(std::size_t per_symbol) {
  std::string s;
  for (int n = 1; n <= 6; ++n) {
    const std::size_t entries = std::size_t{1} << n;
    if (entries % per_symbol != 0) continue;
    if (!s.empty()) s += ", ";
    s += std::to_string(entries / per_symbol);
  }
  return s + ", ... (2^n table entries)";
}

BooleanFunction parse_binary(std::string_view body, std::size_t offset) {
  if (body.size() < 2 || !std::has_single_bit(body.size())) {
    throw ParseError(offset, "binary table has length " + std::to_string(body.size()) +
                                 "; valid lengths are " + valid_lengths(1));
  }
  const int n = std::countr_zero(body.size());
  if (n > kMaxArity) throw ParseError(offset, "table exceeds the maximum arity " + std::to_string(kMaxArity));
  std::vector<std::uint8_t> t(body.size());
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (body[i] != '0' && body[i] != '1') {
      throw ParseError(offset + i, std::string("expected 0 or 1, found '") + body[i] + "'");
    }
    t[i] = static_cast<std::uint8_t>(body[i] - '0');
  }
  return BooleanFunction(n, std::move(t));
}

BooleanFunction parse_hex(std::string_view body, std::size_t offset) {
  if (body.empty() || !std::has_single_bit(body.size())) {
    throw ParseError(offset, "hex table has " + std::to_string(body.size()) +
                                 " digits; valid digit counts are " + valid_lengths(4));
  }
  const int n = std::countr_zero(body.size()) + 2;
  if (n > kMaxArity) throw ParseError(offset, "table exceeds the maximum arity " + std::to_string(kMaxArity));
  std::vector<std::uint8_t> t(body.size() * 4);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    int nibble;
    if (c >= '0' && c <= '9') {
      nibble = c - '0';
    } else if (c >= 'a' && c <= 'f') {
      nibble = c - 'a' + 10;
    } else if (c >= 'A' && c <= 'F') {
      nibble = c - 'A' + 10;
    } else {
      throw ParseError(offset + i, std::string("expected a hex digit, found '") + c + "'");
    }
    for (int b = 0; b < 4; ++b) t[4 * i + static_cast<std::size_t>(b)] = static_cast<std::uint8_t>((nibble >> (3 - b)) & 1);
  }
  return BooleanFunction(n, std::move(t));
}

// Recursive-descent reader for sums of products of variables and constants.
class AnfReader {
 public:
  AnfReader(std::string_view text, std::size_t offset, int n)
      : text_(text), offset_(offset), n_(n), coefficients_(std::size_t{1} << n, 0) {}

  std::vector<std::uint8_t> read() {
    read_term();
    skip_space();
    while (pos_ < text_.size()) {
      if (text_[pos_] != '+') fail("expected '+' or end of expression");
      ++pos_;
      read_term();
      skip_space();
    }
    return coefficients_;
  }

 private:
  void read_term() {
    std::uint32_t monomial = 0;
    bool vanishes = false;
    read_factor(monomial, vanishes);
    skip_space();
    while (pos_ < text_.size() && text_[pos_] == '*') {
      ++pos_;
      read_factor(monomial, vanishes);
      skip_space();
    }
    if (!vanishes) coefficients_[monomial] ^= 1;
  }

  void read_factor(std::uint32_t& monomial, bool& vanishes) {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a variable or constant");
    const char c = text_[pos_];
    if (c == '0' || c == '1') {
      if (c == '0') vanishes = true;
      ++pos_;
      return;
    }
    if (c != 'x') fail(std::string("unexpected '") + c + "'");
    const std::size_t start = pos_++;
    int index = 0;
    std::size_t digits = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      index = index * 10 + (text_[pos_] - '0');
      if (index > 1000) break;
      ++pos_;
      ++digits;
    }
    if (digits == 0 || index < 1 || index > n_) {
      pos_ = start;
      fail("variable index must be in 1.." + std::to_string(n_));
    }
    monomial |= std::uint32_t{1} << (n_ - index);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(offset_ + pos_, message); }

  std::string_view text_;
  std::size_t offset_;
  int n_;
  std::size_t pos_ = 0;
  std::vector<std::uint8_t> coefficients_;
};

BooleanFunction parse_anf(std::string_view body, std::size_t offset) {
  if (!body.starts_with("n=")) throw ParseError(offset, "ANF spec must start with n=<arity>:");
  std::size_t pos = 2;
  int n = 0;
  while (pos < body.size() && std::isdigit(static_cast<unsigned char>(body[pos])) && n <= kMaxArity) {
    n = n * 10 + (body[pos] - '0');
    ++pos;
  }
  if (pos == 2 || n < 1 || n > kMaxArity) {
    throw ParseError(offset + 2, "arity must be an integer in 1.." + std::to_string(kMaxArity));
  }
  if (pos >= body.size() || body[pos] != ':') throw ParseError(offset + pos, "expected ':' after the arity");
  ++pos;
  auto table = AnfReader(body.substr(pos), offset + pos, n).read();
  // Binary Moebius transform: f(x) = xor of the coefficients of monomials
  // contained in x.
  for (int b = 0; b < n; ++b) {
    const std::uint32_t bit = std::uint32_t{1} << b;
    for (std::uint32_t x = 0; x < table.size(); ++x) {
      if (x & bit) table[x] ^= table[x ^ bit];
    }
  }
  return BooleanFunction(n, std::move(table));
}

}  // namespace

BooleanFunction parse_function(std::string_view spec, std::optional<int> expected_arity) {
  if (spec.size() < 2 || spec[1] != ':') {
    throw ParseError(0, "function spec must start with b:, h: or a:");
  }
  const std::string_view body = spec.substr(2);
  BooleanFunction f = [&] {
    switch (spec[0]) {
      case 'b': return parse_binary(body, 2);
      case 'h': return parse_hex(body, 2);
      case 'a': return parse_anf(body, 2);
      default: throw ParseError(0, std::string("unknown spec kind '") + spec[0] + "', expected b, h or a");
    }
  }();
  if (expected_arity && f.arity() != *expected_arity) {
    throw ParseError(2, "spec has arity " + std::to_string(f.arity()) + " but n=" +
                            std::to_string(*expected_arity) + " was requested");
  }
  return f;
}

}  // namespace bentgraph::cli
