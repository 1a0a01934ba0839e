#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace snnpat {

inline constexpr int kMaxCodeWordBits = 32;

/// An n-bit spatial pattern. Bit i drives injector neuron i of the population
/// named by the bit's value.
class CodeWord {
 public:
  /// Throws ValidationError unless 1 <= n_bits <= 32 and value < 2^n_bits.
  CodeWord(std::uint64_t value, int n_bits);

  std::uint64_t value() const { return value_; }
  int n_bits() const { return n_bits_; }
  bool bit(int i) const { return ((value_ >> i) & 1U) != 0; }
  CodeWord complement() const;

  auto operator<=>(const CodeWord&) const = default;

 private:
  std::uint64_t value_;
  int n_bits_;
};

/// Population count of a XOR b. Throws ValidationError on a width mismatch.
int hamming(const CodeWord& a, const CodeWord& b);

/// Parses a decimal code word ("992"). Throws ValidationError on junk or overflow.
CodeWord parse_codeword(std::string_view text, int n_bits);

/// Parses a comma-separated list ("992,960").
std::vector<CodeWord> parse_codeword_list(std::string_view text, int n_bits);

std::string to_string(const CodeWord& w);

}  // namespace snnpat
