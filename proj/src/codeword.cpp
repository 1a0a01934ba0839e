#include "snnpat/codeword.h"

#include <bit>
#include <charconv>

#include "snnpat/errors.h"

namespace snnpat {

CodeWord::CodeWord(std::uint64_t value, int n_bits) : value_(value), n_bits_(n_bits) {
  if (n_bits < 1 || n_bits > kMaxCodeWordBits) {
    throw ValidationError("code word width must be 1.." + std::to_string(kMaxCodeWordBits) +
                          ", got " + std::to_string(n_bits));
  }
  if (value >> n_bits != 0) {
    throw ValidationError("code word " + std::to_string(value) + " does not fit in " +
                          std::to_string(n_bits) + " bits");
  }
}

CodeWord CodeWord::complement() const {
  const std::uint64_t mask = (std::uint64_t{1} << n_bits_) - 1;
  return {~value_ & mask, n_bits_};
}

int hamming(const CodeWord& a, const CodeWord& b) {
  if (a.n_bits() != b.n_bits()) {
    throw ValidationError("hamming: width mismatch (" + std::to_string(a.n_bits()) + " vs " +
                          std::to_string(b.n_bits()) + ")");
  }
  return std::popcount(a.value() ^ b.value());
}

CodeWord parse_codeword(std::string_view text, int n_bits) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::uint64_t value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end) {
    throw ValidationError("not a code word: '" + std::string(text) + "'");
  }
  return {value, n_bits};
}

std::vector<CodeWord> parse_codeword_list(std::string_view text, int n_bits) {
  std::vector<CodeWord> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t stop = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_codeword(text.substr(start, stop - start), n_bits));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const CodeWord& w) { return std::to_string(w.value()); }

}  // namespace snnpat
