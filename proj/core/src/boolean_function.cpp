#include "ctwin/boolean_function.hpp"

#include <bit>
#include <charconv>

#include "ctwin/error.hpp"

namespace ctwin {

namespace {

std::size_t word_count(unsigned arity) {
  return static_cast<std::size_t>(((std::uint64_t{1} << arity) + 63) / 64);
}

}  // namespace

BooleanFunction::BooleanFunction(unsigned arity) : arity_(arity) {
  if (arity > kMaxArity)
    throw RangeError("BooleanFunction: arity " + std::to_string(arity) + " exceeds " +
                     std::to_string(kMaxArity));
  words_.assign(word_count(arity), 0);
}

BooleanFunction BooleanFunction::from_bits(std::string_view bits) {
  const std::size_t len = bits.size();
  if (len == 0 || !std::has_single_bit(len))
    throw Error("BooleanFunction: table length must be a power of two");
  BooleanFunction f(static_cast<unsigned>(std::countr_zero(len)));
  for (std::size_t i = 0; i < len; ++i) {
    if (bits[i] != '0' && bits[i] != '1')
      throw Error("BooleanFunction: table must contain only '0' and '1'");
    f.set(i, bits[i] == '1');
  }
  return f;
}

BooleanFunction BooleanFunction::from_support(unsigned arity, std::span<const std::uint64_t> support) {
  BooleanFunction f(arity);
  for (auto x : support)
    f.set(x, true);
  return f;
}

bool BooleanFunction::at(std::uint64_t i) const {
  if (i >= size())
    throw RangeError("BooleanFunction: index out of range");
  return (*this)[i];
}

void BooleanFunction::set(std::uint64_t i, bool value) {
  if (i >= size())
    throw RangeError("BooleanFunction: index out of range");
  const std::uint64_t bit = std::uint64_t{1} << (i & 63);
  if (value)
    words_[i >> 6] |= bit;
  else
    words_[i >> 6] &= ~bit;
}

std::uint64_t BooleanFunction::weight() const noexcept {
  std::uint64_t w = 0;
  for (auto word : words_)
    w += static_cast<std::uint64_t>(std::popcount(word));
  return w;
}

std::vector<std::uint64_t> BooleanFunction::support() const {
  std::vector<std::uint64_t> out;
  out.reserve(weight());
  for (std::size_t w = 0; w < words_.size(); ++w) {
    for (auto bits = words_[w]; bits; bits &= bits - 1)
      out.push_back(w * 64 + static_cast<std::uint64_t>(std::countr_zero(bits)));
  }
  return out;
}

BooleanFunction BooleanFunction::complement() const {
  BooleanFunction out = *this;
  for (auto& word : out.words_)
    word = ~word;
  out.clear_padding();
  return out;
}

std::string BooleanFunction::to_bits() const {
  std::string out(size(), '0');
  for (std::uint64_t i = 0; i < size(); ++i)
    if ((*this)[i])
      out[i] = '1';
  return out;
}

BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b) {
  if (a.arity_ != b.arity_)
    throw SizeMismatch("BooleanFunction: arity mismatch in xor");
  BooleanFunction out = a;
  for (std::size_t w = 0; w < out.words_.size(); ++w)
    out.words_[w] ^= b.words_[w];
  return out;
}

void BooleanFunction::clear_padding() noexcept {
  if (size() < 64)
    words_[0] &= (std::uint64_t{1} << size()) - 1;
}

std::string to_tt_string(const BooleanFunction& f) {
  static constexpr char kHex[] = "0123456789abcdef";
  const std::uint64_t digits = f.size() < 4 ? 1 : f.size() / 4;
  std::string out = "tt:" + std::to_string(f.arity()) + ":";
  out.reserve(out.size() + digits);
  for (std::uint64_t k = digits; k-- > 0;) {
    unsigned nibble = 0;
    for (unsigned j = 0; j < 4; ++j) {
      const std::uint64_t i = 4 * k + j;
      if (i < f.size() && f[i])
        nibble |= 1u << j;
    }
    out.push_back(kHex[nibble]);
  }
  return out;
}

BooleanFunction parse_tt_string(std::string_view text) {
  if (!text.starts_with("tt:"))
    throw Error("truth table: missing 'tt:' prefix");
  text.remove_prefix(3);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos)
    throw Error("truth table: missing arity separator");
  unsigned arity = 0;
  const auto arity_text = text.substr(0, colon);
  auto [ptr, ec] = std::from_chars(arity_text.data(), arity_text.data() + arity_text.size(), arity);
  if (ec != std::errc{} || ptr != arity_text.data() + arity_text.size())
    throw Error("truth table: bad arity");
  BooleanFunction f(arity);
  const auto hex = text.substr(colon + 1);
  const std::uint64_t digits = f.size() < 4 ? 1 : f.size() / 4;
  if (hex.size() != digits)
    throw Error("truth table: expected " + std::to_string(digits) + " hex digits, got " +
                std::to_string(hex.size()));
  for (std::uint64_t pos = 0; pos < digits; ++pos) {
    const char ch = hex[pos];
    unsigned nibble = 0;
    if (ch >= '0' && ch <= '9')
      nibble = static_cast<unsigned>(ch - '0');
    else if (ch >= 'a' && ch <= 'f')
      nibble = static_cast<unsigned>(ch - 'a' + 10);
    else
      throw Error("truth table: hex digits must be lowercase 0-9a-f");
    const std::uint64_t k = digits - 1 - pos;
    for (unsigned j = 0; j < 4; ++j) {
      const std::uint64_t i = 4 * k + j;
      const bool bit = (nibble >> j) & 1u;
      if (i >= f.size()) {
        if (bit)
          throw Error("truth table: bits set beyond the table length");
        continue;
      }
      f.set(i, bit);
    }
  }
  return f;
}

}  // namespace ctwin
