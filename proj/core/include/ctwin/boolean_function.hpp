#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ctwin {

/// Largest arity a truth table may have.
inline constexpr unsigned kMaxArity = 30;

/**
 * Truth table of f : Z_2^n -> Z_2, packed one bit per entry. Entry i is f
 * evaluated on the binary digits of i.
 */
class BooleanFunction {
 public:
  /// The all-zeros function of the given arity (0..kMaxArity).
  explicit BooleanFunction(unsigned arity);

  /// Builds a table from a string of '0'/'1' characters, entry 0 first.
  static BooleanFunction from_bits(std::string_view bits);

  /// The function whose support is exactly the given elements.
  static BooleanFunction from_support(unsigned arity, std::span<const std::uint64_t> support);

  unsigned arity() const noexcept { return arity_; }
  std::uint64_t size() const noexcept { return std::uint64_t{1} << arity_; }

  bool operator[](std::uint64_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  bool at(std::uint64_t i) const;
  void set(std::uint64_t i, bool value);

  /// Number of entries equal to 1.
  std::uint64_t weight() const noexcept;
  std::vector<std::uint64_t> support() const;

  BooleanFunction complement() const;

  /// Entry 0 first, one character per entry.
  std::string to_bits() const;

  std::span<const std::uint64_t> words() const noexcept { return words_; }

  friend BooleanFunction operator^(const BooleanFunction& a, const BooleanFunction& b);
  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;

 private:
  void clear_padding() noexcept;

  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

/// "tt:<arity>:<hex>", lowercase hex with the most significant table entry
/// first. Arity 0 and 1 tables occupy a single hex digit.
std::string to_tt_string(const BooleanFunction& f);

/// Inverse of to_tt_string. Throws ctwin::Error on malformed input.
BooleanFunction parse_tt_string(std::string_view text);

}  // namespace ctwin
