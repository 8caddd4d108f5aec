#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ctwin/error.hpp"
#include "ctwin/signed_perm.hpp"

namespace ctwin {

/// Largest level m for which a PairIndex is representable (4^m fits in 64 bits).
inline constexpr unsigned kMaxPairLevel = 31;

/**
 * An element of Z_2^{2m} read as m bit pairs, i.e. m base-4 digits with
 * digit m-1 the most significant.
 */
class PairIndex {
 public:
  /// Throws RangeError unless 1 <= m <= kMaxPairLevel and value < 4^m.
  PairIndex(unsigned m, std::uint64_t value);

  /// Reassembles digits given most significant first.
  static PairIndex from_digits(std::span<const unsigned> digits_msb_first);

  unsigned m() const noexcept { return m_; }
  std::uint64_t value() const noexcept { return value_; }

  /// Base-4 digit k, k = 0 being the least significant pair.
  unsigned digit(unsigned k) const;

  /// All m digits, most significant first.
  std::vector<unsigned> digits() const;

  static constexpr std::uint64_t count(unsigned m) { return std::uint64_t{1} << (2 * m); }

  friend bool operator==(const PairIndex&, const PairIndex&) = default;

 private:
  unsigned m_;
  std::uint64_t value_;
};

/// The 2x2 generators of the real monomial representation of G_{1,1}, in
/// coset order 0 <-> I, 1 <-> E1, 2 <-> E2, 3 <-> E1 E2.
enum class Generator : unsigned { I2 = 0, E1 = 1, E2 = 2, E1E2 = 3 };

SignedPerm generator(Generator which);

/// Largest m for which gamma() materializes a matrix (order 2^m).
inline constexpr unsigned kMaxGammaLevel = 20;

/// Positive signed basis element gamma_m(i): the Kronecker product of the
/// generators selected by the digits of i, most significant digit leftmost.
SignedPerm gamma(PairIndex i);

enum class SymmetryClass { Skew, Diagonal, SymmetricOffDiagonal };

std::string_view to_string(SymmetryClass c) noexcept;

/// Raised by classify() for a matrix that is neither symmetric nor skew.
class NotBasisElement : public Error {
 public:
  using Error::Error;
};

/// Skew if a^T = -a, Diagonal if a is diagonal, SymmetricOffDiagonal if
/// a^T = a with off-diagonal support.
SymmetryClass classify(const SignedPerm& a);

/// Number of basis elements of Rep(R_{m,m}) that are diagonal, by enumeration
/// through gamma() and classify(). m must lie in 1..10.
std::uint64_t diagonal_count(unsigned m);

/**
 * All 4^m elements of the positive signed basis, materialized, with the
 * inverse lookup from a signed permutation back to its index.
 */
class PositiveSignedBasis {
 public:
  /// m must lie in 1..8.
  explicit PositiveSignedBasis(unsigned m);

  unsigned m() const noexcept { return m_; }
  std::uint64_t size() const noexcept { return elements_.size(); }
  const SignedPerm& operator[](std::uint64_t i) const { return elements_.at(i); }

  struct Located {
    std::uint64_t index;
    int sign;  // a == sign * gamma(index)
  };

  /// Finds i and s with a == s * gamma_m(i); nullopt when a is not +/- a basis
  /// element of this level.
  std::optional<Located> locate(const SignedPerm& a) const;

 private:
  unsigned m_;
  std::vector<SignedPerm> elements_;
  std::vector<std::uint64_t> sorted_;  // indices ordered by (perm, signs)
};

}  // namespace ctwin
