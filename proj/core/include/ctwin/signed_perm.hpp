#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ctwin {

/**
 * A monomial matrix of order n stored as a permutation plus a sign per column.
 *
 * Column c has its single nonzero entry signs[c] in row perm[c]. Every value
 * is exact; no dense storage is kept.
 */
class SignedPerm {
 public:
  SignedPerm() = default;

  /// Throws ctwin::Error unless perm is a permutation of 0..n-1 and every
  /// sign is +1 or -1.
  SignedPerm(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs);

  static SignedPerm identity(std::size_t n);

  std::size_t order() const noexcept { return perm_.size(); }
  std::span<const std::uint32_t> perm() const noexcept { return perm_; }
  std::span<const std::int8_t> signs() const noexcept { return signs_; }

  std::uint32_t row_of(std::size_t col) const { return perm_[col]; }
  int sign_of(std::size_t col) const { return signs_[col]; }

  /// Dense entry M[row, col] in {-1, 0, +1}.
  int entry(std::size_t row, std::size_t col) const;

  bool is_identity_permutation() const noexcept;

  /// Row-major dense reconstruction; meant for tests and debugging only.
  std::vector<int> dense() const;

  std::string to_string() const;

  friend bool operator==(const SignedPerm&, const SignedPerm&) = default;

 private:
  std::vector<std::uint32_t> perm_;
  std::vector<std::int8_t> signs_;
};

SignedPerm negate(const SignedPerm& a);
SignedPerm transpose(const SignedPerm& a);

/// Matrix product a*b. Throws SizeMismatch if the orders differ.
SignedPerm multiply(const SignedPerm& a, const SignedPerm& b);

/// Kronecker product a (x) b of order a.order() * b.order().
SignedPerm kron(const SignedPerm& a, const SignedPerm& b);

inline SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) { return multiply(a, b); }
inline SignedPerm operator-(const SignedPerm& a) { return negate(a); }

/// True when the supports of a and b are disjoint, i.e. no column of a has its
/// nonzero entry in the same row as the corresponding column of b.
bool disjoint_support(const SignedPerm& a, const SignedPerm& b);

}  // namespace ctwin
