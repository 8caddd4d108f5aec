#pragma once

#include <cstdint>
#include <string>

#include "ctwin/boolean_function.hpp"
#include "ctwin/clifford_basis.hpp"
#include "ctwin/error.hpp"
#include "ctwin/walsh.hpp"

namespace ctwin {

// Bentness.

/// True iff every Walsh coefficient has magnitude 2^{n/2}. Always false for
/// odd arity.
bool is_bent(const BooleanFunction& f);
bool is_bent(const WalshSpectrum& spectrum);

class NotBent : public Error {
 public:
  using Error::Error;
};

/// Dual bent function: entry i is 1 iff Walsh coefficient i is negative.
/// Throws NotBent if any coefficient has the wrong magnitude.
BooleanFunction dual(const BooleanFunction& f);

// The twin functions on Z_2^{2m}. Neither touches the matrix representation.

/// Sign-of-square: parity of the number of base-4 digits of i equal to 1.
bool sigma(PairIndex i) noexcept;

/// Non-diagonal-symmetry: tau_1 is 1 only on 10; for m > 1 the leading pair
/// 00 or 11 recurses to tau_{m-1}, 01 gives sigma_{m-1}, 10 gives
/// 1 + sigma_{m-1}.
bool tau(PairIndex i) noexcept;

/// Full truth tables of arity 2m, m in 1..15.
BooleanFunction sigma_function(unsigned m);
BooleanFunction tau_function(unsigned m);

// Four-quadrant composition.

class ComposeError : public Error {
 public:
  enum class Reason { ArityMismatch, NotBent, DualSumViolated };

  ComposeError(Reason reason, const std::string& what) : Error(what), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Pointwise XOR of the four duals. Each input must be bent and of equal arity.
BooleanFunction dual_sum(const BooleanFunction& f0, const BooleanFunction& f1,
                         const BooleanFunction& f2, const BooleanFunction& f3);

/// f(q (.) i) = f_q(i), the quadrant q being the leading bit pair. Checks that
/// the arities agree, that each quadrant is bent, and that the duals XOR to the
/// all-ones function; a violation raises ComposeError with the matching reason.
BooleanFunction tokareva_compose(const BooleanFunction& f0, const BooleanFunction& f1,
                                 const BooleanFunction& f2, const BooleanFunction& f3);

// Difference sets.

struct DiffSetParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t n = 0;

  bool is_hadamard() const noexcept { return v == 4 * n; }
  friend bool operator==(const DiffSetParams&, const DiffSetParams&) = default;
};

class NotDifferenceSet : public Error {
 public:
  NotDifferenceSet(std::uint64_t g1, std::uint64_t count1, std::uint64_t g2, std::uint64_t count2);

  // Two nonzero differences with unequal representation counts.
  std::uint64_t first_difference, first_count;
  std::uint64_t second_difference, second_count;
};

/// Counts, for every nonzero g, the ordered pairs (d_i, d_j) of support
/// elements with d_i XOR d_j = g. The support must be non-empty and proper.
/// Throws NotDifferenceSet when the counts are not all equal.
DiffSetParams verify_difference_set(const BooleanFunction& f);

/// (4^m, 2^{2m-1} - 2^{m-1}, 2^{2m-2} - 2^{m-1}, 2^{2m-2}), m in 1..31.
DiffSetParams predicted_params(unsigned m);

std::string to_string(const DiffSetParams& p);

}  // namespace ctwin
