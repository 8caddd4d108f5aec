#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ctwin/boolean_function.hpp"

namespace ctwin {

/// H_n (-1)^f, entry i of length 2^n. Entries are bounded by 2^n in magnitude.
struct WalshSpectrum {
  unsigned arity = 0;
  std::vector<std::int32_t> values;

  /// Sum of squared entries; equals 4^n for every spectrum of a Boolean function.
  std::int64_t sum_of_squares() const noexcept;

  friend bool operator==(const WalshSpectrum&, const WalshSpectrum&) = default;
};

/// In-place Sylvester-order fast Walsh-Hadamard butterfly: data <- H_n data.
/// data.size() must be a power of two.
void fwht(std::span<std::int32_t> data);
void fwht(std::span<std::int64_t> data);

WalshSpectrum walsh_transform(const BooleanFunction& f);

/// JSON integer array, e.g. "[2,2,-2,2]".
std::string to_json(const WalshSpectrum& spectrum);

}  // namespace ctwin
