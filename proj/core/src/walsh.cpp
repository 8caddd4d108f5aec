#include "ctwin/walsh.hpp"

#include <bit>

#include "ctwin/error.hpp"

namespace ctwin {

namespace {

template <class T>
void butterfly(std::span<T> data) {
  const std::size_t n = data.size();
  if (n == 0 || !std::has_single_bit(n))
    throw SizeMismatch("fwht: length must be a power of two");
  for (std::size_t half = 1; half < n; half <<= 1) {
    for (std::size_t block = 0; block < n; block += 2 * half) {
      T* lo = data.data() + block;
      T* hi = lo + half;
      for (std::size_t j = 0; j < half; ++j) {
        const T a = lo[j];
        const T b = hi[j];
        lo[j] = a + b;
        hi[j] = a - b;
      }
    }
  }
}

}  // namespace

void fwht(std::span<std::int32_t> data) { butterfly(data); }
void fwht(std::span<std::int64_t> data) { butterfly(data); }

std::int64_t WalshSpectrum::sum_of_squares() const noexcept {
  std::int64_t s = 0;
  for (auto x : values)
    s += std::int64_t{x} * x;
  return s;
}

WalshSpectrum walsh_transform(const BooleanFunction& f) {
  WalshSpectrum s;
  s.arity = f.arity();
  s.values.resize(f.size());
  for (std::uint64_t i = 0; i < f.size(); ++i)
    s.values[i] = f[i] ? -1 : 1;
  fwht(std::span<std::int32_t>(s.values));
  return s;
}

std::string to_json(const WalshSpectrum& spectrum) {
  std::string out = "[";
  for (std::size_t i = 0; i < spectrum.values.size(); ++i) {
    if (i)
      out.push_back(',');
    out += std::to_string(spectrum.values[i]);
  }
  out.push_back(']');
  return out;
}

}  // namespace ctwin
