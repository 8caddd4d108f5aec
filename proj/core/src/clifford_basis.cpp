#include "ctwin/clifford_basis.hpp"

#include <algorithm>
#include <string>

namespace ctwin {

PairIndex::PairIndex(unsigned m, std::uint64_t value) : m_(m), value_(value) {
  if (m < 1 || m > kMaxPairLevel)
    throw RangeError("PairIndex: level m=" + std::to_string(m) + " outside 1.." +
                     std::to_string(kMaxPairLevel));
  if (value >= count(m))
    throw RangeError("PairIndex: value " + std::to_string(value) + " out of range for m=" +
                     std::to_string(m));
}

PairIndex PairIndex::from_digits(std::span<const unsigned> digits_msb_first) {
  std::uint64_t v = 0;
  for (unsigned d : digits_msb_first) {
    if (d > 3)
      throw RangeError("PairIndex: digit " + std::to_string(d) + " is not a bit pair");
    v = (v << 2) | d;
  }
  return {static_cast<unsigned>(digits_msb_first.size()), v};
}

unsigned PairIndex::digit(unsigned k) const {
  if (k >= m_)
    throw RangeError("PairIndex: digit position out of range");
  return static_cast<unsigned>((value_ >> (2 * k)) & 3u);
}

std::vector<unsigned> PairIndex::digits() const {
  std::vector<unsigned> out(m_);
  for (unsigned k = 0; k < m_; ++k)
    out[m_ - 1 - k] = digit(k);
  return out;
}

SignedPerm generator(Generator which) {
  switch (which) {
    case Generator::I2:
      return SignedPerm::identity(2);
    case Generator::E1:
      // [ . - ]
      // [ 1 . ]
      return {{1, 0}, {1, -1}};
    case Generator::E2:
      // [ . 1 ]
      // [ 1 . ]
      return {{1, 0}, {1, 1}};
    case Generator::E1E2:
      return multiply(generator(Generator::E1), generator(Generator::E2));
  }
  throw Error("generator: unknown generator");
}

SignedPerm gamma(PairIndex i) {
  if (i.m() > kMaxGammaLevel)
    throw RangeError("gamma: level m=" + std::to_string(i.m()) + " too large to materialize");
  static const SignedPerm table[4] = {generator(Generator::I2), generator(Generator::E1),
                                      generator(Generator::E2), generator(Generator::E1E2)};
  SignedPerm out = SignedPerm::identity(1);
  for (unsigned d : i.digits())
    out = kron(out, table[d]);
  return out;
}

std::string_view to_string(SymmetryClass c) noexcept {
  switch (c) {
    case SymmetryClass::Skew:
      return "skew";
    case SymmetryClass::Diagonal:
      return "diagonal";
    case SymmetryClass::SymmetricOffDiagonal:
      return "symmetric-off-diagonal";
  }
  return "?";
}

SymmetryClass classify(const SignedPerm& a) {
  const SignedPerm t = transpose(a);
  if (t == a)
    return a.is_identity_permutation() ? SymmetryClass::Diagonal
                                       : SymmetryClass::SymmetricOffDiagonal;
  if (t == negate(a))
    return SymmetryClass::Skew;
  throw NotBasisElement("classify: matrix is neither symmetric nor skew");
}

std::uint64_t diagonal_count(unsigned m) {
  if (m < 1 || m > 10)
    throw RangeError("diagonal_count: m must lie in 1..10");
  std::uint64_t count = 0;
  for (std::uint64_t i = 0; i < PairIndex::count(m); ++i)
    if (classify(gamma(PairIndex{m, i})) == SymmetryClass::Diagonal)
      ++count;
  return count;
}

namespace {

// Orders signed permutations by (perm, signs), the sign of column 0 being
// normalized to +1 so that a and -a compare equal.
int compare_up_to_sign(const SignedPerm& a, const SignedPerm& b) {
  const auto pa = a.perm();
  const auto pb = b.perm();
  if (auto c = std::lexicographical_compare_three_way(pa.begin(), pa.end(), pb.begin(), pb.end());
      c != 0)
    return c < 0 ? -1 : 1;
  const int na = a.order() ? a.sign_of(0) : 1;
  const int nb = b.order() ? b.sign_of(0) : 1;
  for (std::size_t c = 0; c < a.order(); ++c) {
    const int x = a.sign_of(c) * na;
    const int y = b.sign_of(c) * nb;
    if (x != y)
      return x < y ? -1 : 1;
  }
  return 0;
}

}  // namespace

PositiveSignedBasis::PositiveSignedBasis(unsigned m) : m_(m) {
  if (m < 1 || m > 8)
    throw RangeError("PositiveSignedBasis: m must lie in 1..8");
  const std::uint64_t n = PairIndex::count(m);
  elements_.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i)
    elements_.push_back(gamma(PairIndex{m, i}));
  sorted_.resize(n);
  for (std::uint64_t i = 0; i < n; ++i)
    sorted_[i] = i;
  std::sort(sorted_.begin(), sorted_.end(), [&](std::uint64_t x, std::uint64_t y) {
    return compare_up_to_sign(elements_[x], elements_[y]) < 0;
  });
}

std::optional<PositiveSignedBasis::Located> PositiveSignedBasis::locate(const SignedPerm& a) const {
  if (a.order() != (std::size_t{1} << m_))
    return std::nullopt;
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), a, [&](std::uint64_t idx, const SignedPerm& key) {
    return compare_up_to_sign(elements_[idx], key) < 0;
  });
  if (it == sorted_.end() || compare_up_to_sign(elements_[*it], a) != 0)
    return std::nullopt;
  const int sign = elements_[*it].sign_of(0) == a.sign_of(0) ? 1 : -1;
  return Located{*it, sign};
}

}  // namespace ctwin
