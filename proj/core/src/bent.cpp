#include "ctwin/bent.hpp"

#include <bit>
#include <cstdlib>

namespace ctwin {

namespace {

constexpr std::uint64_t kLowBitsOfPairs = 0x5555555555555555ull;

// Parity of the number of base-4 digits equal to 1 (low bit set, high clear).
bool sigma_raw(std::uint64_t i) noexcept {
  return std::popcount(i & ~(i >> 1) & kLowBitsOfPairs) & 1;
}

void require_level(unsigned m, unsigned max, const char* what) {
  if (m < 1 || m > max)
    throw RangeError(std::string(what) + ": m=" + std::to_string(m) + " outside 1.." +
                     std::to_string(max));
}

}  // namespace

bool is_bent(const WalshSpectrum& spectrum) {
  if (spectrum.arity % 2 != 0)
    return false;
  const std::int64_t magnitude = std::int64_t{1} << (spectrum.arity / 2);
  for (auto x : spectrum.values)
    if (std::llabs(x) != magnitude)
      return false;
  return true;
}

bool is_bent(const BooleanFunction& f) { return is_bent(walsh_transform(f)); }

BooleanFunction dual(const BooleanFunction& f) {
  const WalshSpectrum s = walsh_transform(f);
  if (!is_bent(s))
    throw NotBent("dual: function of arity " + std::to_string(f.arity()) + " is not bent");
  BooleanFunction out(f.arity());
  for (std::uint64_t i = 0; i < f.size(); ++i)
    if (s.values[i] < 0)
      out.set(i, true);
  return out;
}

bool sigma(PairIndex i) noexcept { return sigma_raw(i.value()); }

bool tau(PairIndex i) noexcept {
  const std::uint64_t v = i.value();
  for (unsigned k = i.m() - 1; k > 0; --k) {
    const unsigned lead = static_cast<unsigned>((v >> (2 * k)) & 3u);
    const std::uint64_t rest = v & ((std::uint64_t{1} << (2 * k)) - 1);
    if (lead == 1)
      return sigma_raw(rest);
    if (lead == 2)
      return !sigma_raw(rest);
  }
  return (v & 3u) == 2;
}

BooleanFunction sigma_function(unsigned m) {
  require_level(m, 15, "sigma_function");
  BooleanFunction f(2 * m);
  for (std::uint64_t i = 0; i < f.size(); ++i)
    if (sigma_raw(i))
      f.set(i, true);
  return f;
}

BooleanFunction tau_function(unsigned m) {
  require_level(m, 15, "tau_function");
  // Each level is assembled once from the previous tau table and the sigma
  // rule, quadrant by quadrant.
  BooleanFunction t = BooleanFunction::from_bits("0010");
  for (unsigned level = 2; level <= m; ++level) {
    BooleanFunction next(2 * level);
    const std::uint64_t quarter = t.size();
    for (std::uint64_t i = 0; i < quarter; ++i) {
      const bool s = sigma_raw(i);
      next.set(i, t[i]);
      next.set(quarter + i, s);
      next.set(2 * quarter + i, !s);
      next.set(3 * quarter + i, t[i]);
    }
    t = std::move(next);
  }
  return t;
}

BooleanFunction dual_sum(const BooleanFunction& f0, const BooleanFunction& f1,
                         const BooleanFunction& f2, const BooleanFunction& f3) {
  const BooleanFunction* parts[] = {&f0, &f1, &f2, &f3};
  for (const auto* p : parts)
    if (p->arity() != f0.arity())
      throw ComposeError(ComposeError::Reason::ArityMismatch, "dual_sum: quadrant arities differ");
  BooleanFunction acc(f0.arity());
  for (std::size_t q = 0; q < 4; ++q) {
    try {
      acc = acc ^ dual(*parts[q]);
    } catch (const NotBent&) {
      throw ComposeError(ComposeError::Reason::NotBent,
                         "dual_sum: quadrant f" + std::to_string(q) + " is not bent");
    }
  }
  return acc;
}

BooleanFunction tokareva_compose(const BooleanFunction& f0, const BooleanFunction& f1,
                                 const BooleanFunction& f2, const BooleanFunction& f3) {
  if (f0.arity() + 2 > kMaxArity)
    throw RangeError("tokareva_compose: composed arity too large");
  const BooleanFunction sum = dual_sum(f0, f1, f2, f3);
  if (sum.weight() != sum.size())
    throw ComposeError(ComposeError::Reason::DualSumViolated,
                       "tokareva_compose: duals XOR to 0 at " +
                           std::to_string(sum.size() - sum.weight()) + " of " +
                           std::to_string(sum.size()) + " points");
  const BooleanFunction* parts[] = {&f0, &f1, &f2, &f3};
  BooleanFunction out(f0.arity() + 2);
  const std::uint64_t quarter = f0.size();
  for (std::uint64_t q = 0; q < 4; ++q)
    for (std::uint64_t i = 0; i < quarter; ++i)
      if ((*parts[q])[i])
        out.set(q * quarter + i, true);
  return out;
}

NotDifferenceSet::NotDifferenceSet(std::uint64_t g1, std::uint64_t count1, std::uint64_t g2,
                                   std::uint64_t count2)
    : Error("not a difference set: difference " + std::to_string(g1) + " occurs " +
            std::to_string(count1) + " times but " + std::to_string(g2) + " occurs " +
            std::to_string(count2) + " times"),
      first_difference(g1),
      first_count(count1),
      second_difference(g2),
      second_count(count2) {}

DiffSetParams verify_difference_set(const BooleanFunction& f) {
  if (f.arity() > 20)
    throw RangeError("verify_difference_set: arity above 20 is too costly for pair counting");
  const auto support = f.support();
  if (support.empty() || support.size() == f.size())
    throw RangeError("verify_difference_set: support must be non-empty and proper");
  std::vector<std::uint64_t> counts(f.size(), 0);
  for (auto a : support)
    for (auto b : support)
      ++counts[a ^ b];
  const std::uint64_t lambda = counts[1];
  for (std::uint64_t g = 2; g < f.size(); ++g)
    if (counts[g] != lambda)
      throw NotDifferenceSet(1, lambda, g, counts[g]);
  DiffSetParams p;
  p.v = f.size();
  p.k = support.size();
  p.lambda = lambda;
  p.n = p.k - p.lambda;
  return p;
}

DiffSetParams predicted_params(unsigned m) {
  require_level(m, 31, "predicted_params");
  const std::uint64_t half = std::uint64_t{1} << (m - 1);  // N = 2^{m-1}
  DiffSetParams p;
  p.v = std::uint64_t{1} << (2 * m);
  p.k = 2 * half * half - half;
  p.lambda = half * half - half;
  p.n = half * half;
  return p;
}

std::string to_string(const DiffSetParams& p) {
  return "(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " + std::to_string(p.lambda) +
         ", " + std::to_string(p.n) + ")";
}

}  // namespace ctwin
