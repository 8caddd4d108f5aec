#include "ctwin/signed_perm.hpp"

#include <sstream>

#include "ctwin/error.hpp"

namespace ctwin {

SignedPerm::SignedPerm(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs)
    : perm_(std::move(perm)), signs_(std::move(signs)) {
  if (perm_.size() != signs_.size())
    throw SizeMismatch("SignedPerm: perm and signs differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t c = 0; c < perm_.size(); ++c) {
    if (perm_[c] >= perm_.size() || seen[perm_[c]])
      throw Error("SignedPerm: perm is not a permutation");
    seen[perm_[c]] = true;
    if (signs_[c] != 1 && signs_[c] != -1)
      throw Error("SignedPerm: sign must be +1 or -1");
  }
}

SignedPerm SignedPerm::identity(std::size_t n) {
  SignedPerm r;
  r.perm_.resize(n);
  r.signs_.assign(n, 1);
  for (std::size_t c = 0; c < n; ++c)
    r.perm_[c] = static_cast<std::uint32_t>(c);
  return r;
}

int SignedPerm::entry(std::size_t row, std::size_t col) const {
  return perm_.at(col) == row ? signs_[col] : 0;
}

bool SignedPerm::is_identity_permutation() const noexcept {
  for (std::size_t c = 0; c < perm_.size(); ++c)
    if (perm_[c] != c)
      return false;
  return true;
}

std::vector<int> SignedPerm::dense() const {
  const std::size_t n = order();
  std::vector<int> out(n * n, 0);
  for (std::size_t c = 0; c < n; ++c)
    out[perm_[c] * n + c] = signs_[c];
  return out;
}

std::string SignedPerm::to_string() const {
  std::ostringstream os;
  const std::size_t n = order();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const int e = entry(r, c);
      os << (e == 0 ? '.' : e > 0 ? '1' : '-');
      if (c + 1 < n)
        os << ' ';
    }
    os << '\n';
  }
  return os.str();
}

SignedPerm negate(const SignedPerm& a) {
  std::vector<std::uint32_t> perm(a.perm().begin(), a.perm().end());
  std::vector<std::int8_t> signs(a.order());
  for (std::size_t c = 0; c < a.order(); ++c)
    signs[c] = static_cast<std::int8_t>(-a.sign_of(c));
  return {std::move(perm), std::move(signs)};
}

SignedPerm transpose(const SignedPerm& a) {
  const std::size_t n = a.order();
  std::vector<std::uint32_t> perm(n);
  std::vector<std::int8_t> signs(n);
  for (std::size_t c = 0; c < n; ++c) {
    perm[a.row_of(c)] = static_cast<std::uint32_t>(c);
    signs[a.row_of(c)] = static_cast<std::int8_t>(a.sign_of(c));
  }
  return {std::move(perm), std::move(signs)};
}

SignedPerm multiply(const SignedPerm& a, const SignedPerm& b) {
  if (a.order() != b.order())
    throw SizeMismatch("multiply: order mismatch (" + std::to_string(a.order()) + " vs " +
                       std::to_string(b.order()) + ")");
  const std::size_t n = a.order();
  std::vector<std::uint32_t> perm(n);
  std::vector<std::int8_t> signs(n);
  // (AB) e_c = s_b[c] A e_{p_b[c]} = s_b[c] s_a[p_b[c]] e_{p_a[p_b[c]]}
  for (std::size_t c = 0; c < n; ++c) {
    const std::uint32_t mid = b.row_of(c);
    perm[c] = a.row_of(mid);
    signs[c] = static_cast<std::int8_t>(a.sign_of(mid) * b.sign_of(c));
  }
  return {std::move(perm), std::move(signs)};
}

SignedPerm kron(const SignedPerm& a, const SignedPerm& b) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  std::vector<std::uint32_t> perm(na * nb);
  std::vector<std::int8_t> signs(na * nb);
  for (std::size_t ca = 0; ca < na; ++ca) {
    for (std::size_t cb = 0; cb < nb; ++cb) {
      const std::size_t c = ca * nb + cb;
      perm[c] = static_cast<std::uint32_t>(a.row_of(ca) * nb + b.row_of(cb));
      signs[c] = static_cast<std::int8_t>(a.sign_of(ca) * b.sign_of(cb));
    }
  }
  return {std::move(perm), std::move(signs)};
}

bool disjoint_support(const SignedPerm& a, const SignedPerm& b) {
  if (a.order() != b.order())
    throw SizeMismatch("disjoint_support: order mismatch");
  for (std::size_t c = 0; c < a.order(); ++c)
    if (a.row_of(c) == b.row_of(c))
      return false;
  return true;
}

}  // namespace ctwin
