#include <doctest.h>

#include <random>

#include "ctwin/clifford_basis.hpp"
#include "oracles.hpp"

using namespace ctwin;

namespace {

SignedPerm sp(std::vector<std::uint32_t> perm, std::vector<std::int8_t> signs) {
  return {std::move(perm), std::move(signs)};
}

SignedPerm random_signed_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::uint32_t> perm(n);
  std::vector<std::int8_t> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = static_cast<std::uint32_t>(i);
    signs[i] = (rng() & 1u) ? 1 : -1;
  }
  std::shuffle(perm.begin(), perm.end(), rng);
  return {perm, signs};
}

}  // namespace

TEST_CASE("signed permutation construction rejects malformed input") {
  CHECK_THROWS_AS(sp({0, 0}, {1, 1}), Error);
  CHECK_THROWS_AS(sp({0, 2}, {1, 1}), Error);
  CHECK_THROWS_AS(sp({0, 1}, {1, 0}), Error);
  CHECK_THROWS_AS(sp({0, 1}, {1}), SizeMismatch);
}

TEST_CASE("generators") {
  CHECK(generator(Generator::I2) == sp({0, 1}, {1, 1}));
  CHECK(generator(Generator::E1) == sp({1, 0}, {1, -1}));
  CHECK(generator(Generator::E2) == sp({1, 0}, {1, 1}));
  CHECK(generator(Generator::E1E2) == sp({0, 1}, {-1, 1}));

  // E1 = [. -; 1 .] entry by entry.
  const auto e1 = generator(Generator::E1).dense();
  CHECK(e1 == oracle::Dense{0, -1, 1, 0});
}

TEST_CASE("kron") {
  const auto i2 = generator(Generator::I2);
  const auto e1 = generator(Generator::E1);

  const auto block = kron(i2, e1);
  CHECK(block.dense() == oracle::Dense{0, -1, 0, 0,
                                       1, 0, 0, 0,
                                       0, 0, 0, -1,
                                       0, 0, 1, 0});

  const auto e1e1 = kron(e1, e1);
  CHECK(transpose(e1e1) == e1e1);

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_signed_perm(1u << (1 + rng() % 3), rng);
    const auto y = random_signed_perm(1u << (1 + rng() % 3), rng);
    CHECK(transpose(kron(x, y)) == kron(transpose(x), transpose(y)));
    CHECK(kron(x, y).dense() == oracle::dense_kron(x.dense(), x.order(), y.dense(), y.order()));
  }
}

TEST_CASE("multiply and transpose") {
  const auto e1 = generator(Generator::E1);
  const auto e2 = generator(Generator::E2);
  CHECK(multiply(e1, e1) == negate(SignedPerm::identity(2)));
  CHECK(multiply(e2, e2) == SignedPerm::identity(2));
  CHECK(transpose(SignedPerm::identity(4)) == SignedPerm::identity(4));
  CHECK(transpose(e1) == negate(e1));
  CHECK_THROWS_AS(multiply(e1, SignedPerm::identity(4)), SizeMismatch);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = std::size_t{1} << (rng() % 5);
    const auto a = random_signed_perm(n, rng);
    const auto b = random_signed_perm(n, rng);
    CHECK(transpose(transpose(a)) == a);
    CHECK(multiply(a, b).dense() == oracle::dense_multiply(a.dense(), b.dense(), n));
    CHECK(transpose(a).dense() == oracle::dense_transpose(a.dense(), n));
  }
}

TEST_CASE("pair index") {
  const PairIndex i{3, 0b011011};
  CHECK(i.digits() == std::vector<unsigned>{1, 2, 3});
  CHECK(i.digit(0) == 3);
  CHECK(PairIndex::from_digits(i.digits()) == i);
  CHECK_THROWS_AS(PairIndex(0, 0), RangeError);
  CHECK_THROWS_AS(PairIndex(1, 4), RangeError);
  CHECK_THROWS_AS(i.digit(3), RangeError);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const unsigned m = 1 + static_cast<unsigned>(rng() % kMaxPairLevel);
    const PairIndex p{m, rng() & (PairIndex::count(m) - 1)};
    CHECK(PairIndex::from_digits(p.digits()) == p);
  }
}

TEST_CASE("gamma follows the Kronecker product ordering") {
  CHECK(gamma(PairIndex{1, 2}) == generator(Generator::E2));
  CHECK(gamma(PairIndex{1, 3}) == generator(Generator::E1E2));
  for (unsigned m = 1; m <= 5; ++m)
    CHECK(gamma(PairIndex{m, 0}) == SignedPerm::identity(std::size_t{1} << m));
  CHECK(gamma(PairIndex{2, 1}) == kron(generator(Generator::I2), generator(Generator::E1)));
  CHECK(gamma(PairIndex{2, 0b0100}) == kron(generator(Generator::E1), generator(Generator::I2)));
  CHECK(gamma(PairIndex{3, PairIndex::count(3) - 1}) ==
        kron(kron(generator(Generator::E1E2), generator(Generator::E1E2)), generator(Generator::E1E2)));
}

TEST_CASE("classify") {
  CHECK(classify(generator(Generator::E1)) == SymmetryClass::Skew);
  CHECK(classify(generator(Generator::E2)) == SymmetryClass::SymmetricOffDiagonal);
  CHECK(classify(generator(Generator::E1E2)) == SymmetryClass::Diagonal);
  for (unsigned m = 1; m <= 4; ++m)
    CHECK(classify(gamma(PairIndex{m, 0})) == SymmetryClass::Diagonal);
  // A 3-cycle is neither symmetric nor skew.
  CHECK_THROWS_AS(classify(sp({1, 2, 0}, {1, 1, 1})), NotBasisElement);
}

TEST_CASE("diagonal count") {
  CHECK(diagonal_count(1) == 2);
  CHECK(diagonal_count(2) == 4);
  CHECK(diagonal_count(3) == 8);
  for (unsigned m = 1; m <= 6; ++m) {
    const std::uint64_t k = (std::uint64_t{1} << (2 * m - 1)) - (std::uint64_t{1} << (m - 1));
    CHECK(2 * k + diagonal_count(m) == PairIndex::count(m));
  }
  CHECK_THROWS_AS(diagonal_count(0), RangeError);
}

TEST_CASE("representation properties hold exhaustively for m <= 3") {
  for (unsigned m = 1; m <= 3; ++m) {
    const PositiveSignedBasis basis(m);
    const std::size_t n = std::size_t{1} << m;
    const auto id = oracle::dense_identity(n);
    const auto minus_id = oracle::dense_identity(n, -1);
    for (std::uint64_t i = 0; i < basis.size(); ++i) {
      const auto d = basis[i].dense();
      const auto t = oracle::dense_transpose(d, n);
      CHECK(oracle::dense_multiply(d, t, n) == id);
      const auto sq = oracle::dense_multiply(d, d, n);
      const bool symmetric_involution = t == d && sq == id;
      std::vector<int> neg(d.size());
      std::transform(d.begin(), d.end(), neg.begin(), [](int x) { return -x; });
      const bool skew_root = t == neg && sq == minus_id;
      CHECK(symmetric_involution != skew_root);
    }
    for (std::uint64_t a = 0; a < basis.size(); ++a) {
      for (std::uint64_t b = 0; b < basis.size(); ++b) {
        const auto ab = multiply(basis[a], basis[b]);
        const auto ba = multiply(basis[b], basis[a]);
        CHECK((ab == ba || ab == negate(ba)));
        const auto quotient = multiply(basis[a], transpose(basis[b]));
        const auto& target = basis[a ^ b];
        CHECK((quotient == target || quotient == negate(target)));
      }
    }
  }
}

TEST_CASE("basis lookup inverts gamma") {
  for (unsigned m = 1; m <= 3; ++m) {
    const PositiveSignedBasis basis(m);
    for (std::uint64_t i = 0; i < basis.size(); ++i) {
      const auto hit = basis.locate(basis[i]);
      REQUIRE(hit);
      CHECK(hit->index == i);
      CHECK(hit->sign == 1);
      const auto neg = basis.locate(negate(basis[i]));
      REQUIRE(neg);
      CHECK(neg->index == i);
      CHECK(neg->sign == -1);
    }
  }
  const PositiveSignedBasis basis(1);
  CHECK_FALSE(basis.locate(sp({0, 1}, {1, -1})) == std::nullopt);  // -E1E2
  CHECK(basis.locate(SignedPerm::identity(4)) == std::nullopt);
}
