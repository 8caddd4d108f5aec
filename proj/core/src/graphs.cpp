#include "ctwin/graphs.hpp"

#include <bit>

#include "ctwin/bent.hpp"
#include "ctwin/clifford_basis.hpp"

namespace ctwin {

std::string_view to_string(Colour c) noexcept {
  switch (c) {
    case Colour::Red:
      return "red";
    case Colour::Blue:
      return "blue";
    case Colour::None:
      return "none";
  }
  return "?";
}

Colour parse_colour(std::string_view text) {
  if (text == "red")
    return Colour::Red;
  if (text == "blue")
    return Colour::Blue;
  throw Error("unknown colour '" + std::string(text) + "' (expected red or blue)");
}

// SimpleGraph

SimpleGraph::SimpleGraph(std::uint32_t vertices)
    : v_(vertices), words_((std::size_t{vertices} + 63) / 64), rows_(std::size_t{vertices} * words_, 0) {}

void SimpleGraph::add_edge(std::uint32_t a, std::uint32_t b) {
  if (a >= v_ || b >= v_)
    throw RangeError("SimpleGraph: vertex out of range");
  if (a == b)
    throw Error("SimpleGraph: loops are not allowed");
  rows_[a * words_ + (b >> 6)] |= std::uint64_t{1} << (b & 63);
  rows_[b * words_ + (a >> 6)] |= std::uint64_t{1} << (a & 63);
}

std::uint32_t SimpleGraph::degree(std::uint32_t a) const noexcept {
  std::uint32_t d = 0;
  for (auto w : row(a))
    d += static_cast<std::uint32_t>(std::popcount(w));
  return d;
}

std::uint32_t SimpleGraph::common_neighbours(std::uint32_t a, std::uint32_t b) const noexcept {
  const auto ra = row(a);
  const auto rb = row(b);
  std::uint32_t c = 0;
  for (std::size_t w = 0; w < words_; ++w)
    c += static_cast<std::uint32_t>(std::popcount(ra[w] & rb[w]));
  return c;
}

std::uint64_t SimpleGraph::edge_count() const noexcept {
  std::uint64_t twice = 0;
  for (std::uint32_t a = 0; a < v_; ++a)
    twice += degree(a);
  return twice / 2;
}

std::vector<Edge> SimpleGraph::edges() const {
  std::vector<Edge> out;
  for (std::uint32_t a = 0; a < v_; ++a)
    for (std::uint32_t b = a + 1; b < v_; ++b)
      if (adjacent(a, b))
        out.emplace_back(a, b);
  return out;
}

// EdgeColouredGraph

EdgeColouredGraph::EdgeColouredGraph(unsigned bits, std::vector<std::int8_t> kappa)
    : bits_(bits), kappa_(std::move(kappa)) {
  if (bits > 24)
    throw RangeError("EdgeColouredGraph: more than 2^24 vertices");
  if (kappa_.size() != (std::size_t{1} << bits))
    throw SizeMismatch("EdgeColouredGraph: difference table must have 2^bits entries");
  if (kappa_[0] != 0)
    throw Error("EdgeColouredGraph: difference 0 must not be an edge");
  for (auto x : kappa_)
    if (x < -1 || x > 1)
      throw Error("EdgeColouredGraph: colours must lie in {-1, 0, 1}");
}

std::uint32_t EdgeColouredGraph::degree(Colour c) const noexcept {
  std::uint32_t d = 0;
  for (std::size_t x = 1; x < kappa_.size(); ++x)
    if (kappa_[x] == static_cast<std::int8_t>(c))
      ++d;
  return d;
}

std::vector<Edge> EdgeColouredGraph::edges(Colour c) const {
  std::vector<Edge> out;
  const std::uint32_t v = vertex_count();
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t b = a + 1; b < v; ++b)
      if (colour(a, b) == c)
        out.emplace_back(a, b);
  return out;
}

SimpleGraph EdgeColouredGraph::subgraph(Colour c) const {
  std::vector<std::uint32_t> connection;
  for (std::uint32_t d = 1; d < kappa_.size(); ++d)
    if (kappa_[d] == static_cast<std::int8_t>(c))
      connection.push_back(d);
  SimpleGraph g(vertex_count());
  for (std::uint32_t a = 0; a < vertex_count(); ++a)
    for (auto d : connection)
      if (a < (a ^ d))
        g.add_edge(a, a ^ d);
  return g;
}

EdgeColouredGraph build_delta(unsigned m) {
  if (m < 1 || m > 12)
    throw RangeError("build_delta: m must lie in 1..12");
  const BooleanFunction s = sigma_function(m);
  const BooleanFunction t = tau_function(m);
  std::vector<std::int8_t> kappa(s.size());
  for (std::uint64_t d = 1; d < s.size(); ++d)
    kappa[d] = static_cast<std::int8_t>(int{t[d]} - int{s[d]});
  return {2 * m, std::move(kappa)};
}

// Oracle

ColourMatrix::ColourMatrix(std::uint32_t vertices)
    : v_(vertices), cells_(std::size_t{vertices} * vertices, 0) {}

void ColourMatrix::set(std::uint32_t a, std::uint32_t b, Colour c) noexcept {
  cells_[std::size_t{a} * v_ + b] = static_cast<std::int8_t>(c);
  cells_[std::size_t{b} * v_ + a] = static_cast<std::int8_t>(c);
}

ColourMatrix oracle_build_delta(unsigned m) {
  if (m < 1 || m > 4)
    throw RangeError("oracle_build_delta: m must lie in 1..4");
  const PositiveSignedBasis basis(m);
  const auto v = static_cast<std::uint32_t>(basis.size());
  ColourMatrix out(v);
  for (std::uint32_t a = 0; a < v; ++a) {
    for (std::uint32_t b = a + 1; b < v; ++b) {
      if (!disjoint_support(basis[a], basis[b]))
        continue;
      // gamma(b) is orthogonal, so its inverse is its transpose.
      const SignedPerm product = multiply(basis[a], transpose(basis[b]));
      switch (classify(product)) {
        case SymmetryClass::Skew:
          out.set(a, b, Colour::Red);
          break;
        case SymmetryClass::SymmetricOffDiagonal:
          out.set(a, b, Colour::Blue);
          break;
        case SymmetryClass::Diagonal:
          throw Error("oracle_build_delta: disjoint support with a diagonal quotient");
      }
    }
  }
  return out;
}

std::optional<Edge> first_mismatch(const EdgeColouredGraph& g, const ColourMatrix& oracle) {
  if (g.vertex_count() != oracle.vertex_count())
    throw SizeMismatch("first_mismatch: vertex counts differ");
  const std::uint32_t v = g.vertex_count();
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t b = a + 1; b < v; ++b)
      if (g.colour(a, b) != oracle.at(a, b))
        return Edge{a, b};
  return std::nullopt;
}

EdgeColouredGraph cayley_graph(const BooleanFunction& f, Colour colour) {
  if (colour == Colour::None)
    throw Error("cayley_graph: edge colour must be red or blue");
  if (f.arity() > 24)
    throw RangeError("cayley_graph: arity above 24");
  if (f[0])
    throw Error("cayley_graph: f(0) = 1 would create loops");
  std::vector<std::int8_t> kappa(f.size(), 0);
  for (std::uint64_t d = 1; d < f.size(); ++d)
    if (f[d])
      kappa[d] = static_cast<std::int8_t>(colour);
  return {f.arity(), std::move(kappa)};
}

// Strong regularity

bool SrgParams::satisfies_identity() const noexcept {
  const auto sv = static_cast<std::int64_t>(v);
  const auto sk = static_cast<std::int64_t>(k);
  const auto sl = static_cast<std::int64_t>(lambda);
  const auto sm = static_cast<std::int64_t>(mu);
  return (sv - sk - 1) * sm == sk * (sk - 1 - sl);
}

std::string to_string(const SrgParams& p) {
  return "(" + std::to_string(p.v) + ", " + std::to_string(p.k) + ", " + std::to_string(p.lambda) +
         ", " + std::to_string(p.mu) + ")";
}

NotStronglyRegular::NotStronglyRegular(Reason r, Edge w, std::uint64_t e, std::uint64_t f)
    : Error([&] {
        const char* what = r == Reason::EmptyGraph ? "graph has no edges"
                           : r == Reason::Degree   ? "degree not constant"
                           : r == Reason::Lambda   ? "adjacent common-neighbour count not constant"
                                                   : "non-adjacent common-neighbour count not constant";
        return std::string("not strongly regular: ") + what + " at (" + std::to_string(w.first) +
               ", " + std::to_string(w.second) + "): expected " + std::to_string(e) + ", found " +
               std::to_string(f);
      }()),
      reason(r),
      witness(w),
      expected(e),
      found(f) {}

namespace {

// Folds one observed count into a parameter that must be constant.
struct ConstantCount {
  std::optional<std::uint64_t> value;

  void observe(std::uint64_t x, NotStronglyRegular::Reason reason, Edge pair) {
    if (!value)
      value = x;
    else if (*value != x)
      throw NotStronglyRegular(reason, pair, *value, x);
  }
};

// t[x] = s[x ^ c] for a packed bitset s over 2^bits positions.
void translate(std::span<const std::uint64_t> s, std::uint32_t c, std::span<std::uint64_t> t) {
  static constexpr std::uint64_t kMasks[6] = {0x5555555555555555ull, 0x3333333333333333ull,
                                              0x0f0f0f0f0f0f0f0full, 0x00ff00ff00ff00ffull,
                                              0x0000ffff0000ffffull, 0x00000000ffffffffull};
  const std::uint32_t word_shift = c >> 6;
  const std::uint32_t low = c & 63u;
  for (std::size_t w = 0; w < s.size(); ++w) {
    std::uint64_t x = s[w ^ word_shift];
    for (unsigned j = 0; j < 6; ++j) {
      if ((low >> j) & 1u) {
        const unsigned shift = 1u << j;
        x = ((x & kMasks[j]) << shift) | ((x >> shift) & kMasks[j]);
      }
    }
    t[w] = x;
  }
}

}  // namespace

SrgParams verify_srg(const SimpleGraph& g) {
  using Reason = NotStronglyRegular::Reason;
  const std::uint32_t v = g.vertex_count();
  if (v == 0 || g.edge_count() == 0)
    throw NotStronglyRegular(Reason::EmptyGraph, {0, 0}, 0, 0);
  const std::uint32_t k = g.degree(0);
  for (std::uint32_t a = 1; a < v; ++a)
    if (g.degree(a) != k)
      throw NotStronglyRegular(Reason::Degree, {a, a}, k, g.degree(a));
  ConstantCount lambda;
  ConstantCount mu;
  for (std::uint32_t a = 0; a < v; ++a) {
    for (std::uint32_t b = a + 1; b < v; ++b) {
      const std::uint32_t common = g.common_neighbours(a, b);
      if (g.adjacent(a, b))
        lambda.observe(common, Reason::Lambda, {a, b});
      else
        mu.observe(common, Reason::Mu, {a, b});
    }
  }
  return {v, k, lambda.value.value_or(0), mu.value.value_or(0)};
}

SrgParams verify_srg(const EdgeColouredGraph& g, Colour colour) {
  return verify_srg(g.subgraph(colour));
}

SrgParams verify_srg_by_translation(const EdgeColouredGraph& g, Colour colour) {
  using Reason = NotStronglyRegular::Reason;
  const std::uint32_t v = g.vertex_count();
  const std::size_t words = (std::size_t{v} + 63) / 64;
  std::vector<std::uint64_t> row0(words, 0);
  std::vector<std::uint64_t> shifted(words, 0);
  for (std::uint32_t x = 1; x < v; ++x)
    if (g.difference_colour(x) == colour)
      row0[x >> 6] |= std::uint64_t{1} << (x & 63);
  std::uint64_t k = 0;
  for (auto w : row0)
    k += static_cast<std::uint64_t>(std::popcount(w));
  if (k == 0)
    throw NotStronglyRegular(Reason::EmptyGraph, {0, 0}, 0, 0);
  ConstantCount lambda;
  ConstantCount mu;
  for (std::uint32_t c = 1; c < v; ++c) {
    translate(row0, c, shifted);
    std::uint64_t common = 0;
    for (std::size_t w = 0; w < words; ++w)
      common += static_cast<std::uint64_t>(std::popcount(row0[w] & shifted[w]));
    if (g.difference_colour(c) == colour)
      lambda.observe(common, Reason::Lambda, {0, c});
    else
      mu.observe(common, Reason::Mu, {0, c});
  }
  return {v, k, lambda.value.value_or(0), mu.value.value_or(0)};
}

SrgParams predicted_srg_params(unsigned m) {
  const DiffSetParams d = predicted_params(m);
  return {d.v, d.k, d.lambda, d.lambda};
}

}  // namespace ctwin
