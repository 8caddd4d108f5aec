#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctwin/boolean_function.hpp"
#include "ctwin/error.hpp"

namespace ctwin {

enum class Colour : std::int8_t { Red = -1, None = 0, Blue = 1 };

std::string_view to_string(Colour c) noexcept;

/// Accepts "red" and "blue". Throws ctwin::Error otherwise.
Colour parse_colour(std::string_view text);

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Undirected simple graph with packed adjacency rows.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::uint32_t vertices);

  std::uint32_t vertex_count() const noexcept { return v_; }
  std::size_t words_per_row() const noexcept { return words_; }

  void add_edge(std::uint32_t a, std::uint32_t b);
  bool adjacent(std::uint32_t a, std::uint32_t b) const noexcept {
    return (rows_[a * words_ + (b >> 6)] >> (b & 63)) & 1u;
  }
  std::span<const std::uint64_t> row(std::uint32_t a) const noexcept {
    return {rows_.data() + a * words_, words_};
  }

  std::uint32_t degree(std::uint32_t a) const noexcept;
  std::uint32_t common_neighbours(std::uint32_t a, std::uint32_t b) const noexcept;
  std::uint64_t edge_count() const noexcept;

  /// Edges (a, b) with a < b in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  std::uint32_t v_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

/**
 * Edge-coloured graph on Z_2^n whose colour on (a, b) is a function of a XOR b:
 * kappa[a ^ b] in {-1, 0, +1}, 0 meaning no edge. kappa[0] is always 0, so
 * there are no loops.
 */
class EdgeColouredGraph {
 public:
  /// Throws ctwin::Error if kappa has the wrong length, an entry outside
  /// {-1, 0, 1}, or a nonzero kappa[0].
  EdgeColouredGraph(unsigned bits, std::vector<std::int8_t> kappa);

  unsigned bits() const noexcept { return bits_; }
  std::uint32_t vertex_count() const noexcept { return std::uint32_t{1} << bits_; }

  Colour colour(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<Colour>(kappa_[a ^ b]);
  }
  Colour difference_colour(std::uint32_t d) const noexcept { return static_cast<Colour>(kappa_[d]); }
  std::span<const std::int8_t> kappa() const noexcept { return kappa_; }

  /// Degree of every vertex in the given colour.
  std::uint32_t degree(Colour c) const noexcept;

  std::vector<Edge> edges(Colour c) const;
  SimpleGraph subgraph(Colour c) const;

  friend bool operator==(const EdgeColouredGraph&, const EdgeColouredGraph&) = default;

 private:
  unsigned bits_;
  std::vector<std::int8_t> kappa_;
};

/// Restricted amicability / anti-amicability graph Delta_m on 4^m vertices,
/// from the difference table kappa = tau_m - sigma_m. m in 1..12.
EdgeColouredGraph build_delta(unsigned m);

/// Dense v x v colour assignment, used where the colour of a pair is not
/// assumed to depend only on the difference of its endpoints.
class ColourMatrix {
 public:
  explicit ColourMatrix(std::uint32_t vertices);

  std::uint32_t vertex_count() const noexcept { return v_; }
  Colour at(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<Colour>(cells_[std::size_t{a} * v_ + b]);
  }
  void set(std::uint32_t a, std::uint32_t b, Colour c) noexcept;

 private:
  std::uint32_t v_;
  std::vector<std::int8_t> cells_;
};

/// Delta_m built pair by pair from the signed permutation matrices: an edge
/// exists iff gamma(a) and gamma(b) have disjoint support, and it is red iff
/// gamma(a) gamma(b)^{-1} is skew, blue iff it is symmetric. m in 1..4.
ColourMatrix oracle_build_delta(unsigned m);

/// First pair (a < b) whose colours differ, if any.
std::optional<Edge> first_mismatch(const EdgeColouredGraph& g, const ColourMatrix& oracle);

/// Cayley graph of f: a ~ b iff f(a XOR b) = 1, with edges in the given
/// colour. Throws ctwin::Error if f(0) = 1.
EdgeColouredGraph cayley_graph(const BooleanFunction& f, Colour colour = Colour::Red);

struct SrgParams {
  std::uint64_t v = 0;
  std::uint64_t k = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;

  /// (v - k - 1) mu == k (k - 1 - lambda).
  bool satisfies_identity() const noexcept;

  friend bool operator==(const SrgParams&, const SrgParams&) = default;
};

std::string to_string(const SrgParams& p);

class NotStronglyRegular : public Error {
 public:
  enum class Reason { EmptyGraph, Degree, Lambda, Mu };

  NotStronglyRegular(Reason reason, Edge witness, std::uint64_t expected, std::uint64_t found);

  Reason reason;
  // For Degree: (vertex, vertex); otherwise the offending pair.
  Edge witness;
  std::uint64_t expected;
  std::uint64_t found;
};

/// Exhaustive check over every pair of distinct vertices. A graph with no
/// non-adjacent pairs reports mu = 0.
SrgParams verify_srg(const SimpleGraph& g);
SrgParams verify_srg(const EdgeColouredGraph& g, Colour colour);

/// Same check restricted to the pairs (0, c). Complete for EdgeColouredGraph
/// because every translation x -> x ^ t preserves all colours, so any pair
/// (a, b) is carried onto (0, a ^ b).
SrgParams verify_srg_by_translation(const EdgeColouredGraph& g, Colour colour);

/// (4^m, 2^{2m-1} - 2^{m-1}, 2^{2m-2} - 2^{m-1}, same), m in 1..31.
SrgParams predicted_srg_params(unsigned m);

}  // namespace ctwin
