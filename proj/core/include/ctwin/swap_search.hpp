#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ctwin/graphs.hpp"

namespace ctwin {

/// Vertex map a -> phi[a] on the 4^m vertices of Delta_m.
struct SwapMap {
  unsigned m = 0;
  std::vector<std::uint32_t> phi;

  bool is_bijection() const;
  friend bool operator==(const SwapMap&, const SwapMap&) = default;
  friend bool operator<(const SwapMap& a, const SwapMap& b) { return a.phi < b.phi; }
};

/// True iff map is a bijection with kappa[phi(a) ^ phi(b)] == -kappa[a ^ b]
/// for every pair a != b. Checks all pairs directly.
bool verify_swap(const EdgeColouredGraph& delta, const SwapMap& map);
bool verify_swap(const SwapMap& map);

/// Phi(a) = phi(a) ^ phi(0). Throws ctwin::Error if map does not verify.
SwapMap normalize(const SwapMap& map);

enum class SearchStatus { Found, Exhausted, Inconclusive };

std::string_view to_string(SearchStatus s) noexcept;

enum class VertexOrder {
  Natural,          // a = 0, 1, 2, ...
  MostConstrained,  // smallest remaining domain first; needs forward checking
};

struct SearchOptions {
  unsigned threads = 1;
  std::uint64_t node_budget = 0;           // 0: unlimited
  std::chrono::milliseconds time_budget{0};  // 0: unlimited
  // Prune on every unassigned vertex after each assignment, not only on the
  // vertex being assigned.
  bool forward_check = false;
  VertexOrder order = VertexOrder::Natural;
};

struct SearchStats {
  std::uint64_t nodes = 0;      // assignments made, the pinned phi(0) = 0 excluded
  std::uint32_t max_depth = 0;  // most vertices assigned at once
  double wall_ms = 0.0;
};

struct SearchOutcome {
  SearchStatus status = SearchStatus::Inconclusive;
  std::optional<SwapMap> witness;
  SearchStats stats;
};

/**
 * Depth-first search for a colour-swapping automorphism of Delta_m with
 * phi(0) pinned to 0. Assigning phi(a) = x is allowed only if
 * kappa[x ^ phi(b)] == -kappa[a ^ b] for every b already assigned; candidates
 * are tried in ascending order. With threads > 1 the candidates for vertex 1
 * are distributed over workers and the witness from the lowest candidate wins,
 * so the witness matches the serial run.
 *
 * Exhausted is only reported when the whole tree was explored. Hitting a node
 * or time budget first gives Inconclusive.
 */
SearchOutcome search_swap(unsigned m, const SearchOptions& options = {});
SearchOutcome search_swap(const EdgeColouredGraph& delta, const SearchOptions& options = {});

/// Every witness with phi(0) = 0, in lexicographic order, stopping after
/// `limit`. m is capped at 2 unless allow_large is set. Throws RangeError for
/// limit == 0.
std::vector<SwapMap> search_all(unsigned m, std::size_t limit, bool allow_large = false);
std::vector<SwapMap> search_all(const EdgeColouredGraph& delta, std::size_t limit);

/// {"m": m, "phi": [...]}
std::string witness_json(const SwapMap& map);
SwapMap parse_witness_json(std::string_view text);

/// {"m": m, "status": "exhausted", "nodes": nodes}
std::string exhaustion_json(unsigned m, std::uint64_t nodes);

}  // namespace ctwin
