#include "ctwin/swap_search.hpp"

#include <atomic>
#include <bit>
#include <functional>
#include <limits>
#include <mutex>
#include <thread>

#include <json.hpp>

namespace ctwin {

bool SwapMap::is_bijection() const {
  std::vector<bool> seen(phi.size(), false);
  for (auto x : phi) {
    if (x >= phi.size() || seen[x])
      return false;
    seen[x] = true;
  }
  return true;
}

bool verify_swap(const EdgeColouredGraph& delta, const SwapMap& map) {
  const std::uint32_t v = delta.vertex_count();
  if (map.phi.size() != v || !map.is_bijection())
    return false;
  const auto kappa = delta.kappa();
  for (std::uint32_t a = 0; a < v; ++a)
    for (std::uint32_t b = a + 1; b < v; ++b)
      if (kappa[map.phi[a] ^ map.phi[b]] != -kappa[a ^ b])
        return false;
  return true;
}

bool verify_swap(const SwapMap& map) {
  if (map.m < 1 || map.m > 12)
    return false;
  return verify_swap(build_delta(map.m), map);
}

SwapMap normalize(const SwapMap& map) {
  if (!verify_swap(map))
    throw Error("normalize: map does not swap the red and blue subgraphs");
  SwapMap out = map;
  const std::uint32_t shift = map.phi[0];
  for (auto& x : out.phi)
    x ^= shift;
  return out;
}

std::string_view to_string(SearchStatus s) noexcept {
  switch (s) {
    case SearchStatus::Found:
      return "found";
    case SearchStatus::Exhausted:
      return "exhausted";
    case SearchStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::size_t kNoBranch = std::numeric_limits<std::size_t>::max();

// mask(c, y) = { x != y : kappa[x ^ y] == c }, packed.
class ColourMasks {
 public:
  explicit ColourMasks(const EdgeColouredGraph& g)
      : v_(g.vertex_count()), words_((std::size_t{v_} + 63) / 64), bits_(3 * v_ * words_, 0) {
    const auto kappa = g.kappa();
    for (std::uint32_t y = 0; y < v_; ++y) {
      for (std::uint32_t x = 0; x < v_; ++x) {
        if (x == y)
          continue;
        std::uint64_t* row = mutable_row(kappa[x ^ y], y);
        row[x >> 6] |= std::uint64_t{1} << (x & 63);
      }
    }
  }

  const std::uint64_t* get(int colour, std::uint32_t y) const noexcept {
    return bits_.data() + (static_cast<std::size_t>(colour + 1) * v_ + y) * words_;
  }
  std::size_t words() const noexcept { return words_; }

 private:
  std::uint64_t* mutable_row(int colour, std::uint32_t y) noexcept {
    return bits_.data() + (static_cast<std::size_t>(colour + 1) * v_ + y) * words_;
  }

  std::uint32_t v_;
  std::size_t words_;
  std::vector<std::uint64_t> bits_;
};

// State shared by every worker of one search.
struct Control {
  Control(const SearchOptions& opt, Clock::time_point end) : options(opt), deadline(end) {}

  const SearchOptions& options;
  Clock::time_point deadline;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> budget_hit{false};
  std::atomic<std::size_t> best_branch{kNoBranch};
  std::mutex merge_mutex;
  std::uint32_t max_depth = 0;

  void offer_branch(std::size_t branch) {
    std::size_t cur = best_branch.load();
    while (branch < cur && !best_branch.compare_exchange_weak(cur, branch)) {
    }
  }
};

bool empty(const std::uint64_t* bits, std::size_t words) noexcept {
  for (std::size_t w = 0; w < words; ++w)
    if (bits[w])
      return false;
  return true;
}

class Worker {
 public:
  // Returns true to stop the search at this solution.
  using OnSolution = std::function<bool(const std::vector<std::uint32_t>&)>;

  Worker(const EdgeColouredGraph& g, const ColourMasks& masks, Control& control)
      : kappa_(g.kappa()),
        masks_(masks),
        control_(control),
        v_(g.vertex_count()),
        words_(masks.words()),
        forward_(control.options.forward_check || control.options.order == VertexOrder::MostConstrained),
        most_constrained_(control.options.order == VertexOrder::MostConstrained),
        phi_(v_, 0),
        assigned_(v_, false) {
    levels_.assign((forward_ ? std::size_t{v_} * v_ : v_) * words_, 0);
  }

  // Explores the subtree phi(0) = 0, phi(1) = first. Returns true when the
  // search must unwind: a solution asked to stop, or the run was aborted.
  bool explore(std::uint32_t first, std::size_t branch, const OnSolution& on_solution) {
    branch_ = branch;
    on_solution_ = &on_solution;
    std::fill(assigned_.begin(), assigned_.end(), false);
    phi_[0] = 0;
    assigned_[0] = true;
    if (!tick())
      return true;
    phi_[1] = first;
    assigned_[1] = true;
    note_depth(2);
    if (!forward_)
      return descend_plain(2);
    for (std::uint32_t c = 2; c < v_; ++c) {
      std::uint64_t* dom = level_row(0, c);
      const std::uint64_t* m0 = masks_.get(-kappa_[c], 0);
      const std::uint64_t* m1 = masks_.get(-kappa_[c ^ 1u], first);
      for (std::size_t w = 0; w < words_; ++w)
        dom[w] = m0[w] & m1[w];
      if (empty(dom, words_))
        return false;
    }
    return descend_forward(2, 0);
  }

  bool aborted() const noexcept { return aborted_; }

  void flush() {
    control_.nodes.fetch_add(pending_);
    pending_ = 0;
    std::lock_guard lock(control_.merge_mutex);
    control_.max_depth = std::max(control_.max_depth, max_depth_);
  }

 private:
  // Counts one node. Returns false if the run must abort.
  bool tick() {
    const auto& opt = control_.options;
    if (opt.node_budget && control_.nodes.load(std::memory_order_relaxed) + pending_ >= opt.node_budget) {
      control_.budget_hit = true;
      aborted_ = true;
      return false;
    }
    ++pending_;
    if ((pending_ & 1023u) == 0) {
      control_.nodes.fetch_add(pending_);
      pending_ = 0;
      if (opt.time_budget.count() > 0 && Clock::now() >= control_.deadline)
        control_.budget_hit = true;
      if (control_.budget_hit.load() || control_.best_branch.load() < branch_) {
        aborted_ = true;
        return false;
      }
    }
    return true;
  }

  void note_depth(std::uint32_t depth) noexcept { max_depth_ = std::max(max_depth_, depth); }

  std::uint64_t* level_row(std::uint32_t level, std::uint32_t vertex) noexcept {
    return levels_.data() + (std::size_t{level} * v_ + vertex) * words_;
  }

  // Natural order, each domain built from the constraints of the assigned
  // prefix only. The masks exclude phi(b) itself, so the result is also a
  // subset of the unused images.
  bool descend_plain(std::uint32_t a) {
    if (a == v_)
      return (*on_solution_)(phi_);
    std::uint64_t* dom = levels_.data() + std::size_t{a} * words_;
    {
      const std::uint64_t* first = masks_.get(-kappa_[a], phi_[0]);
      std::copy(first, first + words_, dom);
    }
    for (std::uint32_t b = 1; b < a; ++b) {
      const std::uint64_t* mask = masks_.get(-kappa_[a ^ b], phi_[b]);
      for (std::size_t w = 0; w < words_; ++w)
        dom[w] &= mask[w];
    }
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = dom[w]; bits; bits &= bits - 1) {
        if (!tick())
          return true;
        phi_[a] = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        note_depth(a + 1);
        if (descend_plain(a + 1))
          return true;
      }
    }
    return false;
  }

  std::uint32_t choose(std::uint32_t depth, std::uint32_t level) noexcept {
    if (!most_constrained_)
      return depth;
    std::uint32_t best = v_;
    int best_size = std::numeric_limits<int>::max();
    for (std::uint32_t c = 2; c < v_; ++c) {
      if (assigned_[c])
        continue;
      const std::uint64_t* dom = level_row(level, c);
      int size = 0;
      for (std::size_t w = 0; w < words_; ++w)
        size += std::popcount(dom[w]);
      if (size < best_size) {
        best_size = size;
        best = c;
      }
    }
    return best;
  }

  // Every unassigned vertex keeps a live domain at each level; an assignment
  // that empties one is refuted immediately.
  bool descend_forward(std::uint32_t depth, std::uint32_t level) {
    if (depth == v_)
      return (*on_solution_)(phi_);
    const std::uint32_t a = choose(depth, level);
    const std::uint64_t* dom = level_row(level, a);
    assigned_[a] = true;
    for (std::size_t w = 0; w < words_; ++w) {
      for (std::uint64_t bits = dom[w]; bits; bits &= bits - 1) {
        if (!tick()) {
          assigned_[a] = false;
          return true;
        }
        const auto x = static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits));
        phi_[a] = x;
        note_depth(depth + 1);
        bool consistent = true;
        for (std::uint32_t c = 2; c < v_ && consistent; ++c) {
          if (assigned_[c])
            continue;
          const std::uint64_t* cur = level_row(level, c);
          const std::uint64_t* mask = masks_.get(-kappa_[a ^ c], x);
          std::uint64_t* next = level_row(level + 1, c);
          std::uint64_t any = 0;
          for (std::size_t k = 0; k < words_; ++k) {
            next[k] = cur[k] & mask[k];
            any |= next[k];
          }
          consistent = any != 0;
        }
        if (consistent && descend_forward(depth + 1, level + 1)) {
          assigned_[a] = false;
          return true;
        }
      }
    }
    assigned_[a] = false;
    return false;
  }

  std::span<const std::int8_t> kappa_;
  const ColourMasks& masks_;
  Control& control_;
  std::uint32_t v_;
  std::size_t words_;
  bool forward_;
  bool most_constrained_;
  std::vector<std::uint32_t> phi_;
  std::vector<bool> assigned_;
  std::vector<std::uint64_t> levels_;
  const OnSolution* on_solution_ = nullptr;
  std::size_t branch_ = 0;
  std::uint64_t pending_ = 0;
  std::uint32_t max_depth_ = 1;
  bool aborted_ = false;
};

std::vector<std::uint32_t> first_candidates(const EdgeColouredGraph& g, const ColourMasks& masks) {
  std::vector<std::uint32_t> out;
  const std::uint64_t* dom = masks.get(-g.kappa()[1], 0);
  for (std::size_t w = 0; w < masks.words(); ++w)
    for (std::uint64_t bits = dom[w]; bits; bits &= bits - 1)
      out.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
  return out;
}

unsigned level_of(const EdgeColouredGraph& g) {
  if (g.bits() % 2 != 0 || g.bits() < 2)
    throw Error("swap search: graph must have 4^m vertices");
  return g.bits() / 2;
}

}  // namespace

SearchOutcome search_swap(const EdgeColouredGraph& delta, const SearchOptions& options) {
  const auto start = Clock::now();
  const unsigned m = level_of(delta);
  const ColourMasks masks(delta);
  const auto candidates = first_candidates(delta, masks);

  Control control{options, start + options.time_budget};
  std::vector<std::optional<std::vector<std::uint32_t>>> found(candidates.size());
  std::atomic<std::size_t> next_branch{0};

  auto work = [&] {
    Worker worker(delta, masks, control);
    for (;;) {
      const std::size_t b = next_branch.fetch_add(1);
      if (b >= candidates.size() || b > control.best_branch.load() || control.budget_hit.load())
        break;
      const Worker::OnSolution record = [&](const std::vector<std::uint32_t>& phi) {
        found[b] = phi;
        control.offer_branch(b);
        return true;
      };
      worker.explore(candidates[b], b, record);
      if (worker.aborted() && control.budget_hit.load())
        break;
    }
    worker.flush();
  };

  const unsigned threads = std::max(1u, options.threads);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
      pool.emplace_back(work);
  }

  SearchOutcome out;
  out.stats.nodes = control.nodes.load();
  out.stats.max_depth = control.max_depth;
  for (auto& f : found) {
    if (f) {
      out.status = SearchStatus::Found;
      out.witness = SwapMap{m, std::move(*f)};
      break;
    }
  }
  if (!out.witness)
    out.status = control.budget_hit.load() ? SearchStatus::Inconclusive : SearchStatus::Exhausted;
  out.stats.wall_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return out;
}

SearchOutcome search_swap(unsigned m, const SearchOptions& options) {
  if (m < 1 || m > 12)
    throw RangeError("search_swap: m must lie in 1..12");
  return search_swap(build_delta(m), options);
}

std::vector<SwapMap> search_all(const EdgeColouredGraph& delta, std::size_t limit) {
  if (limit == 0)
    throw RangeError("search_all: limit must be positive");
  const unsigned m = level_of(delta);
  const ColourMasks masks(delta);
  const SearchOptions options;
  Control control{options, Clock::now()};
  std::vector<SwapMap> out;
  const Worker::OnSolution collect = [&](const std::vector<std::uint32_t>& phi) {
    out.push_back(SwapMap{m, phi});
    return out.size() >= limit;
  };
  Worker worker(delta, masks, control);
  for (std::size_t b = 0; auto x : first_candidates(delta, masks)) {
    if (worker.explore(x, b++, collect))
      break;
  }
  return out;
}

std::vector<SwapMap> search_all(unsigned m, std::size_t limit, bool allow_large) {
  if (m < 1 || (m > 2 && !allow_large) || m > 12)
    throw RangeError("search_all: m=" + std::to_string(m) +
                     " is above the enumeration guard (m <= 2 unless overridden)");
  return search_all(build_delta(m), limit);
}

std::string witness_json(const SwapMap& map) {
  nlohmann::ordered_json j;
  j["m"] = map.m;
  j["phi"] = map.phi;
  return j.dump();
}

SwapMap parse_witness_json(std::string_view text) {
  try {
    const auto j = nlohmann::json::parse(text);
    SwapMap map{j.at("m").get<unsigned>(), j.at("phi").get<std::vector<std::uint32_t>>()};
    if (map.m < 1 || map.m > 12 || map.phi.size() != std::size_t{1} << (2 * map.m))
      throw Error("witness json: phi must have 4^m entries");
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("witness json: ") + e.what());
  }
}

std::string exhaustion_json(unsigned m, std::uint64_t nodes) {
  nlohmann::ordered_json j;
  j["m"] = m;
  j["status"] = "exhausted";
  j["nodes"] = nodes;
  return j.dump();
}

}  // namespace ctwin
