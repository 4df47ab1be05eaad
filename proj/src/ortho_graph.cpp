#include "borsuk/ortho_graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "borsuk/fw_poly.hpp"

namespace borsuk {

OrthoGraph build_graph(const VertexSetM& m) {
  std::size_t order = m.size();
  if (order > kMaxGraphOrder) {
    throw std::length_error("build_graph: |M| = " + std::to_string(order) +
                            " exceeds the adjacency materialization limit " +
                            std::to_string(kMaxGraphOrder));
  }
  OrthoGraph g{m.dim(), m, {}};
  g.adjacency.assign(order, IndexBitset(order));
  const auto& members = m.members();
  int n = m.dim();
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = i + 1; j < order; ++j) {
      if (n == 2 * popcount_mask(members[i] ^ members[j])) {  // dot = 0
        g.adjacency[i].set(j);
        g.adjacency[j].set(i);
      }
    }
  }
  return g;
}

bool verify_ortho_free(const OrthoGraph& g, std::span<const std::size_t> subset) {
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] >= g.order()) {
      throw std::invalid_argument("verify_ortho_free: vertex index " +
                                  std::to_string(subset[i]) + " out of range");
    }
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (subset[i] == subset[j]) {
        throw std::invalid_argument("verify_ortho_free: duplicate vertex index " +
                                    std::to_string(subset[i]));
      }
    }
  }
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g.adjacency[subset[i]].test(subset[j])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> greedy_ortho_free(const OrthoGraph& g) {
  std::vector<std::size_t> chosen;
  IndexBitset excluded(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (excluded.test(v)) continue;
    chosen.push_back(v);
    excluded |= g.adjacency[v];
  }
  return chosen;
}

namespace {

class MaxIndependentSetSearch {
 public:
  MaxIndependentSetSearch(const std::vector<IndexBitset>& adjacency,
                          std::chrono::milliseconds budget,
                          std::span<const std::size_t> seed_hint)
      : adjacency_(adjacency),
        order_(adjacency.size()),
        seed_hint_(seed_hint),
        deadline_(std::chrono::steady_clock::now() + budget) {}

  void run() {
    // Greedy seed so that an early budget expiry still returns a sound set.
    best_ = IndexBitset(order_);
    IndexBitset excluded(order_);
    for (std::size_t v = 0; v < order_; ++v) {
      if (excluded.test(v)) continue;
      best_.set(v);
      ++best_size_;
      excluded |= adjacency_[v];
    }
    for (std::size_t i = 0; i < seed_hint_.size(); ++i) {
      if (seed_hint_[i] >= order_) {
        throw std::invalid_argument("max_independent_set: seed index out of range");
      }
      for (std::size_t j = i + 1; j < seed_hint_.size(); ++j) {
        if (seed_hint_[i] == seed_hint_[j] || adjacency_[seed_hint_[i]].test(seed_hint_[j])) {
          throw std::invalid_argument("max_independent_set: seed is not independent");
        }
      }
    }
    if (seed_hint_.size() > best_size_) {
      best_ = IndexBitset(order_);
      for (auto v : seed_hint_) best_.set(v);
      best_size_ = seed_hint_.size();
    }

    IndexBitset cand(order_);
    cand.set_all();
    IndexBitset empty(order_);
    expand(cand, empty, 0);
  }

  bool exhausted() const { return exhausted_; }
  std::vector<std::size_t> best_subset() const {
    std::vector<std::size_t> out;
    best_.for_each([&](std::size_t v) { out.push_back(v); });
    return out;
  }

 private:
  void expand(const IndexBitset& cand, const IndexBitset& current, std::size_t size) {
    if (!exhausted_) return;
    if ((++nodes_ & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline_) {
      exhausted_ = false;
      return;
    }
    if (size > best_size_) {
      best_size_ = size;
      best_ = current;
    }
    std::size_t remaining = cand.count();
    if (remaining == 0 || size + remaining <= best_size_) return;

    // Branching vertex: maximum residual degree, lowest index on ties.
    std::size_t branch = 0, branch_deg = 0;
    bool found = false;
    cand.for_each([&](std::size_t v) {
      std::size_t deg = adjacency_[v].intersect_count(cand);
      if (!found || deg > branch_deg) {
        found = true;
        branch = v;
        branch_deg = deg;
      }
    });

    IndexBitset with = cand;
    with.reset(branch);
    with.and_not(adjacency_[branch]);
    IndexBitset chosen = current;
    chosen.set(branch);
    expand(with, chosen, size + 1);
    if (!exhausted_) return;

    IndexBitset without = cand;
    without.reset(branch);
    expand(without, current, size);
  }

  const std::vector<IndexBitset>& adjacency_;
  std::size_t order_;
  std::span<const std::size_t> seed_hint_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = true;
  std::size_t best_size_ = 0;
  IndexBitset best_;
};

}  // namespace

MisResult max_independent_set(const std::vector<IndexBitset>& adjacency,
                              std::chrono::milliseconds budget,
                              std::span<const std::size_t> seed_hint) {
  if (budget <= std::chrono::milliseconds::zero()) {
    throw std::invalid_argument("max_independent_set: budget must be positive");
  }
  MaxIndependentSetSearch search(adjacency, budget, seed_hint);
  search.run();
  return {search.best_subset(), search.exhausted()};
}

Certificate max_ortho_free(const OrthoGraph& g, std::chrono::milliseconds budget) {
  // Members with fewer than n/4 negative coordinates are pairwise
  // non-orthogonal (dots stay >= 4), a strong deterministic incumbent.
  std::vector<std::size_t> low_weight;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (popcount_mask(g.vertices.members()[v]) < g.n / 4) low_weight.push_back(v);
  }
  MisResult result = max_independent_set(g.adjacency, budget, low_weight);
  const auto& subset = result.subset;

  Certificate cert;
  cert.claim = ClaimKind::kMaxOrthoFree;
  cert.n = g.n;
  cert.p = (g.n % 4 == 0 && is_prime(static_cast<std::uint64_t>(g.n / 4))) ? g.n / 4 : 0;
  cert.subset.reserve(subset.size());
  for (auto idx : subset) cert.subset.push_back(g.vertices.members()[idx]);
  std::sort(cert.subset.begin(), cert.subset.end());
  cert.value = BigNat(subset.size());
  cert.exhaustive = result.exhaustive;
  cert.checksum = vertex_list_checksum(g.vertices);
  return cert;
}

BigNat parts_lower_bound(int n) {
  if (n < 4 || n % 4 != 0 || !is_prime(static_cast<std::uint64_t>(n / 4))) {
    throw std::invalid_argument("parts_lower_bound: n must equal 4p with p prime");
  }
  return ceil_div(pow2(static_cast<unsigned>(n - 2)), alpha(n));
}

std::vector<int> greedy_coloring(const OrthoGraph& g) {
  std::vector<int> color(g.order(), -1);
  std::vector<char> used;
  for (std::size_t v = 0; v < g.order(); ++v) {
    used.assign(g.order(), 0);
    g.adjacency[v].for_each([&](std::size_t u) {
      if (color[u] >= 0) used[static_cast<std::size_t>(color[u])] = 1;
    });
    int c = 0;
    while (used[static_cast<std::size_t>(c)]) ++c;
    color[v] = c;
  }
  return color;
}

Certificate make_parts_certificate(int n) {
  BigNat bound = parts_lower_bound(n);
  Certificate cert;
  cert.claim = ClaimKind::kPartCountLowerBound;
  cert.n = n;
  cert.p = n / 4;
  cert.value = bound;
  cert.exhaustive = true;
  cert.checksum = vertex_list_checksum(build_M(n));
  return cert;
}

}  // namespace borsuk
