#ifndef BORSUK_ORTHO_GRAPH_HPP
#define BORSUK_ORTHO_GRAPH_HPP

#include <chrono>
#include <cstddef>
#include <span>
#include <vector>

#include "borsuk/bignat.hpp"
#include "borsuk/certificate.hpp"
#include "borsuk/hypercube.hpp"
#include "borsuk/index_bitset.hpp"

namespace borsuk {

/// The graph on M whose edges join orthogonal vectors. Ortho-free subsets
/// of M are exactly its independent sets, and they are what the parts of a
/// smaller-diameter partition of f(M) pull back to.
struct OrthoGraph {
  int n = 0;
  VertexSetM vertices;
  std::vector<IndexBitset> adjacency;  // adjacency[i].test(j) iff dot = 0

  std::size_t order() const { return vertices.size(); }
};

/// Largest vertex count for which adjacency bitsets are materialized.
inline constexpr std::size_t kMaxGraphOrder = 16384;

/// Computes the full (symmetric, irreflexive) adjacency structure.
OrthoGraph build_graph(const VertexSetM& m);

/// True iff no two of the listed vertices are orthogonal. Out-of-range or
/// duplicate indices throw std::invalid_argument.
bool verify_ortho_free(const OrthoGraph& g, std::span<const std::size_t> subset);

/// Ascending-index greedy ortho-free subset; seeds the exact search.
std::vector<std::size_t> greedy_ortho_free(const OrthoGraph& g);

struct MisResult {
  std::vector<std::size_t> subset;  // ascending vertex indices
  bool exhaustive = false;
};

/// Exact maximum independent set by branch and bound on bitset candidate
/// sets, seeded with the ascending-index greedy solution (and an optional
/// caller-provided independent set, whichever is larger). Branches on the
/// vertex of maximum residual degree (lowest index wins ties); prunes on
/// size + residual count. The exhaustive flag is set only when the whole
/// search tree was explored within the wall-clock budget, in which case
/// the subset size is the exact maximum. Single-threaded; deterministic
/// when it completes.
MisResult max_independent_set(const std::vector<IndexBitset>& adjacency,
                              std::chrono::milliseconds budget,
                              std::span<const std::size_t> seed_hint = {});

/// max_independent_set on the orthogonality graph, packaged as a
/// certificate whose subset lists the chosen neg_masks.
Certificate max_ortho_free(const OrthoGraph& g, std::chrono::milliseconds budget);

/// ceil(2^(n-2) / alpha(n)): the minimum number of ortho-free parts in any
/// partition of M, hence of smaller-diameter parts of f(M), granted the
/// cap |A| <= alpha(n). Requires n = 4p with p prime.
BigNat parts_lower_bound(int n);

/// Sequential greedy coloring (ascending vertices, smallest available
/// color): a constructive upper-bound companion to parts_lower_bound.
/// Each color class is an ortho-free part of M. Exact chromatic search is
/// out of scope; this only witnesses that a partition of the returned
/// size exists.
std::vector<int> greedy_coloring(const OrthoGraph& g);

/// The same bound packaged as a re-checkable certificate.
Certificate make_parts_certificate(int n);

}  // namespace borsuk

#endif  // BORSUK_ORTHO_GRAPH_HPP
