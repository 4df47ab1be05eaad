#ifndef BORSUK_HYPERCUBE_HPP
#define BORSUK_HYPERCUBE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace borsuk {

/// Negative-coordinate bitmask of a +-1 vector. Bit (i-1) set means
/// coordinate i equals -1. 128 bits cover every dimension at which
/// vertices are ever materialized.
using VertexMask = unsigned __int128;

inline constexpr int kMaxDim = 128;

/// Largest dimension for which build_M will materialize all 2^(n-2)
/// members. Beyond this the construction is only reasoned about through
/// exact counting (see bound_engine).
inline constexpr int kMaxEnumerationDim = 24;

inline int popcount_mask(VertexMask m) {
  return __builtin_popcountll(static_cast<std::uint64_t>(m)) +
         __builtin_popcountll(static_cast<std::uint64_t>(m >> 64));
}

std::string mask_to_string(VertexMask m);  // decimal

/// A vertex of the n-cube {-1,+1}^n, stored as dimension + negative mask.
/// Two vertices compare equal iff both fields agree.
class SignVertex {
 public:
  SignVertex(int n, VertexMask neg_mask);

  /// Builds a vertex from explicit +-1 coordinates (handy in tests and
  /// demonstrations; the bitmask form is canonical).
  static SignVertex from_coords(std::span<const int> coords);

  int dim() const { return n_; }
  VertexMask neg_mask() const { return neg_; }

  /// Coordinate value, +1 or -1. i is 1-based.
  int coord(int i) const;
  std::vector<int> coords() const;

  SignVertex negated() const;

  friend bool operator==(const SignVertex&, const SignVertex&) = default;

 private:
  int n_;
  VertexMask neg_;
};

/// Scalar product x.y = sum x_i y_i, computed as n - 2*popcount(xor).
int dot(const SignVertex& x, const SignVertex& y);

/// Squared Euclidean distance |x,y|^2 = 2n - 2 x.y. No square roots
/// anywhere: all distance reasoning is in squared form.
int dist_sq(const SignVertex& x, const SignVertex& y);

/// Scalar product of the embedded vertices, fx.fy = (x.y)^2.
int quad_dot(const SignVertex& x, const SignVertex& y);

/// Squared distance between embedded vertices: |fx,fy|^2 = 2n^2 - 2(x.y)^2.
/// Maximal value 2n^2, attained exactly when x.y = 0.
int quad_dist_sq(const SignVertex& x, const SignVertex& y);

/// The n x n sign table (x_i x_j): the image f(x), a vertex of the
/// n^2-cube. Symmetric with unit diagonal. Materialized only in tests and
/// demonstrations; metric queries on embedded vertices go through
/// quad_dot / quad_dist_sq on the preimages.
class QuadVertex {
 public:
  explicit QuadVertex(const SignVertex& x);

  int dim() const { return n_; }

  /// Entry x_i x_j, 1-based indices.
  int entry(int i, int j) const;

  /// Row-major n^2 vector of +-1 entries, for brute-force comparisons
  /// against the flat n^2-cube metric.
  const std::vector<std::int8_t>& flat() const { return entries_; }

  friend bool operator==(const QuadVertex&, const QuadVertex&) = default;

 private:
  int n_;
  std::vector<std::int8_t> entries_;
};

/// The quadratic embedding f: x -> (x_i x_j).
QuadVertex embed_f(const SignVertex& x);

/// M = { x in E_2^n : x_1 = +1 and the number of -1 coordinates is even },
/// materialized in ascending neg_mask order. |M| = 2^(n-2).
class VertexSetM {
 public:
  int dim() const { return n_; }
  std::size_t size() const { return members_.size(); }
  const std::vector<VertexMask>& members() const { return members_; }
  SignVertex vertex(std::size_t idx) const;

  /// Index of a mask in the ascending member list, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t index_of(VertexMask m) const;

  friend VertexSetM build_M(int n);

 private:
  VertexSetM(int n, std::vector<VertexMask> members)
      : n_(n), members_(std::move(members)) {}
  int n_;
  std::vector<VertexMask> members_;
};

/// Enumerates M for n divisible by 4. Throws std::invalid_argument when
/// n is not of that form, std::length_error above kMaxEnumerationDim.
VertexSetM build_M(int n);

}  // namespace borsuk

#endif  // BORSUK_HYPERCUBE_HPP
