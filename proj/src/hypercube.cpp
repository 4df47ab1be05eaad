#include "borsuk/hypercube.hpp"

namespace borsuk {

namespace {

void require_same_dim(const SignVertex& x, const SignVertex& y) {
  if (x.dim() != y.dim()) {
    throw std::invalid_argument("dimension mismatch: " + std::to_string(x.dim()) +
                                " vs " + std::to_string(y.dim()));
  }
}

}  // namespace

std::string mask_to_string(VertexMask m) {
  if (m == 0) return "0";
  std::string s;
  while (m != 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(m % 10)));
    m /= 10;
  }
  return {s.rbegin(), s.rend()};
}

SignVertex::SignVertex(int n, VertexMask neg_mask) : n_(n), neg_(neg_mask) {
  if (n < 1 || n > kMaxDim) {
    throw std::invalid_argument("SignVertex: dimension must be in 1.." +
                                std::to_string(kMaxDim));
  }
  if (n < kMaxDim && (neg_mask >> n) != 0) {
    throw std::invalid_argument("SignVertex: neg_mask has bits above dimension " +
                                std::to_string(n));
  }
}

SignVertex SignVertex::from_coords(std::span<const int> coords) {
  if (coords.empty()) throw std::invalid_argument("SignVertex: empty coordinate list");
  VertexMask m = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == -1) {
      m |= VertexMask(1) << i;
    } else if (coords[i] != 1) {
      throw std::invalid_argument("SignVertex: coordinates must be +1 or -1");
    }
  }
  return SignVertex(static_cast<int>(coords.size()), m);
}

int SignVertex::coord(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("SignVertex::coord: index out of range");
  return (neg_ >> (i - 1)) & 1 ? -1 : 1;
}

std::vector<int> SignVertex::coords() const {
  std::vector<int> c(static_cast<std::size_t>(n_));
  for (int i = 1; i <= n_; ++i) c[static_cast<std::size_t>(i - 1)] = coord(i);
  return c;
}

SignVertex SignVertex::negated() const {
  VertexMask all = n_ == kMaxDim ? ~VertexMask(0) : (VertexMask(1) << n_) - 1;
  return SignVertex(n_, neg_ ^ all);
}

int dot(const SignVertex& x, const SignVertex& y) {
  require_same_dim(x, y);
  return x.dim() - 2 * popcount_mask(x.neg_mask() ^ y.neg_mask());
}

int dist_sq(const SignVertex& x, const SignVertex& y) {
  return 2 * x.dim() - 2 * dot(x, y);
}

int quad_dot(const SignVertex& x, const SignVertex& y) {
  int d = dot(x, y);
  return d * d;
}

int quad_dist_sq(const SignVertex& x, const SignVertex& y) {
  int n = x.dim();
  return 2 * n * n - 2 * quad_dot(x, y);
}

QuadVertex::QuadVertex(const SignVertex& x) : n_(x.dim()) {
  entries_.resize(static_cast<std::size_t>(n_) * n_);
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) {
      entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)] =
          static_cast<std::int8_t>(x.coord(i) * x.coord(j));
    }
  }
}

int QuadVertex::entry(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_) {
    throw std::out_of_range("QuadVertex::entry: index out of range");
  }
  return entries_[static_cast<std::size_t>(i - 1) * n_ + (j - 1)];
}

QuadVertex embed_f(const SignVertex& x) { return QuadVertex(x); }

SignVertex VertexSetM::vertex(std::size_t idx) const {
  if (idx >= members_.size()) throw std::out_of_range("VertexSetM::vertex: index out of range");
  return SignVertex(n_, members_[idx]);
}

std::size_t VertexSetM::index_of(VertexMask m) const {
  std::size_t lo = 0, hi = members_.size();
  while (lo < hi) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (members_[mid] < m) {
      lo = mid + 1;
    } else {
      hi = mid;
    }
  }
  return (lo < members_.size() && members_[lo] == m) ? lo : npos;
}

VertexSetM build_M(int n) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument("construction requires n ≡ 0 mod 4 (got n = " +
                                std::to_string(n) + ")");
  }
  if (n > kMaxEnumerationDim) {
    throw std::length_error("build_M: refusing to materialize 2^(n-2) vertices for n = " +
                            std::to_string(n) + " (limit n <= " +
                            std::to_string(kMaxEnumerationDim) + ")");
  }
  // Coordinate 1 is +1 (bit 0 clear); enumerate the remaining n-1 bits in
  // ascending order and keep the masks with an even number of -1s.
  std::vector<VertexMask> members;
  members.reserve(std::size_t{1} << (n - 2));
  std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t sub = 0; sub < limit; ++sub) {
    if (__builtin_popcount(sub) % 2 == 0) {
      members.push_back(VertexMask(sub) << 1);
    }
  }
  return VertexSetM(n, std::move(members));
}

}  // namespace borsuk
