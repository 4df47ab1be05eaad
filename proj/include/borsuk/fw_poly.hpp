// Polynomial route to the ortho-free cardinality bound, for n = 4p with p
// prime. Each vertex a of M yields F~a, the square-free reduction of
// G(a.x) = (a.x - 1)...(a.x - p + 1) over GF(p). On cube points the
// reduction is exact, so F~a(b) = G(a.b) mod p. For an ortho-free family
// the matrix G(a.b) is diagonal with nonzero diagonal (a.a = 4p is
// divisible by p; a distinct non-orthogonal b has a.b a nonzero multiple
// of 4 below 4p, hence - for odd p - not divisible by p), which forces
// the F~a linearly independent and caps the family at the basis size
// alpha(n). All ranks are computed over GF(p) directly; a
// rational-coefficient treatment that clears denominators and descends
// reaches the same conclusion, and the modular form of the argument is
// both exact and constructive. At p = 2 the divisibility step genuinely
// fails (a.b = +-4 is even) and the rank checks report the collapse
// rather than the bound; see check_nondivisibility and independence_rank.

#ifndef BORSUK_FW_POLY_HPP
#define BORSUK_FW_POLY_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <vector>

#include "borsuk/bignat.hpp"
#include "borsuk/hypercube.hpp"

namespace borsuk {

/// G(t) = (t-1)(t-2)...(t-p+1) mod p. Zero exactly when t is NOT
/// divisible by p (Wilson's theorem gives the nonzero value at t = 0).
int g_eval(long long t, int p);

/// A square-free monomial over the variables x_2..x_n: bit (i-1) set means
/// x_i occurs. Shares the bit convention of VertexMask; bit 0 is never set.
using MonomialMask = VertexMask;

/// Deterministic monomial order: degree ascending, then bitmask ascending.
struct MonomialLess {
  bool operator()(MonomialMask a, MonomialMask b) const {
    int da = popcount_mask(a), db = popcount_mask(b);
    if (da != db) return da < db;
    return a < b;
  }
};

/// All square-free monomials over x_2..x_n of degree <= max_degree, in the
/// deterministic order. Throws std::length_error when the basis would
/// exceed materialization scale.
std::vector<MonomialMask> monomial_basis(int n, int max_degree);

/// Square-free polynomial in x_2..x_n with coefficients in GF(p), degree
/// at most p-1. Only nonzero coefficients are stored.
class MultilinearPoly {
 public:
  /// Validating constructor for explicitly given terms (coefficients taken
  /// mod p; zero coefficients rejected; degree cap enforced).
  static MultilinearPoly from_terms(int p, int n,
                                    const std::map<MonomialMask, int>& terms);

  int modulus() const { return p_; }
  int dim() const { return n_; }
  std::size_t term_count() const { return coeffs_.size(); }
  int degree() const;
  int coeff(MonomialMask mono) const;
  const std::map<MonomialMask, int>& terms() const { return coeffs_; }

  /// Value at a +-1 point (only coordinates 2..n of the point are read).
  int eval(const SignVertex& point) const;

  friend MultilinearPoly reduce_fa(const SignVertex& a, int p);

 private:
  MultilinearPoly(int p, int n) : p_(p), n_(n) {}
  int p_;
  int n_;
  std::map<MonomialMask, int> coeffs_;  // nonzero residues only
};

/// Expands G(a.x) with x = (1, x_2, ..., x_n) as a product of the p-1
/// linear factors (a.x - j), folding x_i^2 -> 1 after each multiplication.
/// Requires a in M with a.dim() = 4p. The result is square-free of degree
/// at most p-1 and agrees with g_eval(dot(a,b), p) at every point b of the
/// cube, because b_i^2 = 1 there.
MultilinearPoly reduce_fa(const SignVertex& a, int p);

/// alpha(n) = C(n-1,0) + C(n-1,1) + ... + C(n-1, n/4 - 1): the number of
/// square-free monomials of degree < n/4 in n-1 variables, and the cap on
/// ortho-free subsets of M when n = 4p.
BigNat alpha(int n);

/// Exhaustively checks that every distinct non-orthogonal pair a,b in M
/// has a.b not divisible by p. True for odd p (a.b is a nonzero multiple
/// of 4 with |a.b| < 4p); at p = 2 the scan reports the actual outcome.
bool check_nondivisibility(const VertexSetM& m, int p);

struct RankReport {
  std::size_t family_size = 0;
  std::size_t coefficient_rank = 0;
  std::size_t evaluation_rank = 0;
  bool independent = false;  // coefficient_rank == family_size
};

/// Row-reduces a dense matrix over GF(p) and returns its rank. Pivoting:
/// first nonzero entry in column order, row swaps only.
std::size_t gf_rank(std::vector<std::vector<int>> rows, int p);

/// Coefficient vectors of the given polynomials over the deterministic
/// monomial basis of degree <= p-1 (rows in family order, entries 0..p-1).
std::vector<std::vector<int>> coefficient_matrix(
    std::span<const MultilinearPoly> family, int n, int p);

/// The matrix E[i][j] = G(a_i . a_j) mod p over the family.
std::vector<std::vector<int>> evaluation_matrix(
    std::span<const SignVertex> family, int p);

/// Computes both the coefficient rank (Gaussian elimination on the
/// reduced polynomials' coefficient vectors) and the evaluation rank (of
/// E[i][j] = G(a_i . a_j) mod p). Requires every member in M with
/// dimension 4p, no duplicates, and no orthogonal pair (the Lemma's
/// hypothesis); violations throw std::invalid_argument.
RankReport independence_rank(std::span<const SignVertex> family, int p);

/// A linearly independent family in the degree-(p-1) square-free space
/// cannot exceed the basis size: rank <= alpha(n).
bool dimension_bound_check(std::size_t family_rank, int n);

/// The square-free reduction of G(a.x) with exact integer coefficients
/// (no modular reduction). Reducing each coefficient mod p recovers
/// reduce_fa, and evaluating at a cube point b gives the exact integer
/// G(a.b) = (a.b - 1)...(a.b - p + 1).
std::map<MonomialMask, BigInt> reduce_fa_integer(const SignVertex& a, int p);

/// Exact value of the integer reduction at a +-1 point.
BigInt eval_integer(const std::map<MonomialMask, BigInt>& terms, const SignVertex& point);

/// Rank of an integer matrix over the rationals, by Bareiss fraction-free
/// elimination (all intermediate values stay integers; divisions are
/// exact).
std::size_t rational_rank(std::vector<std::vector<BigInt>> rows);

/// Characteristic-0 counterpart of independence_rank: the rank over the
/// rationals of the family's integer coefficient matrix. Same hypotheses
/// (members of M at dimension 4p, duplicate-free, ortho-free). Always at
/// least the GF(p) coefficient rank; at odd p both equal the family size.
std::size_t rational_independence_rank(std::span<const SignVertex> family, int p);

/// CSV dump of the family's coefficient matrix: rows keyed by neg_mask,
/// columns the deterministic monomial order, entries residues 0..p-1.
void write_coefficient_csv(std::span<const SignVertex> family, int p,
                           std::ostream& out);

}  // namespace borsuk

#endif  // BORSUK_FW_POLY_HPP
