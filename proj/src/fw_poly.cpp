#include "borsuk/fw_poly.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace borsuk {

namespace {

void require_prime(int p) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    throw std::invalid_argument("modulus must be prime, got " + std::to_string(p));
  }
}

void require_in_m(const SignVertex& a, int p) {
  require_prime(p);
  if (a.dim() != 4 * p) {
    throw std::invalid_argument("vertex dimension " + std::to_string(a.dim()) +
                                " does not equal 4p = " + std::to_string(4 * p));
  }
  if ((a.neg_mask() & 1) != 0 || popcount_mask(a.neg_mask()) % 2 != 0) {
    throw std::invalid_argument("vertex is not a member of M (needs x_1 = +1 and an even number of -1s)");
  }
}

int mod_inverse(int a, int p) {
  // Fermat: a^(p-2) mod p, p prime, a != 0.
  long long base = a % p, result = 1;
  int e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

}  // namespace

int g_eval(long long t, int p) {
  require_prime(p);
  long long tm = ((t % p) + p) % p;
  long long r = 1;
  for (int j = 1; j < p; ++j) {
    r = r * ((tm - j % p + p) % p) % p;
  }
  return static_cast<int>(r);
}

std::vector<MonomialMask> monomial_basis(int n, int max_degree) {
  if (n < 2 || n > kMaxEnumerationDim) {
    throw std::length_error("monomial_basis: n out of materialization range");
  }
  std::vector<MonomialMask> basis;
  std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t sub = 0; sub < limit; ++sub) {
    if (__builtin_popcount(sub) <= max_degree) {
      basis.push_back(MonomialMask(sub) << 1);
    }
  }
  std::sort(basis.begin(), basis.end(), MonomialLess{});
  return basis;
}

MultilinearPoly MultilinearPoly::from_terms(int p, int n,
                                            const std::map<MonomialMask, int>& terms) {
  require_prime(p);
  if (n < 2 || n > kMaxDim) throw std::invalid_argument("MultilinearPoly: bad dimension");
  MultilinearPoly poly(p, n);
  for (const auto& [mono, c] : terms) {
    if ((mono & 1) != 0 || (n < kMaxDim && (mono >> n) != 0)) {
      throw std::invalid_argument("MultilinearPoly: monomial uses variables outside x_2..x_n");
    }
    if (popcount_mask(mono) > p - 1) {
      throw std::invalid_argument("MultilinearPoly: monomial degree exceeds p-1");
    }
    int r = ((c % p) + p) % p;
    if (r == 0) throw std::invalid_argument("MultilinearPoly: zero coefficient");
    poly.coeffs_[mono] = r;
  }
  return poly;
}

int MultilinearPoly::degree() const {
  int d = 0;
  for (const auto& [mono, c] : coeffs_) d = std::max(d, popcount_mask(mono));
  return d;
}

int MultilinearPoly::coeff(MonomialMask mono) const {
  auto it = coeffs_.find(mono);
  return it == coeffs_.end() ? 0 : it->second;
}

int MultilinearPoly::eval(const SignVertex& point) const {
  if (point.dim() != n_) {
    throw std::invalid_argument("MultilinearPoly::eval: dimension mismatch");
  }
  long long sum = 0;
  for (const auto& [mono, c] : coeffs_) {
    // The monomial's value at a +-1 point is the parity of the negative
    // variables it touches.
    int sign = popcount_mask(mono & point.neg_mask()) % 2 ? -1 : 1;
    sum += static_cast<long long>(sign) * c;
  }
  return static_cast<int>(((sum % p_) + p_) % p_);
}

MultilinearPoly reduce_fa(const SignVertex& a, int p) {
  require_in_m(a, p);
  int n = a.dim();
  MultilinearPoly poly(p, n);
  poly.coeffs_[0] = 1;
  // Left-fold the p-1 factors (a.x - j) = (1 - j) + sum_{i>=2} a_i x_i,
  // replacing x_i^2 by 1 (a bitmask toggle) as each product is formed.
  for (int j = 1; j < p; ++j) {
    std::map<MonomialMask, int> next;
    int c0 = ((1 - j) % p + p) % p;
    for (const auto& [mono, c] : poly.coeffs_) {
      if (c0 != 0) {
        int& slot = next[mono];
        slot = (slot + c * c0) % p;
      }
      for (int i = 2; i <= n; ++i) {
        int ai = a.coord(i);
        MonomialMask m2 = mono ^ (MonomialMask(1) << (i - 1));
        int& slot = next[m2];
        slot = ((slot + c * ai) % p + p) % p;
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    poly.coeffs_ = std::move(next);
  }
  return poly;
}

BigNat alpha(int n) {
  if (n < 4 || n % 4 != 0) {
    throw std::invalid_argument("alpha: n must be a positive multiple of 4");
  }
  BigNat sum = 0;
  for (int k = 0; k < n / 4; ++k) {
    sum += binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(k));
  }
  return sum;
}

bool check_nondivisibility(const VertexSetM& m, int p) {
  require_prime(p);
  if (m.dim() != 4 * p) {
    throw std::invalid_argument("check_nondivisibility: set dimension " +
                                std::to_string(m.dim()) + " does not equal 4p");
  }
  const auto& members = m.members();
  int n = m.dim();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      int d = n - 2 * popcount_mask(members[i] ^ members[j]);
      if (d != 0 && d % p == 0) return false;
    }
  }
  return true;
}

std::size_t gf_rank(std::vector<std::vector<int>> rows, int p) {
  require_prime(p);
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    int inv = mod_inverse(((rows[rank][col] % p) + p) % p, p);
    for (std::size_t c = col; c < ncols; ++c) {
      rows[rank][c] = static_cast<int>(static_cast<long long>(rows[rank][c]) * inv % p);
      rows[rank][c] = ((rows[rank][c] % p) + p) % p;
    }
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      int f = ((rows[r][col] % p) + p) % p;
      if (f == 0) continue;
      for (std::size_t c = col; c < ncols; ++c) {
        long long v = rows[r][c] - static_cast<long long>(f) * rows[rank][c];
        rows[r][c] = static_cast<int>(((v % p) + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<int>> coefficient_matrix(
    std::span<const MultilinearPoly> family, int n, int p) {
  auto basis = monomial_basis(n, p - 1);
  std::map<MonomialMask, std::size_t> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column[basis[c]] = c;
  std::vector<std::vector<int>> rows;
  rows.reserve(family.size());
  for (const auto& poly : family) {
    std::vector<int> row(basis.size(), 0);
    for (const auto& [mono, c] : poly.terms()) row[column.at(mono)] = c;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<std::vector<int>> evaluation_matrix(std::span<const SignVertex> family,
                                                int p) {
  std::vector<std::vector<int>> e(family.size(), std::vector<int>(family.size(), 0));
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      e[i][j] = g_eval(dot(family[i], family[j]), p);
    }
  }
  return e;
}

RankReport independence_rank(std::span<const SignVertex> family, int p) {
  for (const auto& a : family) require_in_m(a, p);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j]) {
        throw std::invalid_argument("independence_rank: duplicate family member");
      }
      if (dot(family[i], family[j]) == 0) {
        throw std::invalid_argument(
            "independence_rank: family contains an orthogonal pair (hypothesis violated)");
      }
    }
  }

  RankReport report;
  report.family_size = family.size();
  if (!family.empty()) {
    int n = family[0].dim();
    std::vector<MultilinearPoly> polys;
    polys.reserve(family.size());
    for (const auto& a : family) polys.push_back(reduce_fa(a, p));
    report.coefficient_rank = gf_rank(coefficient_matrix(polys, n, p), p);
    report.evaluation_rank = gf_rank(evaluation_matrix(family, p), p);
  }
  report.independent = report.coefficient_rank == report.family_size;
  return report;
}

bool dimension_bound_check(std::size_t family_rank, int n) {
  return BigNat(family_rank) <= alpha(n);
}

std::map<MonomialMask, BigInt> reduce_fa_integer(const SignVertex& a, int p) {
  require_in_m(a, p);
  int n = a.dim();
  std::map<MonomialMask, BigInt> terms;
  terms[0] = 1;
  for (int j = 1; j < p; ++j) {
    std::map<MonomialMask, BigInt> next;
    BigInt c0 = 1 - j;
    for (const auto& [mono, c] : terms) {
      if (c0 != 0) next[mono] += c * c0;
      for (int i = 2; i <= n; ++i) {
        next[mono ^ (MonomialMask(1) << (i - 1))] += c * a.coord(i);
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
    terms = std::move(next);
  }
  return terms;
}

BigInt eval_integer(const std::map<MonomialMask, BigInt>& terms, const SignVertex& point) {
  BigInt sum = 0;
  for (const auto& [mono, c] : terms) {
    int sign = popcount_mask(mono & point.neg_mask()) % 2 ? -1 : 1;
    sum += sign * c;
  }
  return sum;
}

std::size_t rational_rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  std::size_t ncols = rows[0].size();
  std::size_t rank = 0;
  BigInt previous_pivot = 1;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    // Sylvester's identity keeps every quotient an exact integer.
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < ncols; ++c) {
        rows[r][c] = (rows[rank][col] * rows[r][c] - rows[r][col] * rows[rank][c]) /
                     previous_pivot;
      }
      rows[r][col] = 0;
    }
    previous_pivot = rows[rank][col];
    ++rank;
  }
  return rank;
}

std::size_t rational_independence_rank(std::span<const SignVertex> family, int p) {
  for (const auto& a : family) require_in_m(a, p);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (family[i] == family[j]) {
        throw std::invalid_argument("rational_independence_rank: duplicate family member");
      }
      if (dot(family[i], family[j]) == 0) {
        throw std::invalid_argument(
            "rational_independence_rank: family contains an orthogonal pair");
      }
    }
  }
  if (family.empty()) return 0;
  int n = family[0].dim();
  auto basis = monomial_basis(n, p - 1);
  std::map<MonomialMask, std::size_t> column;
  for (std::size_t c = 0; c < basis.size(); ++c) column[basis[c]] = c;
  std::vector<std::vector<BigInt>> rows;
  rows.reserve(family.size());
  for (const auto& a : family) {
    std::vector<BigInt> row(basis.size(), 0);
    for (const auto& [mono, c] : reduce_fa_integer(a, p)) row[column.at(mono)] = c;
    rows.push_back(std::move(row));
  }
  return rational_rank(std::move(rows));
}

void write_coefficient_csv(std::span<const SignVertex> family, int p,
                           std::ostream& out) {
  for (const auto& a : family) require_in_m(a, p);
  if (family.empty()) return;
  int n = family[0].dim();
  auto basis = monomial_basis(n, p - 1);
  out << "neg_mask";
  for (auto mono : basis) {
    out << ',';
    if (mono == 0) {
      out << '1';
    } else {
      bool first = true;
      for (int i = 2; i <= n; ++i) {
        if ((mono >> (i - 1)) & 1) {
          if (!first) out << '*';
          out << 'x' << i;
          first = false;
        }
      }
    }
  }
  out << '\n';
  for (const auto& a : family) {
    auto poly = reduce_fa(a, p);
    out << mask_to_string(a.neg_mask());
    for (auto mono : basis) out << ',' << poly.coeff(mono);
    out << '\n';
  }
}

}  // namespace borsuk
