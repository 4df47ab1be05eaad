#include <doctest.h>

#include <random>
#include <sstream>

#include "borsuk/fw_poly.hpp"
#include "borsuk/ortho_graph.hpp"

using namespace borsuk;

namespace {

std::vector<SignVertex> greedy_family(int n) {
  auto g = build_graph(build_M(n));
  std::vector<SignVertex> family;
  for (auto idx : greedy_ortho_free(g)) family.push_back(g.vertices.vertex(idx));
  return family;
}

}  // namespace

TEST_CASE("g_eval vanishing behavior") {
  CHECK(g_eval(4, 3) == 0);  // G(4) = 3*2 = 6
  CHECK(g_eval(3, 3) == 2);  // G(3) = 2*1 = 2
  CHECK(g_eval(0, 5) == 4);  // Wilson: (p-1)! = -1 mod p for odd p
  for (int p : {2, 3, 5, 7}) {
    for (long long t = 0; t <= 6 * p; ++t) {
      CHECK((g_eval(t, p) == 0) == (t % p != 0));
    }
    CHECK((g_eval(-4, p) == 0) == (4 % p != 0));  // negative arguments normalize
  }
  CHECK_THROWS_AS(g_eval(1, 4), std::invalid_argument);
  CHECK_THROWS_AS(g_eval(1, 1), std::invalid_argument);
}

TEST_CASE("monomial basis is deterministic and counts alpha(n)") {
  auto basis8 = monomial_basis(8, 1);
  CHECK(basis8.size() == 8);
  CHECK(basis8.front() == MonomialMask(0));
  CHECK(BigNat(basis8.size()) == alpha(8));

  auto basis12 = monomial_basis(12, 2);
  CHECK(basis12.size() == 67);
  CHECK(BigNat(basis12.size()) == alpha(12));
  MonomialLess less;
  for (std::size_t i = 1; i < basis12.size(); ++i) CHECK(less(basis12[i - 1], basis12[i]));
  for (auto mono : basis12) CHECK((mono & 1) == 0);
}

TEST_CASE("alpha sums binomials exactly") {
  CHECK(alpha(8) == 8);
  CHECK(alpha(12) == 67);
  CHECK(alpha(44) == BigNat("2665685155"));
  CHECK(alpha(52) == BigNat("222972599812"));
  CHECK_THROWS_AS(alpha(10), std::invalid_argument);

  // Cross-route: Pascal-row binomials give the same sums.
  for (int n : {8, 12, 20}) {
    BigNat pascal = 0;
    for (int k = 0; k < n / 4; ++k)
      pascal += binomial_pascal(static_cast<unsigned>(n - 1), static_cast<unsigned>(k));
    CHECK(alpha(n) == pascal);
  }
}

TEST_CASE("reduction at p = 2 is the plain coordinate sum") {
  auto m8 = build_M(8);
  auto poly = reduce_fa(m8.vertex(3), 2);
  CHECK(poly.degree() == 1);
  CHECK(poly.term_count() == 7);
  CHECK(poly.coeff(MonomialMask(0)) == 0);
  for (int i = 2; i <= 8; ++i) CHECK(poly.coeff(MonomialMask(1) << (i - 1)) == 1);
}

TEST_CASE("reduction stays square-free with degree below p") {
  auto m12 = build_M(12);
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    auto poly = reduce_fa(m12.vertex(rng() % m12.size()), 3);
    CHECK(poly.degree() <= 2);
    for (const auto& [mono, c] : poly.terms()) {
      CHECK((mono & 1) == 0);
      CHECK(popcount_mask(mono) <= 2);
      CHECK(c > 0);
      CHECK(c < 3);
    }
  }
}

TEST_CASE("reduction rejects vertices outside M or of the wrong dimension") {
  auto m8 = build_M(8);
  CHECK_THROWS_AS(reduce_fa(m8.vertex(0), 3), std::invalid_argument);  // n != 4p
  CHECK_THROWS_AS(reduce_fa(SignVertex(8, VertexMask(1)), 2), std::invalid_argument);   // x_1 = -1
  CHECK_THROWS_AS(reduce_fa(SignVertex(8, VertexMask(2)), 2), std::invalid_argument);   // odd sign count
}

TEST_CASE("substitution identity, exhaustive at p = 2") {
  auto m8 = build_M(8);
  for (std::size_t i = 0; i < m8.size(); ++i) {
    auto poly = reduce_fa(m8.vertex(i), 2);
    for (std::size_t j = 0; j < m8.size(); ++j) {
      REQUIRE(poly.eval(m8.vertex(j)) == g_eval(dot(m8.vertex(i), m8.vertex(j)), 2));
    }
  }
}

TEST_CASE("substitution identity, sampled at p = 3") {
  auto m12 = build_M(12);
  std::mt19937_64 rng(31337);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t i = rng() % m12.size(), j = rng() % m12.size();
    auto poly = reduce_fa(m12.vertex(i), 3);
    REQUIRE(poly.eval(m12.vertex(j)) == g_eval(dot(m12.vertex(i), m12.vertex(j)), 3));
  }
}

TEST_CASE("substitution identity generalizes to p = 5") {
  auto m20 = build_M(20);
  REQUIRE(m20.size() == 262144);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t i = rng() % m20.size(), j = rng() % m20.size();
    auto poly = reduce_fa(m20.vertex(i), 5);
    CHECK(poly.degree() <= 4);
    REQUIRE(poly.eval(m20.vertex(j)) == g_eval(dot(m20.vertex(i), m20.vertex(j)), 5));
  }
}

TEST_CASE("the exclusion arithmetic behind nondivisibility, at every odd prime") {
  // Scalar products of distinct members of M are nonzero multiples of 4
  // with absolute value below n = 4p, so a multiple of p among them would
  // have to be +-p, +-2p or +-3p. For odd p none of those is divisible
  // by 4, which is the whole content of the scan at scales where the
  // 2^(n-2) x 2^(n-2) pair sweep is infeasible (the threshold prime 13
  // included). At p = 2 the value 2p = 4 slips through; that single
  // residue is the root of both red acceptance criteria.
  for (int p = 3; p <= 997; p += 2) {
    if (!is_prime(static_cast<std::uint64_t>(p))) continue;
    for (int k : {1, 2, 3}) {
      CHECK(k * p % 4 != 0);
      CHECK(k * p < 4 * p);
    }
  }
  CHECK(2 * 2 % 4 == 0);  // the p = 2 breakdown
}

TEST_CASE("nondivisibility scan") {
  CHECK(check_nondivisibility(build_M(12), 3));
  // At p = 2 the scan finds dot = +-4 pairs, which are even.
  CHECK_FALSE(check_nondivisibility(build_M(8), 2));
  CHECK_THROWS_AS(check_nondivisibility(build_M(8), 3), std::invalid_argument);

  // Orthogonal pairs are exempt by hypothesis: M(12) contains dot = 0
  // pairs (0 is divisible by 3) yet the scan holds.
  auto m12 = build_M(12);
  bool found_orthogonal = false;
  for (std::size_t j = 1; j < m12.size() && !found_orthogonal; ++j) {
    found_orthogonal = dot(m12.vertex(0), m12.vertex(j)) == 0;
  }
  CHECK(found_orthogonal);
}

TEST_CASE("gf_rank basics") {
  CHECK(gf_rank({}, 5) == 0);
  CHECK(gf_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 5) == 3);
  CHECK(gf_rank({{1, 1}, {1, 1}}, 2) == 1);
  CHECK(gf_rank({{2, 4}, {1, 2}}, 5) == 1);  // proportional rows
  CHECK(gf_rank({{0, 0}, {0, 0}}, 3) == 0);
}

TEST_CASE("the monomial basis itself has an identity coefficient matrix") {
  auto basis = monomial_basis(8, 1);
  std::vector<MultilinearPoly> polys;
  for (auto mono : basis) {
    polys.push_back(MultilinearPoly::from_terms(2, 8, {{mono, 1}}));
  }
  auto matrix = coefficient_matrix(polys, 8, 2);
  REQUIRE(matrix.size() == 8);
  for (std::size_t i = 0; i < 8; ++i) {
    for (std::size_t j = 0; j < 8; ++j) CHECK(matrix[i][j] == (i == j ? 1 : 0));
  }
  CHECK(gf_rank(matrix, 2) == 8);
}

TEST_CASE("from_terms validates its invariants") {
  CHECK_THROWS_AS(MultilinearPoly::from_terms(3, 12, {{MonomialMask(2), 3}}),
                  std::invalid_argument);  // zero coefficient mod 3
  CHECK_THROWS_AS(MultilinearPoly::from_terms(3, 12, {{MonomialMask(0b1110), 1}}),
                  std::invalid_argument);  // degree 3 > p-1
  CHECK_THROWS_AS(MultilinearPoly::from_terms(3, 12, {{MonomialMask(1), 1}}),
                  std::invalid_argument);  // variable x_1 does not exist
  auto poly = MultilinearPoly::from_terms(3, 12, {{MonomialMask(2), -1}});
  CHECK(poly.coeff(MonomialMask(2)) == 2);  // normalized residue
  // x_2 at a point with second coordinate -1 evaluates to -1 = 2 mod 3.
  CHECK(poly.eval(SignVertex(12, VertexMask(0b0110))) == 1);  // (-1)*2 = -2 = 1 mod 3
  CHECK(poly.eval(SignVertex(12, VertexMask(0))) == 2);
}

TEST_CASE("independence ranks at p = 3 equal the family size") {
  auto family = greedy_family(12);
  REQUIRE(family.size() == 16);

  for (std::size_t size : {std::size_t{1}, std::size_t{4}, std::size_t{8}, std::size_t{16}}) {
    std::vector<SignVertex> prefix(family.begin(), family.begin() + size);
    auto report = independence_rank(prefix, 3);
    CHECK(report.family_size == size);
    CHECK(report.coefficient_rank == size);
    CHECK(report.evaluation_rank == size);
    CHECK(report.independent);
    CHECK(dimension_bound_check(report.coefficient_rank, 12));
  }

  // The evaluation matrix is diagonal-nonzero / off-diagonal-zero mod 3.
  auto e = evaluation_matrix(family, 3);
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (i == j) {
        CHECK(e[i][j] != 0);
      } else {
        CHECK(e[i][j] == 0);
      }
    }
  }
}

TEST_CASE("rank collapse at modulus 2") {
  // All reduced polynomials coincide mod 2, so any family of two or more
  // has coefficient rank 1, and the evaluation matrix is all-ones.
  auto family = greedy_family(8);
  REQUIRE(family.size() == 4);
  auto report = independence_rank(family, 2);
  CHECK(report.family_size == 4);
  CHECK(report.coefficient_rank == 1);
  CHECK(report.evaluation_rank == 1);
  CHECK_FALSE(report.independent);

  auto e = evaluation_matrix(family, 2);
  for (const auto& row : e) {
    for (int v : row) CHECK(v == 1);
  }

  auto singleton = independence_rank(std::vector<SignVertex>{family[0]}, 2);
  CHECK(singleton.coefficient_rank == 1);
  CHECK(singleton.evaluation_rank == 1);
  CHECK(singleton.independent);
}

TEST_CASE("independence_rank rejects bad hypotheses") {
  auto m8 = build_M(8);
  // Masks 0 and 30 are orthogonal in dimension 8.
  std::vector<SignVertex> with_orthogonal{m8.vertex(0), SignVertex(8, VertexMask(30))};
  CHECK_THROWS_AS(independence_rank(with_orthogonal, 2), std::invalid_argument);

  // Diagnostic view of the violated hypothesis: the evaluation matrix
  // (computable on any family) picks up G(0) off the diagonal.
  auto e = evaluation_matrix(with_orthogonal, 2);
  CHECK(e[0][1] == g_eval(0, 2));
  CHECK(e[0][1] != 0);

  std::vector<SignVertex> with_duplicate{m8.vertex(1), m8.vertex(1)};
  CHECK_THROWS_AS(independence_rank(with_duplicate, 2), std::invalid_argument);

  std::vector<SignVertex> wrong_dim{m8.vertex(0)};
  CHECK_THROWS_AS(independence_rank(wrong_dim, 3), std::invalid_argument);
}

TEST_CASE("the cap alpha(12) = 67 is attained by an explicit family") {
  // A 67-member ortho-free family in M(12), found by the search tool and
  // frozen here; together with the full-rank report below it pins the
  // exact maximum at alpha(12).
  static const std::uint64_t witness[] = {
      0,    6,    10,   12,   18,   20,   30,   34,   36,   46,   54,   66,
      68,   78,   86,   102,  130,  132,  142,  150,  166,  198,  258,  260,
      270,  278,  294,  326,  390,  514,  516,  526,  534,  550,  582,  646,
      774,  1026, 1028, 1038, 1046, 1062, 1094, 1158, 1286, 1542, 2040, 2050,
      2052, 2062, 2070, 2086, 2118, 2182, 2310, 2566, 3064, 3078, 3576, 3832,
      3960, 4024, 4056, 4072, 4080, 4090, 4092};
  auto m12 = build_M(12);
  std::vector<SignVertex> family;
  for (auto mask : witness) {
    REQUIRE(m12.index_of(VertexMask(mask)) != VertexSetM::npos);
    family.emplace_back(12, VertexMask(mask));
  }
  REQUIRE(family.size() == 67);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      REQUIRE(dot(family[i], family[j]) != 0);

  auto report = independence_rank(family, 3);
  CHECK(report.coefficient_rank == 67);
  CHECK(report.evaluation_rank == 67);
  CHECK(report.independent);
  CHECK(dimension_bound_check(report.coefficient_rank, 12));
  CHECK(alpha(12) == 67);  // so no ortho-free family can be larger
  CHECK(rational_independence_rank(family, 3) == 67);  // characteristic-0 agreement
}

TEST_CASE("dimension bound check") {
  CHECK(dimension_bound_check(8, 8));
  CHECK_FALSE(dimension_bound_check(9, 8));
  CHECK(dimension_bound_check(67, 12));
  CHECK_FALSE(dimension_bound_check(68, 12));
}

TEST_CASE("integer reduction refines the modular one") {
  auto m12 = build_M(12);
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    SignVertex a = m12.vertex(rng() % m12.size());
    auto exact = reduce_fa_integer(a, 3);
    auto modular = reduce_fa(a, 3);
    // Reducing each exact coefficient mod 3 recovers the GF(3) polynomial.
    for (const auto& [mono, c] : exact) {
      BigInt residue = ((c % 3) + 3) % 3;
      CHECK(BigInt(modular.coeff(mono)) == residue);
    }
    for (const auto& [mono, c] : modular.terms()) {
      CHECK(exact.count(mono) == 1);
    }
    // On cube points the integer value is exactly (a.b - 1)(a.b - 2).
    for (int inner = 0; inner < 20; ++inner) {
      SignVertex b = m12.vertex(rng() % m12.size());
      BigInt d = dot(a, b);
      CHECK(eval_integer(exact, b) == (d - 1) * (d - 2));
    }
  }
}

TEST_CASE("rational rank basics") {
  CHECK(rational_rank({}) == 0);
  CHECK(rational_rank({{BigInt(1), BigInt(0)}, {BigInt(0), BigInt(1)}}) == 2);
  CHECK(rational_rank({{BigInt(2), BigInt(4)}, {BigInt(3), BigInt(6)}}) == 1);
  CHECK(rational_rank({{BigInt(0), BigInt(0)}}) == 0);
  // Rank 2 matrix whose mod-2 reduction has rank 1.
  CHECK(rational_rank({{BigInt(1), BigInt(1)}, {BigInt(1), BigInt(3)}}) == 2);
  CHECK(gf_rank({{1, 1}, {1, 3}}, 2) == 1);
}

TEST_CASE("rational independence at p = 3 matches the modular route") {
  auto family = greedy_family(12);
  REQUIRE(family.size() == 16);
  CHECK(rational_independence_rank(family, 3) == 16);

  std::vector<SignVertex> prefix(family.begin(), family.begin() + 8);
  CHECK(rational_independence_rank(prefix, 3) == 8);
}

TEST_CASE("characteristic 0 separates the two p = 2 collapses") {
  // The greedy 4-family loses nothing over the rationals even though its
  // mod-2 ranks collapse to 1.
  auto family = greedy_family(8);
  REQUIRE(family.size() == 4);
  CHECK(rational_independence_rank(family, 2) == 4);
  CHECK(independence_rank(family, 2).coefficient_rank == 1);

  // The maximum 8-family cannot be independent over any field: its
  // polynomials live in the 7-dimensional span of x_2..x_8.
  static const std::uint64_t witness[] = {0, 6, 10, 18, 34, 66, 130, 252};
  std::vector<SignVertex> max_family;
  for (auto mask : witness) max_family.emplace_back(8, VertexMask(mask));
  for (std::size_t i = 0; i < max_family.size(); ++i)
    for (std::size_t j = i + 1; j < max_family.size(); ++j)
      REQUIRE(dot(max_family[i], max_family[j]) != 0);
  CHECK(rational_independence_rank(max_family, 2) == 7);
}

TEST_CASE("rational route validates the same hypotheses") {
  auto m8 = build_M(8);
  std::vector<SignVertex> with_orthogonal{m8.vertex(0), SignVertex(8, VertexMask(30))};
  CHECK_THROWS_AS(rational_independence_rank(with_orthogonal, 2), std::invalid_argument);
  std::vector<SignVertex> dup{m8.vertex(1), m8.vertex(1)};
  CHECK_THROWS_AS(rational_independence_rank(dup, 2), std::invalid_argument);
  CHECK(rational_independence_rank(std::vector<SignVertex>{}, 2) == 0);
}

TEST_CASE("coefficient CSV dump") {
  auto family = greedy_family(8);
  std::ostringstream out;
  write_coefficient_csv(family, 2, out);
  std::istringstream in(out.str());
  std::string header, row0;
  std::getline(in, header);
  std::getline(in, row0);
  CHECK(header == "neg_mask,1,x2,x3,x4,x5,x6,x7,x8");
  CHECK(row0 == "0,0,1,1,1,1,1,1,1");
  int rows = 1;
  std::string line;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 4);
}
