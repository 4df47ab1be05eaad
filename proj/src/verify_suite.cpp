#include "borsuk/verify_suite.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

#include "borsuk/fw_poly.hpp"
#include "borsuk/hypercube.hpp"

namespace borsuk {

namespace {

std::string pair_label(VertexMask a, VertexMask b) {
  return "masks " + mask_to_string(a) + " and " + mask_to_string(b);
}

int brute_force_dist_sq(const SignVertex& x, const SignVertex& y) {
  int sum = 0;
  for (int i = 1; i <= x.dim(); ++i) {
    int d = x.coord(i) - y.coord(i);
    sum += d * d;
  }
  return sum;
}

struct SuiteBuilder {
  int n;
  std::uint64_t seed;
  VertexSetM m;
  std::vector<CheckResult> results;

  void add(const std::string& name, bool pass, const std::string& detail) {
    results.push_back({name, pass, detail});
  }

  // dist_sq against the coordinate-sum definition and against 2n - 2 x.y,
  // over the whole cube for n <= 8, over M beyond.
  void metric_checks() {
    bool coord_ok = true, dot_ok = true;
    std::size_t pairs = 0;
    std::string witness;
    auto scan_pair = [&](const SignVertex& x, const SignVertex& y) {
      ++pairs;
      int ds = dist_sq(x, y);
      if (ds != brute_force_dist_sq(x, y)) {
        if (coord_ok) witness = pair_label(x.neg_mask(), y.neg_mask());
        coord_ok = false;
      }
      if (ds != 2 * n - 2 * dot(x, y)) dot_ok = false;
    };
    if (n <= 8) {
      std::uint32_t total = std::uint32_t{1} << n;
      for (std::uint32_t a = 0; a < total; ++a)
        for (std::uint32_t b = a; b < total; ++b)
          scan_pair(SignVertex(n, a), SignVertex(n, b));
    } else {
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = i; j < m.size(); ++j)
          scan_pair(m.vertex(i), m.vertex(j));
    }
    std::string domain = n <= 8 ? "full cube" : "M";
    add("dist_sq_coordinate_sum", coord_ok,
        coord_ok ? std::to_string(pairs) + " pairs over " + domain
                 : "first mismatch at " + witness);
    add("dist_sq_dot_identity", dot_ok, std::to_string(pairs) + " pairs over " + domain);
  }

  void embedding_checks() {
    bool diag_ok = true, sym_ok = true, even_ok = true;
    for (std::size_t i = 0; i < m.size(); ++i) {
      SignVertex x = m.vertex(i);
      QuadVertex fx = embed_f(x);
      for (int r = 1; r <= n && diag_ok; ++r)
        if (fx.entry(r, r) != 1) diag_ok = false;
      for (int r = 1; r <= n && sym_ok; ++r)
        for (int c = r + 1; c <= n; ++c)
          if (fx.entry(r, c) != fx.entry(c, r)) {
            sym_ok = false;
            break;
          }
      if (embed_f(x.negated()) != fx) even_ok = false;
    }
    add("embed_unit_diagonal", diag_ok, std::to_string(m.size()) + " tables");
    add("embed_symmetric", sym_ok, std::to_string(m.size()) + " tables");
    add("embed_even_map", even_ok, "f(-x) = f(x) for all members");

    // Injectivity on M through the materialized tables themselves.
    std::vector<std::vector<std::int8_t>> flats;
    flats.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) flats.push_back(embed_f(m.vertex(i)).flat());
    std::sort(flats.begin(), flats.end());
    bool injective = std::adjacent_find(flats.begin(), flats.end()) == flats.end();
    add("embed_injective_on_M", injective, std::to_string(m.size()) + " tables pairwise distinct");
  }

  void quadratic_metric_checks() {
    std::vector<QuadVertex> tables;
    tables.reserve(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) tables.push_back(embed_f(m.vertex(i)));

    bool qdot_ok = true, qdist_ok = true, diam_ok = true;
    int max_seen = 0;
    const int diameter_sq = 2 * n * n;
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i; j < m.size(); ++j) {
        SignVertex x = m.vertex(i), y = m.vertex(j);
        int d = dot(x, y);
        long long table_dot = 0, table_dist = 0;
        const auto& fx = tables[i].flat();
        const auto& fy = tables[j].flat();
        for (std::size_t k = 0; k < fx.size(); ++k) {
          table_dot += static_cast<long long>(fx[k]) * fy[k];
          int diff = fx[k] - fy[k];
          table_dist += static_cast<long long>(diff) * diff;
        }
        int qd = quad_dot(x, y);
        int qs = quad_dist_sq(x, y);
        if (qd != d * d || qd != table_dot) qdot_ok = false;
        if (qs != table_dist || qs != 2 * n * n - 2 * d * d) qdist_ok = false;
        max_seen = std::max(max_seen, qs);
        if ((qs == diameter_sq) != (d == 0)) diam_ok = false;
      }
    }
    add("quad_dot_square_identity", qdot_ok, "fx.fy = (x.y)^2 over all pairs in M");
    add("quad_dist_identity", qdist_ok,
        "squared embedded distance = 2n^2 - 2(x.y)^2 over all pairs in M");
    bool attained = max_seen == diameter_sq;
    add("quad_diameter_attained", attained && diam_ok,
        "max squared embedded distance = " + std::to_string(max_seen) +
            "; equals 2n^2 exactly at orthogonal pairs");
  }

  void counting_checks() {
    add("m_cardinality", BigNat(m.size()) == pow2(static_cast<unsigned>(n - 2)),
        "|M| = " + std::to_string(m.size()));

    bool mod4_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < m.size() && mod4_ok; ++i) {
      for (std::size_t j = i; j < m.size(); ++j) {
        int d = dot(m.vertex(i), m.vertex(j));
        if (((d % 4) + 4) % 4 != 0) {
          mod4_ok = false;
          witness = pair_label(m.members()[i], m.members()[j]);
          break;
        }
      }
    }
    add("pairwise_dot_mod4", mod4_ok,
        mod4_ok ? "every scalar product in M is divisible by 4" : "violation at " + witness);

    BigNat a = alpha(n);
    BigNat pascal = 0;
    for (int k = 0; k < n / 4; ++k)
      pascal += binomial_pascal(static_cast<unsigned>(n - 1), static_cast<unsigned>(k));
    std::size_t enumerated = monomial_basis(n, n / 4 - 1).size();
    bool alpha_ok = a == pascal && a == BigNat(enumerated);
    add("alpha_monomial_count", alpha_ok,
        "alpha(" + std::to_string(n) + ") = " + a.str() + " by two binomial routes and enumeration");
  }

  void polynomial_checks() {
    int p = n / 4;
    bool window_ok = true;
    for (long long t = 0; t <= 6LL * p; ++t) {
      if ((g_eval(t, p) == 0) != (t % p != 0)) window_ok = false;
    }
    add("g_vanishing_window", window_ok,
        "G(t) = 0 mod " + std::to_string(p) + " iff t not divisible by " + std::to_string(p));

    add("g_self_product_nonzero", g_eval(n, p) != 0,
        "G(" + std::to_string(n) + ") mod " + std::to_string(p) + " = " +
            std::to_string(g_eval(n, p)));

    bool nondiv = check_nondivisibility(m, p);
    std::string detail;
    if (nondiv) {
      detail = "no distinct non-orthogonal pair has a.b divisible by " + std::to_string(p);
    } else {
      for (std::size_t i = 0; i < m.size() && detail.empty(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
          int d = dot(m.vertex(i), m.vertex(j));
          if (d != 0 && d % p == 0) {
            detail = "violation at " + pair_label(m.members()[i], m.members()[j]) +
                     " with a.b = " + std::to_string(d);
            break;
          }
        }
      }
    }
    add("nondivisibility", nondiv, detail);

    bool subst_ok = true;
    std::size_t checked = 0;
    std::string witness;
    auto check_pair = [&](std::size_t i, std::size_t j) {
      SignVertex a = m.vertex(i), b = m.vertex(j);
      ++checked;
      if (reduce_fa(a, p).eval(b) != g_eval(dot(a, b), p)) {
        if (subst_ok) witness = pair_label(m.members()[i], m.members()[j]);
        subst_ok = false;
      }
    };
    if (p == 2) {
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) check_pair(i, j);
    } else {
      std::mt19937_64 rng(seed);
      std::map<std::size_t, MultilinearPoly> cache;
      for (int trial = 0; trial < 1000; ++trial) {
        std::size_t i = rng() % m.size();
        std::size_t j = rng() % m.size();
        auto it = cache.find(i);
        if (it == cache.end()) it = cache.emplace(i, reduce_fa(m.vertex(i), p)).first;
        ++checked;
        if (it->second.eval(m.vertex(j)) != g_eval(dot(m.vertex(i), m.vertex(j)), p)) {
          if (subst_ok) witness = pair_label(m.members()[i], m.members()[j]);
          subst_ok = false;
        }
      }
    }
    add("substitution_identity", subst_ok,
        subst_ok ? std::to_string(checked) + " pairs: F~a(b) = G(a.b) mod " + std::to_string(p)
                 : "first mismatch at " + witness);
  }
};

}  // namespace

std::vector<CheckResult> run_verify_suite(int n, std::uint64_t seed) {
  if (n < 4 || n % 4 != 0 || n > 12) {
    throw std::invalid_argument(
        "verify suite runs exhaustive pair scans; n must be 4, 8 or 12");
  }
  SuiteBuilder builder{n, seed, build_M(n), {}};
  builder.metric_checks();
  builder.embedding_checks();
  builder.quadratic_metric_checks();
  builder.counting_checks();
  if (is_prime(static_cast<std::uint64_t>(n / 4))) builder.polynomial_checks();
  return builder.results;
}

}  // namespace borsuk
