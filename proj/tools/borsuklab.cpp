// Batch front end: every verification and search as a subcommand with
// machine-readable output. Exit codes: 0 all checks passed, 1 a
// verification failed (or a scan guardrail tripped), 2 usage error.

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "borsuk/bound_engine.hpp"
#include "borsuk/certificate.hpp"
#include "borsuk/fw_poly.hpp"
#include "borsuk/hypercube.hpp"
#include "borsuk/ortho_graph.hpp"
#include "borsuk/verify_suite.hpp"

namespace {

using borsuk::BigNat;
using borsuk::CheckResult;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string verify_report(int n, std::uint64_t seed,
                          const std::vector<CheckResult>& checks,
                          const std::string& format) {
  if (format == "json") {
    json j;
    j["subcommand"] = "verify";
    j["n"] = n;
    j["seed"] = seed;
    json arr = json::array();
    for (const auto& c : checks) {
      arr.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
    }
    j["checks"] = std::move(arr);
    j["all_pass"] = borsuk::all_pass(checks);
    return j.dump(2) + "\n";
  }
  std::ostringstream out;
  if (format == "markdown") {
    auto escape_cell = [](const std::string& s) {
      std::string r;
      for (char ch : s) {
        if (ch == '|') r += '\\';
        r += ch;
      }
      return r;
    };
    out << "# verify n=" << n << " seed=" << seed << "\n\n";
    out << "| check | result | detail |\n|-------|--------|--------|\n";
    for (const auto& c : checks) {
      out << "| " << c.name << " | " << (c.pass ? "pass" : "FAIL") << " | "
          << escape_cell(c.detail) << " |\n";
    }
    out << "\nall_pass: " << (borsuk::all_pass(checks) ? "true" : "false") << "\n";
  } else {  // csv
    out << "# verify n=" << n << " seed=" << seed << "\n";
    out << "check,result,detail\n";
    for (const auto& c : checks) {
      out << c.name << ',' << (c.pass ? "pass" : "FAIL") << ',' << c.detail << '\n';
    }
  }
  return out.str();
}

int cmd_verify(int n, std::uint64_t seed, const std::string& format,
               const std::string& out_path) {
  if (n % 4 != 0 || n < 4 || n > 12) {
    throw UsageError("verify requires n in {4, 8, 12} (exhaustive pair scans)");
  }
  auto checks = borsuk::run_verify_suite(n, seed);
  write_output(out_path, verify_report(n, seed, checks, format));
  for (const auto& c : checks) {
    std::cerr << (c.pass ? "pass " : "FAIL ") << c.name << "\n";
  }
  return borsuk::all_pass(checks) ? kExitOk : kExitVerificationFailed;
}

int cmd_lemma(int p, int budget_secs, const std::string& out_path,
              const std::string& matrix_csv_path) {
  if (budget_secs <= 0) throw UsageError("lemma requires a positive --budget-secs");
  if (p != 2 && p != 3) {
    throw UsageError(
        "lemma supports p in {2, 3}: the orthogonality graph on 2^(4p-2) vertices is only "
        "materialized at desk scale");
  }
  int n = 4 * p;
  auto m = borsuk::build_M(n);
  auto graph = borsuk::build_graph(m);
  auto cert = borsuk::max_ortho_free(graph, std::chrono::seconds(budget_secs));

  std::vector<borsuk::SignVertex> family;
  family.reserve(cert.subset.size());
  for (auto mask : cert.subset) family.emplace_back(n, mask);
  auto ranks = borsuk::independence_rank(family, p);
  std::size_t rational = borsuk::rational_independence_rank(family, p);

  BigNat cap = borsuk::alpha(n);
  bool bound_ok = !cert.exhaustive || cert.value <= cap;

  std::cout << "max ortho-free search: n=" << n << " p=" << p << " value=" << cert.value
            << " exhaustive=" << (cert.exhaustive ? "yes" : "no") << "\n";
  std::cout << "independence ranks: family=" << ranks.family_size
            << " coefficient=" << ranks.coefficient_rank
            << " evaluation=" << ranks.evaluation_rank << " rational=" << rational
            << " independent=" << (ranks.independent ? "yes" : "no") << "\n";
  if (cert.exhaustive) {
    std::cout << "cap check: value " << cert.value << " <= alpha(" << n << ") = " << cap
              << ": " << (bound_ok ? "ok" : "VIOLATED") << "\n";
  } else if (cert.value == cap && borsuk::check_nondivisibility(m, p)) {
    // Every ortho-free family has a diagonal evaluation matrix here, so
    // none can exceed alpha(n): the found value is the exact maximum even
    // though the search tree was not exhausted.
    std::cout << "cap attained: value equals alpha(" << n << ") = " << cap
              << " and the nondivisibility scan holds, so this is the exact maximum\n";
  }

  write_output(out_path, borsuk::certificate_to_json(cert));
  if (!matrix_csv_path.empty()) {
    std::ostringstream csv;
    borsuk::write_coefficient_csv(family, p, csv);
    write_output(matrix_csv_path, csv.str());
  }
  return bound_ok ? kExitOk : kExitVerificationFailed;
}

int cmd_bound(const std::string& format, const std::string& out_path) {
  std::vector<borsuk::ThresholdReport> scan;
  try {
    scan = borsuk::threshold_scan();
    borsuk::find_min_counterexample();  // includes the decimal double-entry pass
  } catch (const std::runtime_error& e) {
    std::cerr << "bound: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  const auto& final_report = scan.back();

  std::string content;
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : scan) arr.push_back(json::parse(borsuk::report_to_json(r)));
    content = arr.dump(2) + "\n";
  } else if (format == "csv") {
    std::ostringstream out;
    out << "p,n,alpha_n,m_size,parts_needed,borsuk_bound,counterexample\n";
    for (const auto& r : scan) {
      out << r.p << ',' << r.n << ',' << r.alpha_n.str() << ',' << r.m_size.str() << ','
          << r.parts_needed.str() << ',' << r.borsuk_bound.str() << ','
          << (r.counterexample ? "true" : "false") << '\n';
    }
    content = out.str();
  } else {
    content = borsuk::scan_to_markdown(scan);
    std::ostringstream tail;
    tail << "\nfirst counterexample: p = " << final_report.p << ", n = " << final_report.n
         << ", dimension n^2 = " << final_report.dimension << " (a bounded figure there needs "
         << final_report.parts_needed.str() << " > " << final_report.borsuk_bound.str()
         << " smaller-diameter parts); symmetric refinement would give dimension "
         << final_report.symmetric_dimension << "\n";
    content += tail.str();
  }
  write_output(out_path, content);
  return kExitOk;
}

int cmd_embed(int n, const std::string& out_path) {
  if (n % 4 != 0 || n < 4 || n > 12) {
    throw UsageError("embed requires n in {4, 8, 12} (exhaustive pair scan)");
  }
  auto m = borsuk::build_M(n);
  std::map<int, std::uint64_t> histogram;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      ++histogram[borsuk::quad_dist_sq(m.vertex(i), m.vertex(j))];
    }
  }
  std::ostringstream out;
  out << "quad_dist_sq,pair_count\n";
  for (const auto& [key, count] : histogram) out << key << ',' << count << '\n';
  write_output(out_path, out.str());
  return kExitOk;
}

int cmd_recheck(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open certificate file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    auto cert = borsuk::certificate_from_json(buffer.str());
    borsuk::recheck_certificate(cert);
    std::cout << "certificate OK: claim=" << borsuk::claim_name(cert.claim)
              << " n=" << cert.n << " value=" << cert.value.str()
              << " exhaustive=" << (cert.exhaustive ? "yes" : "no") << "\n";
    return kExitOk;
  } catch (const borsuk::CertificateError& e) {
    std::cout << "certificate REJECTED: " << e.what() << "\n";
    return kExitVerificationFailed;
  } catch (const json::exception& e) {
    std::cout << "certificate REJECTED: malformed JSON (" << e.what() << ")\n";
    return kExitVerificationFailed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for the hypercube counterexample to the bounded-figure partition conjecture"};
  app.require_subcommand(1);

  int n = 0, p = 0, budget_secs = 60;
  std::uint64_t seed = 12345;
  std::string format = "json", out_path, matrix_csv_path, cert_path;

  auto* verify = app.add_subcommand("verify", "run the exhaustive identity suite for one dimension");
  verify->add_option("--n", n, "dimension (multiple of 4, at most 12)")->required();
  verify->add_option("--seed", seed, "seed for sampled property checks");
  verify->add_option("--format", format, "json|markdown|csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}));
  verify->add_option("--out", out_path, "report file (stdout when omitted)");

  auto* lemma = app.add_subcommand("lemma", "exact maximum ortho-free subset search plus rank report");
  lemma->add_option("--p", p, "prime modulus (2 or 3)")->required();
  lemma->add_option("--budget-secs", budget_secs, "search time budget in seconds");
  lemma->add_option("--out", out_path, "certificate file (stdout when omitted)");
  lemma->add_option("--matrix-csv", matrix_csv_path, "also dump the family's coefficient matrix");

  auto* bound = app.add_subcommand("bound", "ascending exact threshold scan for the first counterexample prime");
  bound->add_option("--format", format, "json|markdown|csv")
      ->check(CLI::IsMember({"json", "markdown", "csv"}));
  bound->add_option("--out", out_path, "table file (stdout when omitted)");
  bound->parse_complete_callback([&] {
    if (bound->count("--format") == 0) format = "markdown";  // table is the natural default
  });

  auto* embed = app.add_subcommand("embed", "CSV histogram of squared embedded distances over M");
  embed->add_option("--n", n, "dimension (multiple of 4, at most 12)")->required();
  embed->add_option("--out", out_path, "histogram file (stdout when omitted)");

  auto* recheck = app.add_subcommand("recheck-certificate", "re-verify an emitted certificate from scratch");
  recheck->add_option("certificate", cert_path, "certificate JSON file")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (verify->parsed()) return cmd_verify(n, seed, format, out_path);
    if (lemma->parsed()) return cmd_lemma(p, budget_secs, out_path, matrix_csv_path);
    if (bound->parsed()) return cmd_bound(format, out_path);
    if (embed->parsed()) return cmd_embed(n, out_path);
    if (recheck->parsed()) return cmd_recheck(cert_path);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}
