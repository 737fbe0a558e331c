// Acceptance suite: every criterion below runs at its stated grid and
// tolerance (exact equality throughout) and prints one pass/fail line.

#include "balident/identities.hpp"
#include "balident/sequences.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace balident;

namespace {

std::string g_cli;
int g_failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (ok && budget_seconds > 0 && elapsed >= budget_seconds) {
    ok = false;
    detail = "exceeded the " + std::to_string(budget_seconds) + " s budget";
  }
  std::printf("[%s] criterion %d: %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", number, what.c_str(),
              elapsed, detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok)
    ++g_failures;
}

bool all_pass(const std::vector<VerificationResult>& results, std::string& detail,
              std::size_t expected_min = 1) {
  std::size_t failed = 0;
  for (const VerificationResult& r : results)
    if (!r.pass)
      ++failed;
  if (results.size() < expected_min) {
    detail = "only " + std::to_string(results.size()) + " cases ran";
    return false;
  }
  if (failed > 0) {
    for (const VerificationResult& r : results)
      if (!r.pass) {
        detail = std::to_string(failed) + " failed; first: " + r.id;
        break;
      }
    return false;
  }
  detail = std::to_string(results.size()) + " cases";
  return true;
}

std::vector<VerificationResult> run_ids(const std::vector<std::string>& ids,
                                        const GridLimits& limits, std::size_t order,
                                        std::optional<Mode> mode = std::nullopt) {
  return run_cases(enumerate_cases(ids, limits, order, mode), 0, order);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

} // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg.rfind("--cli=", 0) == 0)
      g_cli = arg.substr(6);
  }

  // 1. EGF-built coefficients equal recurrence-built polynomials, n <= 25.
  criterion(1, "Lemma 1 generating functions match the recurrences for n <= 25", 10.0,
            [](std::string& detail) {
              GridLimits limits;
              limits.n_max = 25;
              auto results = run_ids({"lemma1-b1", "lemma1-b2", "lemma1-c1", "lemma1-c2"}, limits,
                                     25);
              return all_pass(results, detail, 4 * 26);
            });

  // 2. Theorems 1-4 in both modes, with per-coefficient mode agreement.
  criterion(2, "Theorems 1-4 pass directly for n <= 30 and as series at order 25", 60.0,
            [](std::string& detail) {
              const std::vector<std::string> ids = {"thm1", "thm2", "thm3", "thm4-a", "thm4-b"};
              GridLimits limits;
              limits.n_max = 30;
              auto direct = run_ids(ids, limits, 25, Mode::Direct);
              auto series = run_ids(ids, limits, 25, Mode::Series);
              if (!all_pass(direct, detail, 5 * 31) || !all_pass(series, detail, 5 * 26))
                return false;
              // both modes agree wherever both ran
              for (const auto& s : series) {
                bool matched = false;
                for (const auto& d : direct)
                  if (d.id == s.id && d.params == s.params) {
                    matched = true;
                    if (d.pass != s.pass) {
                      detail = "mode disagreement at " + s.id;
                      return false;
                    }
                  }
                if (!matched) {
                  detail = "series case without direct counterpart";
                  return false;
                }
              }
              detail = std::to_string(direct.size() + series.size()) + " cases, modes agree";
              return true;
            });

  // 3. Theorem 5 as a polynomial identity over Q(sqrt5), both signs.
  criterion(3, "Theorem 5 passes for n <= 30, j <= 6, both signs", 60.0,
            [](std::string& detail) {
              GridLimits limits;
              limits.n_max = 30;
              limits.j_max = 6;
              auto results = run_ids({"thm5-a", "thm5-b"}, limits, 25);
              return all_pass(results, detail, 2 * 31 * 6);
            });

  // 4. Every corollary and remark display on the stated grids.
  criterion(4, "corollaries and remark displays pass on n<=30, j<=6, m<=4, q<=5, N<=15", 120.0,
            [](std::string& detail) {
              const std::vector<std::string> ids = {
                  "cor1",        "cor2",        "eq1-mod",    "cor3",       "id-30",
                  "rem-cor3-a",  "rem-cor3-b",  "rem-cor3-c", "rem-thm3-a", "rem-thm3-b",
                  "cor4",        "cor4-proof-even", "cor4-proof-odd", "cor4-j1", "cor4-j2",
                  "cor5-a",      "cor5-b",      "thm5-x0-a",  "thm5-x0-b",  "thm5-comb",
                  "cor6",        "cor6-j3",     "cor7",       "cor7-q3",    "cor8-a",
                  "cor8-b",      "cor9-a",      "cor9-b"};
              auto results = run_ids(ids, GridLimits{}, 25);
              return all_pass(results, detail, 10000);
            });

  // 5. The two starting identities differ by exactly -n s B*_(n-1)(x).
  criterion(5, "Goubi equivalence: LHS(4) - LHS(3) = -n s B*_(n-1)(x) for n <= 30", 30.0,
            [](std::string& detail) {
              GridLimits limits;
              limits.n_max = 30;
              auto results = run_ids({"eq-fro1", "eq-gou1", "gou-equiv"}, limits, 25);
              return all_pass(results, detail, 3 * 31);
            });

  // 6. Link evaluations, including the i^(n-1)/i^n phases.
  criterion(6, "links hold: rational points for m <= 4, Gaussian points for m <= 3, n <= 12",
            30.0, [](std::string& detail) {
              auto results =
                  run_ids({"link1-a", "link1-b", "link2-a", "link2-b"}, GridLimits{}, 25);
              return all_pass(results, detail, 2 * 13 * 5 + 2 * 13 * 4);
            });

  // 7. Catalogued sequence prefixes.
  criterion(7, "balancing, Lucas-balancing, Fibonacci and Lucas prefixes for n <= 10", 10.0,
            [](std::string& detail) {
              SequenceCache c;
              const long long b[] = {0, 1, 6, 35, 204, 1189, 6930, 40391, 235416, 1372105,
                                     7997214};
              const long long cb[] = {1, 3, 17, 99, 577, 3363, 19601, 114243, 665857, 3880899,
                                      22619537};
              const long long f[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55};
              const long long l[] = {2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123};
              for (std::size_t n = 0; n <= 10; ++n) {
                if (c.balancing_poly(n).eval(Rational(1)) != Rational(b[n]) ||
                    c.lucas_balancing_poly(n).eval(Rational(1)) != Rational(cb[n]) ||
                    c.fibonacci(n) != BigInt(f[n]) || c.lucas(n) != BigInt(l[n])) {
                  detail = "mismatch at n=" + std::to_string(n);
                  return false;
                }
              }
              detail = "44 values";
              return true;
            });

  // 8. The suite is not vacuous: a corrupted B_2 must break Theorems 1-4.
  criterion(8, "corrupting B_2 from 1/6 to 7/6 fails at least one of Theorems 1-4 at n <= 10",
            30.0, [](std::string& detail) {
              VerifyContext ctx(10);
              ctx.cache().override_bernoulli(2, Rational(7, 6));
              std::size_t failures = 0;
              for (const char* id : {"thm1", "thm2", "thm3", "thm4-a", "thm4-b"})
                for (long long n = 0; n <= 10; ++n) {
                  Params p;
                  p["n"] = n;
                  if (!verify(id, p, ctx).pass)
                    ++failures;
                }
              if (failures == 0) {
                detail = "no identity noticed the corruption";
                return false;
              }
              detail = std::to_string(failures) + " cases failed as they should";
              return true;
            });

  // 9. Byte-identical reports across two full runs.
  criterion(9, "two full verify runs produce byte-identical JSON reports", 0.0,
            [](std::string& detail) {
              if (g_cli.empty()) {
                detail = "missing --cli=<path>";
                return false;
              }
              const std::string f1 = "/tmp/balident_acceptance_r1.json";
              const std::string f2 = "/tmp/balident_acceptance_r2.json";
              const std::string base = "'" + g_cli +
                                       "' verify --all --no-timestamp --format json --output ";
              int rc1 = std::system((base + f1 + " >/dev/null 2>&1").c_str());
              int rc2 = std::system((base + f2 + " >/dev/null 2>&1").c_str());
              if (rc1 != 0 || rc2 != 0) {
                detail = "verify --all exited nonzero";
                return false;
              }
              std::string r1 = read_file(f1);
              std::string r2 = read_file(f2);
              std::remove(f1.c_str());
              std::remove(f2.c_str());
              if (r1.empty() || r1 != r2) {
                detail = "reports differ or are empty";
                return false;
              }
              detail = std::to_string(r1.size()) + " bytes, identical";
              return true;
            });

  if (g_failures == 0) {
    std::printf("all 9 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", g_failures);
  return 1;
}
