// One PASS/FAIL line per acceptance criterion; exit status is nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "skostka/lambda_engine.hpp"
#include "skostka/verify.hpp"

using namespace skostka;
using verify::Report;

namespace {

int failures = 0;

void criterion(int id, const std::string& title, const std::function<Report()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    r = run();
  } catch (const std::exception& e) {
    r.add("exception", false, e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!r.ok()) {
    ++failures;
    std::fputs(r.text().c_str(), stdout);
  }
  std::printf("criterion %2d %s: %s (%zu checks, %.1f s)\n", id, r.ok() ? "PASS" : "FAIL", title.c_str(),
              r.checks().size(), secs);
  std::fflush(stdout);
}

}  // namespace

int main() {
  verify::Workbench wb(0);
  criterion(1, "signed matrix n=6 p=3 equals fixture",
            [&] { return verify::suite_fixtures(wb, 6, 3, SKOSTKA_FIXTURE_DIR); });
  criterion(2, "reduction engine equals direct engine, n=6 p=3", [&] { return verify::suite_reduction(wb, 6, 3); });
  criterion(3, "worked example k = 9 with three support tuples", [&] {
    Report r;
    const BiComposition ab = make_pair(Partition{1, 1, 1}, Partition{6, 3, 3});
    const PairP2p x(Partition{2, 2, 1, 1}, Partition{2, 1}, 3);
    const long k = wb.reduction(3).signed_kostka(ab, x);
    r.add("reduction k = 9", k == 9, std::to_string(k));
    const auto supp = lambda::enumerate_lambda_supp(ab, x);
    r.add("support set has 3 elements", supp.size() == 3, std::to_string(supp.size()));
    return r;
  });
  criterion(4, "block structure n=6 p=3", [&] { return verify::suite_blocks(wb, 6, 3); });
  criterion(5, "product and factor formulas n=6 p=3", [&] { return verify::suite_formulas(wb, 6, 3); });
  criterion(6, "vanishing n=6 p=3", [&] { return verify::suite_vanishing(wb, 6, 3); });
  criterion(7, "row-cut inequality n=6 p=3", [&] { return verify::suite_rowcut(wb, 6, 3); });
  criterion(8, "isomorphism classification", [&] { return verify::suite_iso(wb, 5, 3, 8); });
  criterion(9, "tableau oracles n<=8", [] { return verify::suite_tableaux(8); });
  criterion(10, "second prime n=6 p=5", [&] {
    Report r = verify::suite_blocks(wb, 6, 5);
    r.merge(verify::suite_reduction(wb, 6, 5));
    return r;
  });
  criterion(11, "combinatorics properties", [] { return verify::suite_properties(); });
  std::printf("%s: %d of 11 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
