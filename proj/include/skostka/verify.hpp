#ifndef SKOSTKA_VERIFY_HPP
#define SKOSTKA_VERIFY_HPP

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "skostka/kostka_matrix.hpp"
#include "skostka/lambda_engine.hpp"
#include "skostka/modrep/engine.hpp"

namespace skostka::verify {

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

class Report {
 public:
  void add(std::string name, bool pass, std::string detail = {});
  void merge(const Report& other);
  bool ok() const;
  std::size_t failures() const;
  const std::vector<Check>& checks() const { return checks_; }
  std::string text() const;

 private:
  std::vector<Check> checks_;
};

// Engines shared across suites so that every decomposition runs once per prime.
class Workbench {
 public:
  explicit Workbench(std::uint64_t seed = 0) : seed_(seed) {}
  modrep::DirectEngine& direct(int p);
  lambda::ReductionEngine& reduction(int p);
  // Plain or signed matrix from the direct engine, memoized.
  const KostkaMatrix& direct_matrix(int n, int p, bool is_signed);

 private:
  std::uint64_t seed_;
  std::map<int, std::unique_ptr<modrep::DirectEngine>> direct_;
  std::map<int, std::unique_ptr<lambda::ReductionEngine>> reduction_;
  std::map<std::tuple<int, int, bool>, KostkaMatrix> matrices_;
};

// Direct matrix against the shipped CSV, and the plain matrix against its top-left block.
Report suite_fixtures(Workbench& wb, int n, int p, const std::filesystem::path& fixture_dir);
// Reduction engine against the direct engine on every label pair, plus the sum over all of Lambda.
Report suite_reduction(Workbench& wb, int n, int p);
// Unitriangularity and diagonal blocks as Kronecker products of smaller plain matrices.
Report suite_blocks(Workbench& wb, int n, int p);
// Product formula, its factorized forms, the Mullineux twist and the principal part.
Report suite_formulas(Workbench& wb, int n, int p);
Report suite_vanishing(Workbench& wb, int n, int p);
Report suite_rowcut(Workbench& wb, int n, int p);
// Combinatorial against module-level isomorphism up to mod_n; characters up to char_n.
Report suite_iso(Workbench& wb, int mod_n, int p, int char_n);
Report suite_tableaux(int n);
// Exhaustive combinatorics and Lambda-set properties at their stated sizes.
Report suite_properties();

// (lam|p mu) -> (M(lam(0)) + p mu | lam - lam(0)): the label of the sign twist.
PairP2p sign_twist_label(const PairP2p& x);

}  // namespace skostka::verify

#endif
