// Command-line front end: matrices, single entries, decompositions, tableaux, isomorphism and checks.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "skostka/kostka_matrix.hpp"
#include "skostka/lambda_engine.hpp"
#include "skostka/modrep/engine.hpp"
#include "skostka/tableaux.hpp"
#include "skostka/verify.hpp"

using namespace skostka;

namespace {

constexpr int kOk = 0, kUsage = 1, kDisagree = 2, kCap = 3;

struct Global {
  std::string cache_dir;
  std::uint64_t seed = 0;
  bool allow_large = false;
  bool no_cache = false;
};

modrep::EngineOptions engine_options(const Global& g) {
  modrep::EngineOptions o;
  o.seed = g.seed;
  o.allow_large = g.allow_large;
  return o;
}

BiComposition parse_module_pair(const std::string& alpha, const std::string& beta) {
  return make_pair(wp(parse_composition(alpha)), wp(parse_composition(beta)));
}

// Partition labels must be given weakly decreasing.
Partition parse_exact_partition(const std::string& text) {
  Composition c = parse_composition(text);
  if (!(wp(c).composition() == c)) throw std::invalid_argument("not a partition: " + text);
  return wp(c);
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::trunc);
  if (!f) throw std::invalid_argument("cannot write " + out);
  f << text;
}

struct MatrixArgs {
  int n = 6, p = 3;
  bool plain = false;
  std::string format = "csv", out, engine = "direct";
};

// Reports the first differing entry, or nothing when the matrices agree.
std::optional<std::string> first_difference(const KostkaMatrix& a, const KostkaMatrix& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (a.matrix[i][j] != b.matrix[i][j])
        return "row " + a.labels[i] + ", column " + a.labels[j] + ": direct " + std::to_string(a.matrix[i][j]) +
               ", reduction " + std::to_string(b.matrix[i][j]);
  return std::nullopt;
}

int cmd_matrix(const Global& g, const MatrixArgs& a) {
  require_odd_prime(a.p);
  if (a.n < 0) throw std::invalid_argument("n must be nonnegative");
  const bool is_signed = !a.plain;
  MatrixCache cache(MatrixCache::resolve_dir(g.cache_dir.empty() ? std::nullopt : std::optional(g.cache_dir)));
  std::optional<KostkaMatrix> k;
  std::string engine = a.engine;
  if (!g.no_cache && a.engine != "both")
    if (auto hit = cache.load(a.n, a.p, is_signed)) k = hit->matrix;
  if (!k) {
    modrep::DirectEngine direct(a.p, engine_options(g));
    if (a.engine == "direct" || a.engine == "both") k = assemble_matrix(a.n, a.p, is_signed, direct);
    if (a.engine == "reduction" || a.engine == "both") {
      lambda::ReductionEngine red(direct);
      KostkaMatrix r = assemble_matrix(a.n, a.p, is_signed, red);
      if (k) {
        if (auto diff = first_difference(*k, r)) {
          std::cerr << "engines disagree at " << *diff << '\n';
          return kDisagree;
        }
      }
      k = std::move(r);
    }
    if (!g.no_cache)
      cache.store(*k, engine == "reduction" ? Engine::reduction : Engine::direct, g.seed);
  }
  const Engine e = engine == "reduction" ? Engine::reduction : Engine::direct;
  emit(a.format == "json" ? to_json(*k, e, g.seed) + "\n" : to_csv(*k), a.out);
  return kOk;
}

struct EntryArgs {
  int p = 3;
  std::string alpha = "-", beta = "-", lambda = "-", mu = "-", method = "reduction";
};

int cmd_entry(const Global& g, const EntryArgs& a) {
  const BiComposition ab = parse_module_pair(a.alpha, a.beta);
  const PairP2p x(parse_exact_partition(a.lambda), parse_exact_partition(a.mu), a.p);
  if (ab.size() != x.size()) throw std::invalid_argument("sizes differ");
  modrep::DirectEngine direct(a.p, engine_options(g));
  lambda::ReductionEngine red(direct);
  if (a.method == "direct") {
    std::cout << direct.multiplicity(ab, x) << '\n';
  } else if (a.method == "reduction") {
    std::cout << red.signed_kostka(ab, x) << '\n';
  } else {
    const long kd = direct.multiplicity(ab, x), kr = red.signed_kostka(ab, x);
    std::cout << kr << '\n' << (kd == kr ? "engines agree" : "engines disagree: direct " + std::to_string(kd)) << '\n';
    if (kd != kr) return kDisagree;
  }
  return kOk;
}

int cmd_decompose(const Global& g, int p, const std::string& alpha, const std::string& beta) {
  modrep::DirectEngine direct(p, engine_options(g));
  for (const auto& [y, m] : direct.decompose_labelled(parse_module_pair(alpha, beta)))
    std::cout << "Y(" << label_string(y) << ") x" << m << '\n';
  return kOk;
}

int cmd_tableaux(const std::string& lam, const std::string& alpha, const std::string& beta, bool list) {
  const Partition shape = parse_exact_partition(lam);
  const BiComposition ab{parse_composition(alpha), parse_composition(beta)};
  if (list) {
    auto ts = tableaux::list_signed_ssyt(shape, ab);
    for (const auto& t : ts) std::cout << tableaux::to_string(t) << '\n';
    std::cout << ts.size() << '\n';
  } else {
    std::cout << tableaux::count_signed_ssyt(shape, ab) << '\n';
  }
  return kOk;
}

int cmd_iso(const Global& g, const std::string& s1, const std::string& s2, int modular_p) {
  const BiComposition raw1 = parse_pair(s1), raw2 = parse_pair(s2);
  const BiComposition x = make_pair(wp(raw1.first), wp(raw1.second));
  const BiComposition y = make_pair(wp(raw2.first), wp(raw2.second));
  if (x.size() != y.size()) throw std::invalid_argument("pairs have different sizes");
  const bool comb = tableaux::iso_equivalent(x, y);
  std::cout << "combinatorial: " << (comb ? "isomorphic" : "not isomorphic") << '\n';
  if (modular_p > 0) {
    modrep::DirectEngine direct(modular_p, engine_options(g));
    const bool mod = direct.isomorphic(x, y);
    std::cout << "modular (p=" << modular_p << "): " << (mod ? "isomorphic" : "not isomorphic") << '\n';
    if (mod != comb) return kDisagree;
  }
  return kOk;
}

struct VerifyArgs {
  std::string suite = "all", fixture_dir = SKOSTKA_FIXTURE_DIR;
  int n = 6, p = 3;
};

int cmd_verify(const Global& g, const VerifyArgs& a) {
  verify::Workbench wb(g.seed);
  verify::Report r;
  const std::string& s = a.suite;
  const bool all = s == "all";
  if (all || s == "fixtures") r.merge(verify::suite_fixtures(wb, a.n, a.p, a.fixture_dir));
  if (all || s == "reduction") r.merge(verify::suite_reduction(wb, a.n, a.p));
  if (all || s == "blocks") r.merge(verify::suite_blocks(wb, a.n, a.p));
  if (all || s == "formulas") r.merge(verify::suite_formulas(wb, a.n, a.p));
  if (all || s == "vanishing") r.merge(verify::suite_vanishing(wb, a.n, a.p));
  if (all || s == "rowcut") r.merge(verify::suite_rowcut(wb, a.n, a.p));
  if (all || s == "iso") r.merge(verify::suite_iso(wb, std::min(a.n, 5), a.p, std::max(a.n, 8)));
  if (all || s == "tableaux") r.merge(verify::suite_tableaux(a.n));
  if (all || s == "properties") r.merge(verify::suite_properties());
  std::cout << r.text();
  return r.ok() ? kOk : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed p-Kostka numbers and signed Young permutation modules"};
  app.require_subcommand(1);
  app.fallthrough();
  Global g;
  app.add_option("--cache-dir", g.cache_dir, "Matrix cache directory");
  app.add_option("--seed", g.seed, "Seed for randomized module algorithms");
  app.add_flag("--allow-large", g.allow_large, "Permit direct computation above degree 6");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write the matrix cache");

  MatrixArgs ma;
  auto* matrix = app.add_subcommand("matrix", "Print the plain or signed p-Kostka matrix");
  matrix->add_option("--n", ma.n)->required()->check(CLI::NonNegativeNumber);
  matrix->add_option("--p", ma.p)->required();
  auto* signed_flag = matrix->add_flag("--signed", "Signed matrix (default)");
  matrix->add_flag("--plain", ma.plain, "Plain matrix over partitions")->excludes(signed_flag);
  matrix->add_option("--format", ma.format)->check(CLI::IsMember({"csv", "json"}));
  matrix->add_option("--out", ma.out, "Output file (default stdout)");
  matrix->add_option("--engine", ma.engine)->check(CLI::IsMember({"direct", "reduction", "both"}));

  EntryArgs ea;
  auto* entry = app.add_subcommand("entry", "Print one signed p-Kostka number");
  entry->add_option("--p", ea.p)->required();
  entry->add_option("--alpha", ea.alpha);
  entry->add_option("--beta", ea.beta);
  entry->add_option("--lambda", ea.lambda);
  entry->add_option("--mu", ea.mu);
  entry->add_option("--method", ea.method)->check(CLI::IsMember({"direct", "reduction", "both"}));

  int dp = 3;
  std::string dalpha = "-", dbeta = "-";
  auto* decompose = app.add_subcommand("decompose", "Decompose a signed Young permutation module");
  decompose->add_option("--p", dp)->required();
  decompose->add_option("--alpha", dalpha);
  decompose->add_option("--beta", dbeta);

  std::string tl = "-", ta = "-", tb = "-";
  bool tlist = false;
  auto* tab = app.add_subcommand("tableaux", "Count semistandard signed tableaux");
  tab->add_option("--lambda", tl)->required();
  tab->add_option("--alpha", ta);
  tab->add_option("--beta", tb);
  tab->add_flag("--list", tlist, "Print every tableau");

  std::string p1, p2;
  int modular = 0;
  auto* iso = app.add_subcommand("iso", "Decide whether two signed Young permutation modules are isomorphic");
  iso->add_option("--pair1", p1, "alpha|beta")->required();
  iso->add_option("--pair2", p2, "sigma|tau")->required();
  iso->add_option("--modular-check", modular, "Also compare the modules over GF(p)");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", va.suite)
      ->check(CLI::IsMember(
          {"fixtures", "reduction", "blocks", "formulas", "vanishing", "rowcut", "iso", "tableaux", "properties", "all"}));
  ver->add_option("--n", va.n);
  ver->add_option("--p", va.p);
  ver->add_option("--fixture-dir", va.fixture_dir);
  ver->add_option("--seed", g.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*matrix) return cmd_matrix(g, ma);
    if (*entry) return cmd_entry(g, ea);
    if (*decompose) return cmd_decompose(g, dp, dalpha, dbeta);
    if (*tab) return cmd_tableaux(tl, ta, tb, tlist);
    if (*iso) return cmd_iso(g, p1, p2, modular);
    if (*ver) return cmd_verify(g, va);
  } catch (const modrep::DimensionCapError& e) {
    std::cerr << "dimension cap: " << e.what() << '\n';
    return kCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDisagree;
  }
  return kUsage;
}
