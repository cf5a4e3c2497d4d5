#include "skostka/verify.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "skostka/tableaux.hpp"

namespace skostka::verify {

void Report::add(std::string name, bool pass, std::string detail) {
  checks_.push_back({std::move(name), pass, std::move(detail)});
}

void Report::merge(const Report& other) { checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end()); }

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::string Report::text() const {
  std::ostringstream os;
  for (const auto& c : checks_) {
    os << (c.pass ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) os << " -- " << c.detail;
    os << '\n';
  }
  os << checks_.size() - failures() << "/" << checks_.size() << " checks passed\n";
  return os.str();
}

modrep::DirectEngine& Workbench::direct(int p) {
  auto& slot = direct_[p];
  if (!slot) slot = std::make_unique<modrep::DirectEngine>(p, modrep::EngineOptions{seed_});
  return *slot;
}

lambda::ReductionEngine& Workbench::reduction(int p) {
  auto& slot = reduction_[p];
  if (!slot) slot = std::make_unique<lambda::ReductionEngine>(direct(p));
  return *slot;
}

const KostkaMatrix& Workbench::direct_matrix(int n, int p, bool is_signed) {
  auto key = std::make_tuple(n, p, is_signed);
  auto it = matrices_.find(key);
  if (it == matrices_.end()) it = matrices_.emplace(key, assemble_matrix(n, p, is_signed, direct(p))).first;
  return it->second;
}

PairP2p sign_twist_label(const PairP2p& x) {
  const Partition l0 = digit(x.lam, x.p, 0);
  const Partition rest = subtract(x.lam, l0);
  std::vector<int> nu;
  for (int v : rest.parts()) nu.push_back(v / x.p);
  return PairP2p(add(mullineux(l0, x.p), x.pmu()), Partition(std::move(nu)), x.p);
}

namespace {

// Collects counts and the first few failure descriptions for one aggregated check.
struct Tally {
  std::size_t cases = 0;
  std::size_t bad = 0;
  std::vector<std::string> samples;
  void record(bool ok, const std::function<std::string()>& what) {
    ++cases;
    if (!ok) {
      ++bad;
      if (samples.size() < 3) samples.push_back(what());
    }
  }
  void report(Report& r, const std::string& name) const {
    std::string d = std::to_string(cases) + " cases";
    if (bad) {
      d += ", " + std::to_string(bad) + " failures";
      for (const auto& s : samples) d += "; " + s;
    }
    r.add(name, bad == 0 && cases > 0, d);
  }
};

std::string pair_text(const BiComposition& ab, const PairP2p& x) {
  return "(" + to_string(ab) + "),(" + label_string(x) + ")";
}

std::size_t length_of(const Composition& c) {
  std::size_t l = 0;
  for (std::size_t i = 0; i < c.length(); ++i)
    if (c[i] > 0) l = i + 1;
  return l;
}

long plain_direct(Workbench& wb, const Partition& a, const Partition& lam, int p) {
  if (a.size() != lam.size()) return 0;
  if (lam.empty()) return 1;
  return wb.direct(p).multiplicity(make_pair(a, Partition{}), PairP2p(lam, Partition{}, p));
}

// A witness for nonvanishing when |beta| = p|mu|: expansions of alpha over levels >= 0
// and of beta over levels >= 1 matching the digit sizes under dominance.
bool witness_exists(const Partition& alpha, const Partition& beta, const PairP2p& x) {
  const int p = x.p;
  auto ld = p_adic_expansion(x.lam, p);
  auto md = p_adic_expansion(x.mu, p);
  std::size_t levels = std::max(ld.size(), md.size() + 1);
  auto digit_at = [](const std::vector<Partition>& d, std::size_t i) { return i < d.size() ? d[i] : Partition{}; };
  // remaining[j] holds what is left of the target at position j, divided by p^i
  std::function<bool(std::size_t, std::vector<int>, const std::vector<Partition>&, std::size_t)> go =
      [&](std::size_t i, std::vector<int> rest, const std::vector<Partition>& target, std::size_t shift) -> bool {
    if (i == levels) return std::all_of(rest.begin(), rest.end(), [](int v) { return v == 0; });
    const Partition want = i >= shift ? digit_at(target, i - shift) : Partition{};
    long w = 1;
    for (std::size_t q = 0; q < i; ++q) w *= p;
    for (const auto& g : enumerate_compositions(want.size(), rest.size())) {
      bool fits = true;
      for (std::size_t j = 0; j < rest.size() && fits; ++j) fits = g[j] * w <= rest[j];
      if (!fits || !dominates(want, wp(g))) continue;
      std::vector<int> next = rest;
      for (std::size_t j = 0; j < rest.size(); ++j) next[j] -= static_cast<int>(g[j] * w);
      if (go(i + 1, next, target, shift)) return true;
    }
    return false;
  };
  return go(0, alpha.parts(), ld, 0) && go(0, beta.parts(), md, 1);
}

}  // namespace

Report suite_fixtures(Workbench& wb, int n, int p, const std::filesystem::path& fixture_dir) {
  Report r;
  const auto path = fixture_dir / ("kpm_signed_n" + std::to_string(n) + "_p" + std::to_string(p) + ".csv");
  if (!std::filesystem::exists(path)) {
    r.add("fixture available", false, "no fixture at " + path.string());
    return r;
  }
  KostkaMatrix want = read_csv_file(path, n, p, true);
  const KostkaMatrix& got = wb.direct_matrix(n, p, true);
  r.add("fixture labels in order", got.labels == want.labels);
  Tally t;
  for (std::size_t i = 0; i < want.size() && i < got.size(); ++i)
    for (std::size_t j = 0; j < want.size() && j < got.size(); ++j)
      t.record(got.matrix[i][j] == want.matrix[i][j], [&] {
        return got.labels[i] + " x " + got.labels[j] + ": " + std::to_string(got.matrix[i][j]) + " vs " +
               std::to_string(want.matrix[i][j]);
      });
  t.report(r, "signed matrix entries equal the fixture");
  const KostkaMatrix& plain = wb.direct_matrix(n, p, false);
  r.add("plain matrix is the top-left block", plain.matrix == diagonal_block(want, 0, plain.size()) &&
                                                  std::equal(plain.labels.begin(), plain.labels.end(), want.labels.begin()));
  return r;
}

Report suite_reduction(Workbench& wb, int n, int p) {
  Report r;
  auto& red = wb.reduction(p);
  auto& dir = wb.direct(p);
  Tally eq, full_sum;
  for (const auto& ab : enumerate_p2(n)) {
    for (const auto& x : enumerate_p2p(n, p)) {
      const long kr = red.signed_kostka(ab, x);
      const long kd = dir.multiplicity(ab, x);
      eq.record(kr == kd, [&] { return pair_text(ab, x) + ": " + std::to_string(kr) + " vs " + std::to_string(kd); });
      const long ks = red.lambda_sum(ab, x);
      full_sum.record(ks == kr, [&] { return pair_text(ab, x) + ": " + std::to_string(ks); });
    }
  }
  eq.report(r, "reduction equals direct, n=" + std::to_string(n) + " p=" + std::to_string(p));
  full_sum.report(r, "sum over Lambda equals sum over the support set");
  if (!dir.flagged().empty()) r.add("residue degrees are 1", false, std::to_string(dir.flagged().size()) + " modules");
  return r;
}

Report suite_blocks(Workbench& wb, int n, int p) {
  Report r;
  const KostkaMatrix& k = wb.direct_matrix(n, p, true);
  r.add("signed matrix lower unitriangular, n=" + std::to_string(n) + " p=" + std::to_string(p),
        is_lower_unitriangular(k));
  std::size_t offset = 0;
  for (int s = 0; s * p <= n; ++s) {
    const KostkaMatrix& outer = wb.direct_matrix(s, p, false);
    const KostkaMatrix& inner = wb.direct_matrix(n - s * p, p, false);
    auto want = kronecker(outer.matrix, inner.matrix);
    const std::size_t count = want.size();
    bool ok = offset + count <= k.size() && diagonal_block(k, offset, count) == want;
    r.add("diagonal block |mu|=" + std::to_string(s) + " equals K" + std::to_string(s) + " (x) K" +
              std::to_string(n - s * p),
          ok, std::to_string(count) + "x" + std::to_string(count));
    offset += count;
  }
  r.add("blocks cover the matrix", offset == k.size());
  return r;
}

Report suite_formulas(Workbench& wb, int n, int p) {
  Report r;
  auto& red = wb.reduction(p);
  auto& dir = wb.direct(p);
  Tally product, product_direct, nonzero, mull, twist, principal, rowremoval;
  for (const auto& ab : enumerate_p2(n)) {
    const Partition alpha = wp(ab.first), beta = wp(ab.second);
    for (const auto& x : enumerate_p2p(n, p)) {
      const long k = dir.multiplicity(ab, x);
      const Partition pmu = x.pmu();
      if (beta.size() == pmu.size()) {
        const std::size_t rmax = std::max(alpha.length(), x.lam.length());
        const std::size_t smax = std::max(beta.length(), pmu.length());
        for (std::size_t rc = 0; rc <= rmax; ++rc)
          for (std::size_t sc = 0; sc <= smax; ++sc) {
            if (!admits_horizontal_cut(alpha, x.lam, rc) || !admits_horizontal_cut(beta, pmu, sc)) continue;
            const long f = red.product_formula(ab, x, rc, sc);
            product.record(f == k, [&] {
              return pair_text(ab, x) + " r=" + std::to_string(rc) + " s=" + std::to_string(sc) + ": " +
                     std::to_string(f) + " vs " + std::to_string(k);
            });
          }
        const long f0 = plain_direct(wb, alpha, x.lam, p) * plain_direct(wb, beta, pmu, p);
        product_direct.record(f0 == k, [&] { return pair_text(ab, x); });
        nonzero.record((k > 0) == witness_exists(alpha, beta, x), [&] { return pair_text(ab, x); });
      }
      const Partition l0 = digit(x.lam, p, 0);
      if (alpha.size() == x.lam.size() - l0.size()) {
        const long f = red.mullineux_factor(ab, x);
        mull.record(f == k, [&] { return pair_text(ab, x) + ": " + std::to_string(f) + " vs " + std::to_string(k); });
      }
      const PairP2p y = sign_twist_label(x);
      const BiComposition ba = make_pair(beta, alpha);
      const long kt = dir.multiplicity(ba, y);
      twist.record(kt == k, [&] { return pair_text(ab, x) + " vs " + pair_text(ba, y); });
    }
    if (n % p == 0) {
      auto formula = red.principal_part_formula(ab);
      std::vector<std::pair<PairP2p, long>> seen;
      for (const auto& [y, m] : dir.decompose_labelled(ab))
        if (lambda::principal_by_digit(y)) seen.emplace_back(y, m);
      principal.record(formula == seen, [&] { return to_string(ab); });
    }
  }
  product.report(r, "product formula over all admitted cuts");
  product_direct.report(r, "k = k_{alpha,lam} k_{beta,p mu} from smaller degrees");
  nonzero.report(r, "nonzero iff expansion witness exists");
  mull.report(r, "Mullineux factorization");
  twist.report(r, "sign-twist identity on the direct engine");
  if (n % p == 0) principal.report(r, "principal part equals lam(0)-empty summands");
  for (const auto& a : enumerate_partitions(n))
    for (const auto& lam : enumerate_partitions(n)) {
      const long k = plain_direct(wb, a, lam, p);
      for (std::size_t rc = 0; rc <= std::max(a.length(), lam.length()); ++rc) {
        if (!admits_horizontal_cut(a, lam, rc)) continue;
        const long f = plain_direct(wb, top_cut(a, rc), top_cut(lam, rc), p) *
                       plain_direct(wb, bottom_cut(a, rc), bottom_cut(lam, rc), p);
        rowremoval.record(f == k, [&] { return to_string(a) + " " + to_string(lam) + " r=" + std::to_string(rc); });
      }
    }
  rowremoval.report(r, "plain row removal");
  if (n % p == 0) {
    std::size_t digit_only = 0, core_only = 0;
    for (const auto& x : enumerate_p2p(n, p)) {
      const bool d = lambda::principal_by_digit(x), c = lambda::principal_by_core(x);
      digit_only += d && !c;
      core_only += c && !d;
    }
    r.add("principal predicates reported", true,
          "lam(0) empty only: " + std::to_string(digit_only) + ", empty p-core only: " + std::to_string(core_only));
  }
  return r;
}

Report suite_vanishing(Workbench& wb, int n, int p) {
  Report r;
  auto& red = wb.reduction(p);
  auto& dir = wb.direct(p);
  Tally t;
  for (const auto& x : enumerate_p2p(n, p)) {
    if (!lambda::principal_by_digit(x)) continue;
    for (const auto& ab : enumerate_p2(n)) {
      if (ab.second.size() == p * x.mu.size()) continue;
      const long kd = dir.multiplicity(ab, x), kr = red.signed_kostka(ab, x);
      const bool ok = kd == 0 && kr == 0 && lambda::vanishing_check(ab, x);
      t.record(ok, [&] { return pair_text(ab, x) + ": " + std::to_string(kd) + "/" + std::to_string(kr); });
    }
  }
  t.report(r, "vanishing off |beta| = p|mu| in the lam(0)-empty columns");
  return r;
}

Report suite_rowcut(Workbench& wb, int n, int p) {
  Report r;
  auto& red = wb.reduction(p);
  auto& dir = wb.direct(p);
  Tally bound, equal;
  for (const auto& ab : enumerate_p2(n)) {
    const Partition alpha = wp(ab.first), beta = wp(ab.second);
    for (const auto& x : enumerate_p2p(n, p)) {
      const long k = dir.multiplicity(ab, x);
      const Partition pmu = x.pmu();
      for (std::size_t rc = 0; rc <= std::max(alpha.length(), x.lam.length()); ++rc)
        for (std::size_t sc = 0; sc <= std::max(beta.length(), pmu.length()); ++sc) {
          if (!admits_horizontal_cut(alpha, x.lam, rc) || !admits_horizontal_cut(beta, pmu, sc)) continue;
          const long b = red.rowcut_lower_bound(ab, x, rc, sc);
          auto what = [&] {
            return pair_text(ab, x) + " r=" + std::to_string(rc) + " s=" + std::to_string(sc) + ": " +
                   std::to_string(b) + " vs " + std::to_string(k);
          };
          bound.record(b <= k, what);
          if (beta.size() == pmu.size()) equal.record(b == k, what);
        }
    }
  }
  bound.report(r, "row-cut bound below k");
  equal.report(r, "row-cut bound attained when |beta| = p|mu|");
  return r;
}

Report suite_iso(Workbench& wb, int mod_n, int p, int char_n) {
  Report r;
  auto& dir = wb.direct(p);
  Tally mod, chr;
  for (int n = 0; n <= mod_n; ++n) {
    auto labels = enumerate_p2(n);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i; j < labels.size(); ++j) {
        const bool comb = tableaux::iso_equivalent(labels[i], labels[j]);
        const bool m = dir.isomorphic(labels[i], labels[j]);
        mod.record(comb == m, [&] {
          return to_string(labels[i]) + " vs " + to_string(labels[j]) + ": combinatorial " + std::to_string(comb);
        });
      }
  }
  mod.report(r, "isomorphism criterion matches modules, n<=" + std::to_string(mod_n));
  for (int n = 0; n <= char_n; ++n) {
    auto labels = enumerate_p2(n);
    std::vector<tableaux::SchurVector> ch;
    for (const auto& ab : labels) ch.push_back(tableaux::char_vector(ab));
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = i + 1; j < labels.size(); ++j)
        if (tableaux::iso_equivalent(labels[i], labels[j]))
          chr.record(ch[i] == ch[j], [&] { return to_string(labels[i]) + " vs " + to_string(labels[j]); });
  }
  chr.report(r, "equivalent labels have equal characters, n<=" + std::to_string(char_n));
  return r;
}

Report suite_tableaux(int n_max) {
  Report r;
  Tally pieri, unique, young, dual;
  for (int n = 0; n <= n_max; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& ab : enumerate_p2(n)) {
      pieri.record(tableaux::char_vector(ab) == tableaux::pieri_expand(ab), [&] { return to_string(ab); });
      const Partition alpha = wp(ab.first);
      const Partition shape = concat(alpha, rectangle(1, ab.second.size()));
      unique.record(tableaux::count_signed_ssyt(shape, ab) == 1, [&] { return to_string(ab); });
    }
    for (const auto& a : parts)
      for (const auto& lam : parts) {
        young.record(tableaux::count_signed_ssyt(lam, make_pair(a, Partition{})) ==
                         tableaux::classical_kostka(lam, a.composition()),
                     [&] { return to_string(lam) + " " + to_string(a); });
        dual.record(tableaux::count_signed_ssyt(lam, make_pair(Partition{}, a)) ==
                        tableaux::classical_kostka(conjugate(lam), a.composition()),
                    [&] { return to_string(lam) + " " + to_string(a); });
      }
  }
  const std::string sz = ", n<=" + std::to_string(n_max);
  pieri.report(r, "tableau count equals Pieri expansion" + sz);
  unique.report(r, "unique tableau of shape alpha # (1^|beta|)" + sz);
  young.report(r, "first-coordinate specialization is classical Kostka" + sz);
  dual.report(r, "second-coordinate specialization is conjugate Kostka" + sz);
  return r;
}

Report suite_properties() {
  Report r;
  Tally padic, cuts, block, mull, order, core, phi, iota;
  for (int p : {3, 5, 7})
    for (int n = 0; n <= 12; ++n)
      for (const auto& lam : enumerate_partitions(n)) {
        auto d = p_adic_expansion(lam, p);
        Partition sum;
        bool restricted = true;
        long w = 1;
        for (const auto& g : d) {
          sum = add(sum, scale(static_cast<int>(w), g));
          restricted = restricted && is_p_restricted(g, p);
          w *= p;
        }
        padic.record(sum == lam && restricted, [&] { return to_string(lam) + " p=" + std::to_string(p); });
      }
  for (int p : {3, 5})
    for (int n = 0; n <= 10; ++n)
      for (const auto& lam : enumerate_partitions(n))
        for (std::size_t rc = 0; rc <= 4; ++rc) {
          const int b = lam[rc];
          const Partition top = subtract(top_cut(lam, rc), rectangle(b, static_cast<int>(rc)));
          bool ok = true;
          for (std::size_t i = 0; i < 4; ++i) {
            const Partition li = digit(lam, p, i);
            ok = ok && digit(bottom_cut(lam, rc), p, i) == bottom_cut(li, rc);
            ok = ok && digit(top, p, i) == subtract(top_cut(li, rc), rectangle(li[rc], static_cast<int>(rc)));
          }
          cuts.record(ok, [&] { return to_string(lam) + " r=" + std::to_string(rc); });
        }
  for (int n = 0; n <= 8; ++n)
    for (const auto& lam : enumerate_partitions(n))
      for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max(n, 1)); ++k)
        for (const auto& g : enumerate_compositions(n, k)) {
          if (!dominates(lam, wp(g))) continue;
          bool ok = true;
          for (std::size_t j = 0; j < k; ++j) ok = ok && g[j] >= lam[k - 1];
          block.record(ok, [&] { return to_string(lam) + " " + to_string(g); });
        }
  for (int p : {3, 5})
    for (int n = 0; n <= 10; ++n)
      for (const auto& lam : enumerate_partitions(n)) {
        if (!is_p_restricted(lam, p)) continue;
        const Partition m = mullineux(lam, p);
        mull.record(is_p_restricted(m, p) && mullineux(m, p) == lam, [&] { return to_string(lam); });
      }
  for (int n = 0; n <= 8; ++n) {
    auto labels = enumerate_p2p(n, 3);
    for (std::size_t i = 0; i < labels.size(); ++i)
      for (std::size_t j = 0; j < labels.size(); ++j) {
        if (i == j) continue;
        if (!dominates_pair(labels[i].as_pair(), labels[j].as_pair())) continue;
        order.record(i < j, [&] { return label_string(labels[i]) + " " + label_string(labels[j]); });
      }
  }
  for (int p : {3, 5})
    for (int n = 0; n <= 12; ++n)
      for (const auto& lam : enumerate_partitions(n)) {
        auto h = hook_lengths(p_core(lam, p));
        core.record(std::find(h.begin(), h.end(), p) == h.end(), [&] { return to_string(lam); });
      }
  const int p = 3;
  for (int n = 0; n <= 6; ++n)
    for (const auto& ab : enumerate_p2(n))
      for (const auto& x : enumerate_p2p(n, p)) {
        const Partition alpha = wp(ab.first), beta = wp(ab.second);
        auto supp = lambda::enumerate_lambda_supp(ab, x);
        if (beta.size() == p * x.mu.size()) {
          auto a = lambda::enumerate_lambda_supp(make_pair(alpha, Partition{}), PairP2p(x.lam, Partition{}, p));
          auto b = lambda::enumerate_lambda_supp(make_pair(beta, Partition{}), PairP2p(x.pmu(), Partition{}, p));
          std::set<lambda::LambdaTuple> sa(a.begin(), a.end()), sb(b.begin(), b.end());
          std::set<std::pair<lambda::LambdaTuple, lambda::LambdaTuple>> img;
          bool ok = supp.size() == a.size() * b.size();
          for (const auto& t : supp) {
            ok = ok && (t.levels() == 0 || length_of(t.del[0]) == 0);
            auto pr = lambda::phi_split(t, ab, x);
            ok = ok && sa.count(pr.first) && sb.count(pr.second);
            img.insert(pr);
          }
          ok = ok && img.size() == supp.size();
          phi.record(ok, [&] { return pair_text(ab, x); });
        }
        std::set<lambda::LambdaTuple> target(supp.begin(), supp.end());
        for (std::size_t rc = 0; rc <= alpha.length(); ++rc)
          for (std::size_t sc = 0; sc <= beta.length(); ++sc) {
            if (!admits_horizontal_cut(alpha, x.lam, rc) || !admits_horizontal_cut(beta, x.pmu(), sc)) continue;
            lambda::CutContext ctx{ab, x, rc, sc};
            auto cs = lambda::cut_sets(ctx);
            if (!cs) continue;
            std::set<lambda::LambdaTuple> img;
            bool ok = true;
            std::size_t total = 0;
            for (const auto& s1 : cs->gamma1)
              for (const auto& s2 : cs->gamma2)
                for (const auto& s3 : cs->gamma3) {
                  auto e = lambda::iota_embed(s1, s2, s3, ctx);
                  ok = ok && target.count(e);
                  img.insert(e);
                  ++total;
                }
            iota.record(ok && img.size() == total, [&] {
              return pair_text(ab, x) + " r=" + std::to_string(rc) + " s=" + std::to_string(sc);
            });
          }
      }
  padic.report(r, "p-adic expansion round trip");
  cuts.report(r, "digits commute with row cuts");
  block.report(r, "dominant block property");
  mull.report(r, "Mullineux map is an involution");
  order.report(r, "total order refines dominance");
  core.report(r, "p-core has no p-hook");
  phi.report(r, "phi is a bijection onto the product");
  iota.report(r, "iota is injective into the support set");
  return r;
}

}  // namespace skostka::verify
