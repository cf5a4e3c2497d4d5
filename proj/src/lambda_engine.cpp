#include "skostka/lambda_engine.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace skostka::lambda {

namespace {

bool zero_seq(const Seq& s) {
  for (int x : s.parts())
    if (x != 0) return false;
  return true;
}

Seq zeros(std::size_t len) { return Seq(std::vector<int>(len, 0)); }

int ipow(int p, std::size_t i) {
  int r = 1;
  for (std::size_t k = 0; k < i; ++k) r *= p;
  return r;
}

// Ways to write v = sum_i p^i c_i with c_i >= 0 over the given number of levels.
void digit_splits(int v, int p, std::size_t levels, std::vector<std::vector<int>>& out) {
  std::vector<int> c(levels, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i == 0) {
      c[0] = rest;
      out.push_back(c);
      return;
    }
    int w = ipow(p, i);
    for (int k = rest / w; k >= 0; --k) {
      c[i] = k;
      rec(i - 1, rest - k * w);
    }
    c[i] = 0;
  };
  if (levels == 0) {
    if (v == 0) out.push_back({});
    return;
  }
  rec(levels - 1, v);
}

std::size_t level_count(int n, int p) {
  std::size_t l = 1;
  long w = p;
  while (w <= n) {
    ++l;
    w *= p;
  }
  return l;
}

// Depth-first assignment of digit splits to every position of alpha then beta.
// cap_g / cap_d bound the level sums of the two families (negative means free);
// cap_t bounds their sum.
std::vector<LambdaTuple> enumerate_core(const BiComposition& ab, int p, std::size_t levels,
                                        const std::vector<int>& cap_g, const std::vector<int>& cap_d,
                                        const std::vector<int>& cap_t) {
  const std::size_t la = ab.first.length(), lb = ab.second.length();
  std::vector<std::vector<std::vector<int>>> splits(la + lb);
  for (std::size_t j = 0; j < la + lb; ++j) {
    int v = j < la ? ab.first[j] : ab.second[j - la];
    digit_splits(v, p, levels, splits[j]);
  }
  std::vector<int> sum_g(levels, 0), sum_d(levels, 0);
  std::vector<std::size_t> choice(la + lb, 0);
  std::vector<LambdaTuple> out;
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == la + lb) {
      for (std::size_t i = 0; i < levels; ++i) {
        if (cap_t[i] >= 0 && sum_g[i] + sum_d[i] != cap_t[i]) return;
        if (cap_g[i] >= 0 && sum_g[i] != cap_g[i]) return;
        if (cap_d[i] >= 0 && sum_d[i] != cap_d[i]) return;
      }
      LambdaTuple t;
      t.gam.assign(levels, zeros(la));
      t.del.assign(levels, zeros(lb));
      for (std::size_t i = 0; i < levels; ++i) {
        std::vector<int> g(la), d(lb);
        for (std::size_t q = 0; q < la; ++q) g[q] = splits[q][choice[q]][i];
        for (std::size_t q = 0; q < lb; ++q) d[q] = splits[la + q][choice[la + q]][i];
        t.gam[i] = Seq(std::move(g));
        t.del[i] = Seq(std::move(d));
      }
      t.normalize();
      out.push_back(std::move(t));
      return;
    }
    const bool is_g = j < la;
    std::vector<int>& sums = is_g ? sum_g : sum_d;
    const std::vector<int>& cap = is_g ? cap_g : cap_d;
    for (std::size_t k = 0; k < splits[j].size(); ++k) {
      const auto& c = splits[j][k];
      bool ok = true;
      for (std::size_t i = 0; i < levels && ok; ++i) {
        sums[i] += c[i];
        if (cap[i] >= 0 && sums[i] > cap[i]) ok = false;
        if (cap_t[i] >= 0 && sum_g[i] + sum_d[i] > cap_t[i]) ok = false;
      }
      if (ok) {
        choice[j] = k;
        rec(j + 1);
      }
      for (std::size_t i = 0; i < levels; ++i) sums[i] -= c[i];
    }
  };
  rec(0);
  return out;
}

void check_pair(const BiComposition& ab, const PairP2p& x) {
  if (ab.size() != x.size()) throw std::invalid_argument("label sizes differ");
  require_odd_prime(x.p);
}

Partition digit_or_empty(const std::vector<Partition>& digits, std::size_t i) {
  return i < digits.size() ? digits[i] : Partition{};
}

BiComposition normalized(const BiComposition& ab) { return make_pair(wp(ab.first), wp(ab.second)); }

}  // namespace

void LambdaTuple::normalize() {
  while (!gam.empty() && zero_seq(gam.back()) && zero_seq(del.back())) {
    gam.pop_back();
    del.pop_back();
  }
}

bool LambdaTuple::operator==(const LambdaTuple& o) const { return gam == o.gam && del == o.del; }
bool LambdaTuple::operator<(const LambdaTuple& o) const {
  if (gam != o.gam) return gam < o.gam;
  return del < o.del;
}

std::string to_string(const LambdaTuple& t) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < t.levels(); ++i) os << (i ? ";" : "") << "(" << to_string(t.gam[i]) << ")";
  os << " | ";
  for (std::size_t i = 0; i < t.levels(); ++i) os << (i ? ";" : "") << "(" << to_string(t.del[i]) << ")";
  os << ")";
  return os.str();
}

std::vector<LambdaTuple> enumerate_lambda(const BiComposition& ab, const RhoShape& rho) {
  if (ab.size() != rho.size()) throw std::invalid_argument("enumerate_lambda: size mismatch");
  require_odd_prime(rho.p);
  std::size_t levels = std::max<std::size_t>(rho.counts.size(), 1);
  std::vector<int> free(levels, -1), total(levels, 0);
  for (std::size_t i = 0; i < rho.counts.size(); ++i) total[i] = rho.counts[i];
  return enumerate_core(ab, rho.p, levels, free, free, total);
}

std::vector<LambdaTuple> enumerate_lambda_supp(const BiComposition& ab, const PairP2p& x) {
  check_pair(ab, x);
  const int p = x.p;
  auto ld = p_adic_expansion(x.lam, p);
  auto md = p_adic_expansion(x.mu, p);
  std::size_t levels = std::max(level_count(x.size(), p), std::max(ld.size(), md.size() + 1));
  std::vector<int> cap_g(levels, -1), cap_d(levels, -1), total(levels, 0);
  for (std::size_t i = 0; i < levels; ++i) {
    total[i] = digit_or_empty(ld, i).size() + (i > 0 ? digit_or_empty(md, i - 1).size() : 0);
    if (i > 0) {
      cap_g[i] = digit_or_empty(ld, i).size();
      cap_d[i] = digit_or_empty(md, i - 1).size();
    }
  }
  auto all = enumerate_core(ab, p, levels, cap_g, cap_d, total);
  std::vector<LambdaTuple> out;
  Partition l0 = digit_or_empty(ld, 0);
  for (auto& t : all) {
    bool ok = true;
    for (std::size_t i = 1; i < t.levels() && ok; ++i) {
      ok = dominates(digit_or_empty(ld, i), wp(t.gam[i])) && dominates(digit_or_empty(md, i - 1), wp(t.del[i]));
    }
    if (ok) {
      Partition g0 = t.levels() > 0 ? wp(t.gam[0]) : Partition{};
      Partition d0 = t.levels() > 0 ? wp(t.del[0]) : Partition{};
      ok = dominates_pair(make_pair(l0, Partition{}), make_pair(g0, d0));
    }
    if (ok) out.push_back(std::move(t));
  }
  return out;
}

std::pair<LambdaTuple, LambdaTuple> phi_split(const LambdaTuple& t, const BiComposition& ab, const PairP2p& x) {
  check_pair(ab, x);
  if (ab.second.size() != x.p * x.mu.size()) throw std::invalid_argument("phi_split: |beta| != p|mu|");
  LambdaTuple a, b;
  a.gam = t.gam;
  a.del.assign(t.levels(), Seq{});
  b.gam = t.del;
  b.del.assign(t.levels(), Seq{});
  a.normalize();
  b.normalize();
  return {a, b};
}

std::optional<CutSets> cut_sets(const CutContext& ctx) {
  const BiComposition& ab = ctx.ab;
  if (!ab.is_bipartition()) throw std::invalid_argument("cut_sets: partitions required");
  check_pair(ab, ctx.x);
  const int p = ctx.x.p;
  Partition alpha = wp(ab.first), beta = wp(ab.second);
  Partition pmu = ctx.x.pmu();
  if (!admits_horizontal_cut(alpha, ctx.x.lam, ctx.r) || !admits_horizontal_cut(beta, pmu, ctx.s))
    throw std::invalid_argument("cut_sets: cut not admitted");
  const int b = ctx.x.lam[ctx.r];
  const int c = pmu[ctx.s];
  CutSets cs;
  try {
    cs.alpha_top = subtract(top_cut(alpha, ctx.r), rectangle(b, ctx.r));
    cs.lam_top = subtract(top_cut(ctx.x.lam, ctx.r), rectangle(b, ctx.r));
    cs.beta_top = subtract(top_cut(beta, ctx.s), rectangle(c, ctx.s));
    cs.pmu_top = subtract(top_cut(pmu, ctx.s), rectangle(c, ctx.s));
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  auto pad = [](const Partition& q, std::size_t len) {
    std::vector<int> v(len, 0);
    for (std::size_t i = 0; i < q.length() && i < len; ++i) v[i] = q[i];
    return Composition(std::move(v));
  };
  // Gamma_1, Gamma_2 use tops padded to r (resp. s) positions so that the embedding
  // lines up with the first rows of alpha (resp. beta).
  cs.gamma1 = enumerate_lambda_supp(BiComposition{pad(cs.alpha_top, ctx.r), Composition{}},
                                    PairP2p(cs.lam_top, Partition{}, p));
  cs.gamma2 = enumerate_lambda_supp(BiComposition{pad(cs.beta_top, ctx.s), Composition{}},
                                    PairP2p(cs.pmu_top, Partition{}, p));
  Partition mu_bottom = bottom_cut(ctx.x.mu, ctx.s);
  cs.gamma3 = enumerate_lambda_supp(BiComposition{bottom_cut(ab.first, ctx.r), bottom_cut(ab.second, ctx.s)},
                                    PairP2p(bottom_cut(ctx.x.lam, ctx.r), mu_bottom, p));
  return cs;
}

LambdaTuple iota_embed(const LambdaTuple& s, const LambdaTuple& t, const LambdaTuple& u, const CutContext& ctx) {
  const int p = ctx.x.p;
  const std::size_t r = ctx.r, sc = ctx.s;
  auto ld = p_adic_expansion(ctx.x.lam, p);
  auto md = p_adic_expansion(ctx.x.mu, p);
  std::size_t levels = std::max({s.levels(), t.levels(), u.levels(), ld.size(), md.size() + 1});
  auto at = [](const std::vector<Seq>& v, std::size_t i) { return i < v.size() ? v[i] : Seq{}; };
  const std::size_t la = ctx.ab.first.length(), lb = ctx.ab.second.length();
  if (la < r || lb < sc) throw std::invalid_argument("iota_embed: cut longer than label");
  LambdaTuple out;
  for (std::size_t i = 0; i < levels; ++i) {
    const int bi = digit_or_empty(ld, i)[r];
    const int ci = i > 0 ? digit_or_empty(md, i - 1)[sc] : 0;
    Seq sig = at(s.gam, i), tau = at(t.gam, i), gam = at(u.gam, i), del = at(u.del, i);
    if (sig.length() > r || tau.length() > sc || gam.length() > la - r || del.length() > lb - sc)
      throw std::invalid_argument("iota_embed: malformed tuple");
    std::vector<int> eta(la, 0), theta(lb, 0);
    for (std::size_t j = 0; j < r; ++j) eta[j] = sig[j] + bi;
    for (std::size_t j = r; j < la; ++j) eta[j] = gam[j - r];
    for (std::size_t j = 0; j < sc; ++j) theta[j] = tau[j] + ci;
    for (std::size_t j = sc; j < lb; ++j) theta[j] = del[j - sc];
    out.gam.emplace_back(std::move(eta));
    out.del.emplace_back(std::move(theta));
  }
  out.normalize();
  return out;
}

ReductionEngine::ReductionEngine(KostkaOracle& oracle) : oracle_(oracle), p_(oracle.prime()) { require_odd_prime(p_); }

long ReductionEngine::level_factor(const Seq& g, const Partition& lam, bool prune) {
  if (g.size() != lam.size()) return 0;
  Partition w = wp(g);
  if (prune && !dominates(lam, w)) return 0;
  if (lam.empty()) return 1;
  return oracle_.projective_signed(make_pair(w, Partition{}), lam);
}

long ReductionEngine::level_zero_factor(const Seq& g, const Seq& d, const Partition& lam0, bool prune) {
  if (g.size() + d.size() != lam0.size()) return 0;
  Partition wg = wp(g), wd = wp(d);
  if (prune && !dominates_pair(make_pair(lam0, Partition{}), make_pair(wg, wd))) return 0;
  if (lam0.empty()) return 1;
  return oracle_.projective_signed(make_pair(wg, wd), lam0);
}

long ReductionEngine::summand(const LambdaTuple& t, const PairP2p& x, bool prune) {
  auto ld = p_adic_expansion(x.lam, p_);
  auto md = p_adic_expansion(x.mu, p_);
  std::size_t levels = std::max({t.levels(), ld.size(), md.size() + 1});
  auto at = [](const std::vector<Seq>& v, std::size_t i) { return i < v.size() ? v[i] : Seq{}; };
  long v = level_zero_factor(at(t.gam, 0), at(t.del, 0), digit_or_empty(ld, 0), prune);
  for (std::size_t i = 1; i < levels && v != 0; ++i) {
    v *= level_factor(at(t.gam, i), digit_or_empty(ld, i), prune);
    if (v == 0) break;
    v *= level_factor(at(t.del, i), digit_or_empty(md, i - 1), prune);
  }
  return v;
}

long ReductionEngine::signed_kostka(const BiComposition& ab_in, const PairP2p& x) {
  check_pair(ab_in, x);
  if (x.p != p_) throw std::invalid_argument("signed_kostka: prime differs from oracle");
  BiComposition ab = normalized(ab_in);
  auto key = std::make_tuple(wp(ab.first), wp(ab.second), x.lam, x.mu);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = signed_memo_.find(key);
    if (it != signed_memo_.end()) return it->second;
  }
  long v = 0;
  if (x.mu.empty() && is_p_restricted(x.lam, p_)) {
    v = x.lam.empty() ? 1 : oracle_.projective_signed(ab, x.lam);
  } else {
    for (const auto& t : enumerate_lambda_supp(ab, x)) v += summand(t, x, true);
  }
  std::lock_guard<std::mutex> lock(mu_);
  signed_memo_.emplace(key, v);
  return v;
}

long ReductionEngine::kostka(const Composition& a, const Partition& lam) {
  if (a.size() != lam.size()) throw std::invalid_argument("kostka: size mismatch");
  Partition w = wp(a);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = plain_memo_.find({w, lam});
    if (it != plain_memo_.end()) return it->second;
  }
  long v = signed_kostka(make_pair(w, Partition{}), PairP2p(lam, Partition{}, p_));
  std::lock_guard<std::mutex> lock(mu_);
  plain_memo_.emplace(std::make_pair(w, lam), v);
  return v;
}

long ReductionEngine::lambda_sum(const BiComposition& ab, const PairP2p& x) {
  check_pair(ab, x);
  long v = 0;
  for (const auto& t : enumerate_lambda(ab, rho_of(x))) v += summand(t, x, false);
  return v;
}

long ReductionEngine::product_formula(const BiComposition& ab, const PairP2p& x, std::size_t r, std::size_t s) {
  check_pair(ab, x);
  if (!ab.is_bipartition()) throw std::invalid_argument("product_formula: partitions required");
  Partition alpha = wp(ab.first), beta = wp(ab.second), pmu = x.pmu();
  if (beta.size() != pmu.size()) throw std::invalid_argument("product_formula: |beta| != p|mu|");
  if (!admits_horizontal_cut(alpha, x.lam, r) || !admits_horizontal_cut(beta, pmu, s))
    throw std::invalid_argument("product_formula: cut not admitted");
  long v = kostka(top_cut(alpha, r).composition(), top_cut(x.lam, r));
  if (v == 0) return 0;
  v *= kostka(top_cut(beta, s).composition(), top_cut(pmu, s));
  if (v == 0) return 0;
  v *= kostka(bottom_cut(alpha, r).composition(), bottom_cut(x.lam, r));
  if (v == 0) return 0;
  return v * kostka(bottom_cut(beta, s).composition(), bottom_cut(pmu, s));
}

long ReductionEngine::mullineux_factor(const BiComposition& ab, const PairP2p& x) {
  check_pair(ab, x);
  Partition l0 = digit(x.lam, p_, 0);
  Partition rest = subtract(x.lam, l0);
  if (ab.first.size() != rest.size()) throw std::invalid_argument("mullineux_factor: |alpha| != |lam| - |lam(0)|");
  long v = kostka(ab.first, rest);
  if (v == 0) return 0;
  return v * kostka(ab.second, add(mullineux(l0, p_), x.pmu()));
}

long ReductionEngine::rowcut_lower_bound(const BiComposition& ab, const PairP2p& x, std::size_t r, std::size_t s) {
  check_pair(ab, x);
  if (!ab.is_bipartition()) throw std::invalid_argument("rowcut_lower_bound: partitions required");
  Partition alpha = wp(ab.first), beta = wp(ab.second), pmu = x.pmu();
  if (!admits_horizontal_cut(alpha, x.lam, r) || !admits_horizontal_cut(beta, pmu, s))
    throw std::invalid_argument("rowcut_lower_bound: cut not admitted");
  long v = kostka(top_cut(alpha, r).composition(), top_cut(x.lam, r));
  if (v == 0) return 0;
  v *= kostka(top_cut(beta, s).composition(), top_cut(pmu, s));
  if (v == 0) return 0;
  return v * signed_kostka(make_pair(bottom_cut(alpha, r), bottom_cut(beta, s)),
                           PairP2p(bottom_cut(x.lam, r), bottom_cut(x.mu, s), p_));
}

std::vector<std::pair<PairP2p, long>> ReductionEngine::principal_part_formula(const BiComposition& ab) {
  if (!ab.is_bipartition()) throw std::invalid_argument("principal_part_formula: partitions required");
  const int n = ab.size();
  if (n % p_ != 0) throw std::invalid_argument("principal_part_formula: n not divisible by p");
  std::vector<std::pair<PairP2p, long>> out;
  for (const auto& x : enumerate_p2p(n, p_)) {
    if (!digit(x.lam, p_, 0).empty()) continue;
    if (ab.second.size() != p_ * x.mu.size()) continue;
    long v = kostka(ab.first, x.lam);
    if (v == 0) continue;
    v *= kostka(ab.second, x.pmu());
    if (v > 0) out.emplace_back(x, v);
  }
  return out;
}

std::size_t ReductionEngine::memo_size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return signed_memo_.size() + plain_memo_.size();
}

bool vanishing_check(const BiComposition& ab, const PairP2p& x) {
  check_pair(ab, x);
  if (!digit(x.lam, x.p, 0).empty()) throw std::invalid_argument("vanishing_check: lam(0) must be empty");
  if (ab.second.size() == x.p * x.mu.size()) return true;
  return enumerate_lambda_supp(ab, x).empty();
}

bool principal_by_digit(const PairP2p& x) { return digit(x.lam, x.p, 0).empty(); }

bool principal_by_core(const PairP2p& x) { return p_core(x.lam, x.p).empty(); }

}  // namespace skostka::lambda
