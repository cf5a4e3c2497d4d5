#ifndef SKOSTKA_LAMBDA_ENGINE_HPP
#define SKOSTKA_LAMBDA_ENGINE_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "skostka/combinatorics.hpp"

namespace skostka::lambda {

// Level i holds gam[i] (support within l(alpha)) and del[i] (support within l(beta)).
// Seqs are zero-padded to l(alpha) and l(beta); trailing all-zero levels are dropped.
struct LambdaTuple {
  std::vector<Seq> gam;
  std::vector<Seq> del;
  std::size_t levels() const { return gam.size(); }
  void normalize();
  bool operator==(const LambdaTuple& o) const;
  bool operator<(const LambdaTuple& o) const;
};

std::string to_string(const LambdaTuple& t);

// Multiplicities k_{(g|d),(lam0|0)} of projective summands, lam0 p-restricted.
class KostkaOracle {
 public:
  virtual ~KostkaOracle() = default;
  virtual int prime() const = 0;
  virtual long projective_signed(const BiComposition& gd, const Partition& lam0) = 0;
};

std::vector<LambdaTuple> enumerate_lambda(const BiComposition& ab, const RhoShape& rho);
std::vector<LambdaTuple> enumerate_lambda_supp(const BiComposition& ab, const PairP2p& x);

std::pair<LambdaTuple, LambdaTuple> phi_split(const LambdaTuple& t, const BiComposition& ab, const PairP2p& x);

// Data for the row-cut embedding: cut sizes and the pairs being cut.
struct CutContext {
  BiComposition ab;
  PairP2p x;
  std::size_t r = 0;
  std::size_t s = 0;
};

// The three index sets of the embedding: plain sets for the shifted tops, and the
// bottoms pair.
struct CutSets {
  Partition alpha_top, lam_top;  // alpha^r - (b^r), lam^r - (b^r)
  Partition beta_top, pmu_top;   // beta^s - (c^s), (p mu)^s - (c^s)
  std::vector<LambdaTuple> gamma1, gamma2, gamma3;
};
// Empty optional when a shifted top is not a partition.
std::optional<CutSets> cut_sets(const CutContext& ctx);

LambdaTuple iota_embed(const LambdaTuple& s, const LambdaTuple& t, const LambdaTuple& u, const CutContext& ctx);

// Recursive evaluation of the reduction formulas with a shared memo table.
class ReductionEngine {
 public:
  explicit ReductionEngine(KostkaOracle& oracle);

  int prime() const { return p_; }
  long signed_kostka(const BiComposition& ab, const PairP2p& x);
  long kostka(const Composition& a, const Partition& lam);
  long product_formula(const BiComposition& ab, const PairP2p& x, std::size_t r, std::size_t s);
  long mullineux_factor(const BiComposition& ab, const PairP2p& x);
  long rowcut_lower_bound(const BiComposition& ab, const PairP2p& x, std::size_t r, std::size_t s);
  std::vector<std::pair<PairP2p, long>> principal_part_formula(const BiComposition& ab);
  // Sum of the summand over all of Lambda, factors set to 0 where undefined.
  long lambda_sum(const BiComposition& ab, const PairP2p& x);
  // The summand of the reduction formula for one tuple.
  // With prune, factors failing a size or dominance condition are 0 without a query.
  long summand(const LambdaTuple& t, const PairP2p& x, bool prune = true);

  std::size_t memo_size() const;

 private:
  long level_factor(const Seq& g, const Partition& lam, bool prune);
  long level_zero_factor(const Seq& g, const Seq& d, const Partition& lam0, bool prune);

  KostkaOracle& oracle_;
  int p_;
  mutable std::mutex mu_;
  std::map<std::tuple<Partition, Partition, Partition, Partition>, long> signed_memo_;
  std::map<std::pair<Partition, Partition>, long> plain_memo_;
};

bool vanishing_check(const BiComposition& ab, const PairP2p& x);
bool principal_by_digit(const PairP2p& x);  // lam(0) empty
bool principal_by_core(const PairP2p& x);   // p-core of lam empty

}  // namespace skostka::lambda

#endif
