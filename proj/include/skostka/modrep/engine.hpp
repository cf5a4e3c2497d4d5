#ifndef SKOSTKA_MODREP_ENGINE_HPP
#define SKOSTKA_MODREP_ENGINE_HPP

#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <utility>
#include <vector>

#include "skostka/combinatorics.hpp"
#include "skostka/lambda_engine.hpp"
#include "skostka/modrep/decompose.hpp"

namespace skostka::modrep {

// Labelled Krull-Schmidt decomposition: (label, multiplicity), ordered by cmp_total.
using LabelledDecomposition = std::vector<std::pair<PairP2p, int>>;

struct EngineOptions {
  std::uint64_t seed = 0;
  std::size_t dim_cap = kDefaultDimCap;
  // Degrees above 6 are refused unless set.
  bool allow_large = false;
};

// One indecomposable class per label of the given degree, with a stored representative.
class YoungRegistry {
 public:
  struct Entry {
    PairP2p label;
    Summand rep;
    std::size_t end_dim = 0;
    int residue_degree = 1;
  };

  YoungRegistry(int n, int p) : n_(n), p_(p) {}
  int degree() const { return n_; }
  int prime() const { return p_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  void add(Entry e) { entries_.push_back(std::move(e)); }
  const Entry* find(const PairP2p& label) const;

 private:
  int n_, p_;
  std::vector<Entry> entries_;
};

class DirectEngine : public lambda::KostkaOracle {
 public:
  explicit DirectEngine(int p, EngineOptions opts = {});

  int prime() const override { return p_; }
  const EngineOptions& options() const { return opts_; }

  // Projective multiplicity k_{(g|d),(lam0|0)}.
  long projective_signed(const BiComposition& gd, const Partition& lam0) override;

  LabelledDecomposition decompose_labelled(const BiComposition& ab);
  long multiplicity(const BiComposition& ab, const PairP2p& x);
  // The registry at degree n, built by the sweep on first use.
  const YoungRegistry& registry(int n);
  // Full modules compared by Krull-Schmidt decomposition.
  bool isomorphic(const BiComposition& a, const BiComposition& b);
  // Labels whose decompositions met a residue degree above 1.
  const std::set<BiComposition>& flagged() const { return flagged_; }

 private:
  void check_degree(int n) const;
  std::shared_ptr<const SignedPermModule> module(const BiComposition& ab);
  Decomposition run_decomposition(const BiComposition& ab);
  // Registry index of the class, or -1 when no stored class is isomorphic.
  int match_class(const YoungRegistry& reg, const Decomposition& d, std::size_t cls, std::mt19937_64& rng) const;
  LabelledDecomposition label_of(const YoungRegistry& reg, const Decomposition& d, const std::vector<int>& idx) const;
  void build_registry(int n);

  int p_;
  EngineOptions opts_;
  std::recursive_mutex mu_;
  std::map<int, std::unique_ptr<YoungRegistry>> registries_;
  std::map<BiComposition, LabelledDecomposition> results_;
  std::set<BiComposition> flagged_;
};

}  // namespace skostka::modrep

#endif
