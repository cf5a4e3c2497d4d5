#include "skostka/modrep/engine.hpp"

#include <algorithm>

namespace skostka::modrep {

const YoungRegistry::Entry* YoungRegistry::find(const PairP2p& label) const {
  for (const auto& e : entries_)
    if (e.label == label) return &e;
  return nullptr;
}

DirectEngine::DirectEngine(int p, EngineOptions opts) : p_(p), opts_(opts) { require_odd_prime(p); }

void DirectEngine::check_degree(int n) const {
  if (n > 6 && !opts_.allow_large) {
    std::size_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
    throw DimensionCapError("degree " + std::to_string(n) + " needs the large-degree opt-in", f);
  }
}

std::shared_ptr<const SignedPermModule> DirectEngine::module(const BiComposition& ab) {
  return std::make_shared<const SignedPermModule>(build_module(ab, p_, opts_.dim_cap));
}

Decomposition DirectEngine::run_decomposition(const BiComposition& ab) {
  Decomposition d = decompose_module(module(ab), DecomposeOptions{opts_.seed});
  for (int e : d.residue_degree)
    if (e > 1) flagged_.insert(ab);
  return d;
}

int DirectEngine::match_class(const YoungRegistry& reg, const Decomposition& d, std::size_t cls, std::mt19937_64& rng) const {
  const std::size_t k = d.classes[cls].front();
  const Summand& u = d.pieces[k];
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const auto& e = reg.entries()[i];
    if (e.rep.dim() == u.dim() && e.end_dim == d.piece_end_dim[k] && e.residue_degree == d.residue_degree[k])
      cand.push_back(i);
  }
  if (cand.empty()) return -1;
  std::vector<HomBasis> there;
  there.reserve(cand.size());
  // cheap positive search first
  for (std::size_t i : cand) {
    const Summand& v = reg.entries()[i].rep;
    there.emplace_back(*u.parent, *v.parent);
    if (there.back().size() == 0) continue;
    for (int t = 0; t < 12; ++t)
      if (gfp::is_invertible(sample_hom(u, v, there.back(), rng))) return static_cast<int>(i);
  }
  for (std::size_t j = 0; j < cand.size(); ++j) {
    const Summand& v = reg.entries()[cand[j]].rep;
    if (there[j].size() == 0) continue;
    HomBasis back(*v.parent, *u.parent);
    if (modules_isomorphic(u, v, rng, &there[j], &back)) return static_cast<int>(cand[j]);
  }
  return -1;
}

LabelledDecomposition DirectEngine::label_of(const YoungRegistry& reg, const Decomposition& d,
                                             const std::vector<int>& idx) const {
  LabelledDecomposition out;
  std::vector<char> seen(reg.size(), 0);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    if (seen[idx[c]]) throw IntegrityError("two summand classes of " + to_string(d.module->label) + " share a label");
    seen[idx[c]] = 1;
    out.emplace_back(reg.entries()[idx[c]].label, static_cast<int>(d.classes[c].size()));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return cmp_total(a.first, b.first) < 0; });
  return out;
}

void DirectEngine::build_registry(int n) {
  auto reg = std::make_unique<YoungRegistry>(n, p_);
  std::mt19937_64 rng(opts_.seed ^ (0x5bd1e995ULL * static_cast<std::uint64_t>(n + 1)));
  for (const auto& x : enumerate_p2p(n, p_)) {
    const BiComposition ab = x.as_pair();
    Decomposition d;
    try {
      d = run_decomposition(ab);
    } catch (const DimensionCapError& e) {
      throw DimensionCapError(std::string(e.what()) + " (label " + label_string(x) + ")", e.required());
    }
    std::vector<int> idx(d.classes.size(), -1);
    std::vector<std::size_t> fresh;
    for (std::size_t c = 0; c < d.classes.size(); ++c) {
      idx[c] = match_class(*reg, d, c, rng);
      if (idx[c] < 0) fresh.push_back(c);
    }
    if (fresh.size() != 1)
      throw IntegrityError("sweep found " + std::to_string(fresh.size()) + " new classes in M(" + label_string(x) + ")");
    const std::size_t c = fresh.front();
    if (d.classes[c].size() != 1)
      throw IntegrityError("new class of M(" + label_string(x) + ") has multiplicity " +
                           std::to_string(d.classes[c].size()));
    const std::size_t k = d.classes[c].front();
    reg->add({x, d.pieces[k], d.piece_end_dim[k], d.residue_degree[k]});
    idx[c] = static_cast<int>(reg->size() - 1);
    results_[ab] = label_of(*reg, d, idx);
  }
  registries_[n] = std::move(reg);
}

const YoungRegistry& DirectEngine::registry(int n) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  check_degree(n);
  auto it = registries_.find(n);
  if (it == registries_.end()) {
    build_registry(n);
    it = registries_.find(n);
  }
  return *it->second;
}

LabelledDecomposition DirectEngine::decompose_labelled(const BiComposition& ab_in) {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  const BiComposition ab = make_pair(wp(ab_in.first), wp(ab_in.second));
  const int n = ab.size();
  check_degree(n);
  if (auto it = results_.find(ab); it != results_.end()) return it->second;
  const YoungRegistry& reg = registry(n);
  if (auto it = results_.find(ab); it != results_.end()) return it->second;
  Decomposition d = run_decomposition(ab);
  std::mt19937_64 rng(opts_.seed ^ 0x27d4eb2f165667c5ULL ^ d.end_dim);
  std::vector<int> idx(d.classes.size(), -1);
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    idx[c] = match_class(reg, d, c, rng);
    if (idx[c] < 0) throw IntegrityError("summand of M(" + to_string(ab) + ") matches no registered class");
  }
  auto out = label_of(reg, d, idx);
  results_[ab] = out;
  return out;
}

long DirectEngine::multiplicity(const BiComposition& ab, const PairP2p& x) {
  if (ab.size() != x.size()) throw std::invalid_argument("multiplicity: label sizes differ");
  if (x.p != p_) throw std::invalid_argument("multiplicity: prime differs from engine");
  for (const auto& [label, m] : decompose_labelled(ab))
    if (label == x) return m;
  return 0;
}

long DirectEngine::projective_signed(const BiComposition& gd, const Partition& lam0) {
  if (gd.size() != lam0.size()) return 0;
  if (!is_p_restricted(lam0, p_)) throw std::invalid_argument("projective_signed: label not p-restricted");
  if (lam0.empty()) return 1;
  return multiplicity(gd, PairP2p(lam0, Partition{}, p_));
}

bool DirectEngine::isomorphic(const BiComposition& a, const BiComposition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("isomorphic: sizes differ");
  check_degree(a.size());
  auto ma = module(a), mb = module(b);
  return modules_isomorphic(*ma, *mb, opts_.seed);
}

}  // namespace skostka::modrep
