#include "skostka/modrep/decompose.hpp"

#include <algorithm>

#include "skostka/gfp/poly.hpp"

namespace skostka::modrep {

FpMatrix Summand::restricted_generator(std::size_t i) const { return gfp::mul(proj, parent->act(i, basis)); }

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Piece {
  FpMatrix s, p;
  int fails = 0;
  bool stable = false;
};

FpMatrix random_vector(Index n, int p, std::mt19937_64& rng) { return FpMatrix::random(n, 1, p, rng); }

// Fitting split of an endomorphism x of a piece: column bases of the two parts.
std::optional<std::pair<FpMatrix, FpMatrix>> try_split(const FpMatrix& x, std::mt19937_64& rng) {
  const Index u = x.rows();
  const int p = static_cast<int>(x.modulus());
  if (u <= 1) return std::nullopt;
  gfp::Poly f = gfp::krylov_minpoly(x, random_vector(u, p, rng));
  gfp::Poly r = gfp::poly_radical(f, p);
  if (gfp::poly_degree(r) < 2 || gfp::poly_is_irreducible(r, p)) return std::nullopt;
  gfp::Poly g = gfp::poly_least_factor(r, p, rng);
  FpMatrix z = gfp::poly_eval(g, x);
  for (Index e = 1; e < u; e *= 2) z = gfp::mul(z, z);
  FpMatrix k1 = gfp::nullspace(z).transpose();
  FpMatrix k2 = gfp::column_space(z);
  if (k1.cols() == 0 || k2.cols() == 0) return std::nullopt;
  if (k1.cols() + k2.cols() != u) throw IntegrityError("Fitting split: dimensions do not add up");
  return std::make_pair(std::move(k1), std::move(k2));
}

void split_piece(std::vector<Piece>& pieces, std::size_t k, const FpMatrix& k1, const FpMatrix& k2) {
  FpMatrix t = gfp::hstack(k1, k2);
  auto tinv = gfp::inverse(t);
  if (!tinv) throw IntegrityError("split: complementary bases are not independent");
  Piece& pc = pieces[k];
  const Index u1 = k1.cols(), u2 = k2.cols();
  FpMatrix q = gfp::mul(*tinv, pc.p);
  Piece a{gfp::mul(pc.s, k1), q.block(0, 0, u1, q.cols())};
  Piece b{gfp::mul(pc.s, k2), q.block(u1, 0, u2, q.cols())};
  pieces[k] = std::move(a);
  pieces.push_back(std::move(b));
}

std::vector<std::int64_t> flatten(const FpMatrix& m) {
  std::vector<std::int64_t> v(static_cast<std::size_t>(m.rows() * m.cols()));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) v[static_cast<std::size_t>(i * m.cols() + j)] = m(i, j);
  return v;
}

FpMatrix random_combination(const std::vector<FpMatrix>& basis, std::mt19937_64& rng) {
  const int p = static_cast<int>(basis.front().modulus());
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  FpMatrix out(basis.front().rows(), basis.front().cols(), p);
  for (const auto& b : basis) out = gfp::add(out, gfp::scale(dist(rng), b));
  return out;
}

bool some_composition_invertible(const std::vector<FpMatrix>& there, const std::vector<FpMatrix>& back,
                                 std::mt19937_64& rng) {
  if (there.empty() || back.empty()) return false;
  for (int t = 0; t < 8; ++t)
    if (gfp::is_invertible(gfp::mul(random_combination(back, rng), random_combination(there, rng)))) return true;
  for (const auto& b : back)
    for (const auto& a : there)
      if (gfp::is_invertible(gfp::mul(b, a))) return true;
  return false;
}

// Hom samples between pieces; returns once the block dimensions add up to dim End(M).
void sample_homs(const std::shared_ptr<const SignedPermModule>& m, const HomBasis& end, const std::vector<Piece>& pieces,
                 std::mt19937_64& rng, std::vector<std::vector<std::vector<FpMatrix>>>& hom) {
  const std::size_t K = pieces.size();
  const int p = m->p;
  FpMatrix sall = pieces[0].s, pall = pieces[0].p;
  std::vector<Index> off{0};
  for (std::size_t k = 1; k < K; ++k) {
    sall = gfp::hstack(sall, pieces[k].s);
    pall = gfp::vstack(pall, pieces[k].p);
  }
  for (std::size_t k = 0; k < K; ++k) off.push_back(off.back() + pieces[k].s.cols());
  hom.assign(K, std::vector<std::vector<FpMatrix>>(K));
  std::vector<std::vector<gfp::IncrementalSpan<std::int32_t>>> spans;
  for (std::size_t k = 0; k < K; ++k) {
    spans.emplace_back();
    for (std::size_t l = 0; l < K; ++l) spans[k].emplace_back(pieces[k].s.cols() * pieces[l].s.cols(), p);
  }
  std::size_t total = 0;
  int idle = 0;
  while (total < end.size()) {
    FpMatrix b = gfp::mul(pall, gfp::mul(end.random_element(rng), sall));
    bool grew = false;
    for (std::size_t k = 0; k < K; ++k)
      for (std::size_t l = 0; l < K; ++l) {
        FpMatrix blk = b.block(off[l], off[k], off[l + 1] - off[l], off[k + 1] - off[k]);
        if (spans[k][l].insert(flatten(blk))) {
          hom[k][l].push_back(std::move(blk));
          ++total;
          grew = true;
        }
      }
    idle = grew ? 0 : idle + 1;
    if (idle > 64) throw IntegrityError("Hom sampling stalled below dim End(M) for " + to_string(m->label));
  }
}

}  // namespace

Decomposition decompose_module(std::shared_ptr<const SignedPermModule> m, const DecomposeOptions& opts) {
  std::mt19937_64 rng(opts.seed ^ fnv1a(to_string(m->label) + "/" + std::to_string(m->p)));
  const int p = m->p;
  const Index N = static_cast<Index>(m->dim());
  HomBasis end(*m, *m);
  std::vector<Piece> pieces{{FpMatrix::identity(N, p), FpMatrix::identity(N, p)}};

  Decomposition d;
  d.module = m;
  d.end_dim = end.size();
  while (true) {
    // random Fitting splits until every piece resists
    while (std::any_of(pieces.begin(), pieces.end(), [](const Piece& pc) { return !pc.stable; })) {
      FpMatrix a = end.random_element(rng);
      const std::size_t K = pieces.size();
      for (std::size_t k = 0; k < K; ++k) {
        if (pieces[k].stable) continue;
        FpMatrix x = gfp::mul(pieces[k].p, gfp::mul(a, pieces[k].s));
        auto sp = try_split(x, rng);
        if (sp) {
          split_piece(pieces, k, sp->first, sp->second);
        } else if (++pieces[k].fails >= opts.split_patience || x.rows() == 1) {
          pieces[k].stable = true;
        }
      }
    }
    sample_homs(m, end, pieces, rng, d.hom);
    // certify local endomorphism rings
    bool resplit = false;
    d.piece_end_dim.assign(pieces.size(), 0);
    d.residue_degree.assign(pieces.size(), 0);
    for (std::size_t k = 0; k < pieces.size() && !resplit; ++k) {
      EndAlgebra e(d.hom[k][k], p);
      StructureAlgebra s = StructureAlgebra::from(e);
      const int deg = local_residue_degree(s);
      if (deg > 0) {
        d.piece_end_dim[k] = e.dim();
        d.residue_degree[k] = deg;
        continue;
      }
      auto idem = nontrivial_idempotent(s, rng);
      if (!idem) throw IntegrityError("non-local endomorphism ring without an idempotent");
      FpMatrix em = e.combination(*idem);
      FpMatrix one_minus = gfp::sub(FpMatrix::identity(em.rows(), p), em);
      split_piece(pieces, k, gfp::column_space(em), gfp::column_space(one_minus));
      for (auto& pc : pieces) pc.stable = true;
      resplit = true;
    }
    if (!resplit) break;
  }

  for (auto& pc : pieces) d.pieces.push_back({m, std::move(pc.s), std::move(pc.p)});
  const std::size_t K = d.pieces.size();
  d.class_of.assign(K, -1);
  for (std::size_t k = 0; k < K; ++k) {
    for (std::size_t c = 0; c < d.classes.size() && d.class_of[k] < 0; ++c) {
      const std::size_t r = d.classes[c].front();
      if (d.pieces[r].dim() != d.pieces[k].dim() || d.piece_end_dim[r] != d.piece_end_dim[k] ||
          d.residue_degree[r] != d.residue_degree[k])
        continue;
      if (some_composition_invertible(d.hom[k][r], d.hom[r][k], rng)) {
        d.class_of[k] = static_cast<int>(c);
        d.classes[c].push_back(k);
      }
    }
    if (d.class_of[k] < 0) {
      d.class_of[k] = static_cast<int>(d.classes.size());
      d.classes.push_back({k});
    }
  }
  Index total = 0;
  for (const auto& s : d.pieces) total += s.dim();
  if (total != N) throw IntegrityError("decomposition does not exhaust the module");
  return d;
}

std::vector<SummandRecord> records_of(const Decomposition& d) {
  std::vector<SummandRecord> out;
  const int p = d.module->p;
  const Index N = static_cast<Index>(d.module->dim());
  for (std::size_t c = 0; c < d.classes.size(); ++c) {
    SummandRecord r;
    r.parent = d.module->label;
    r.idempotent = FpMatrix(N, N, p);
    for (std::size_t k : d.classes[c]) r.idempotent = gfp::add(r.idempotent, d.pieces[k].idempotent());
    r.dim = d.pieces[d.classes[c].front()].dim();
    r.multiplicity = static_cast<int>(d.classes[c].size());
    r.iso_class = static_cast<int>(c);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<SummandRecord> split_idempotents(const EndAlgebra& a, const SignedPermModule& m) {
  auto ptr = a.module_ptr() ? a.module_ptr() : std::make_shared<const SignedPermModule>(m);
  return records_of(decompose_module(ptr, DecomposeOptions{}));
}

FpMatrix sample_hom(const Summand& u, const Summand& v, const HomBasis& h, std::mt19937_64& rng) {
  return gfp::mul(v.proj, gfp::mul(h.random_element(rng), u.basis));
}

namespace {

std::vector<FpMatrix> sampled_hom_basis(const Summand& u, const Summand& v, const HomBasis& h, std::mt19937_64& rng) {
  std::vector<FpMatrix> out;
  if (h.size() == 0) return out;
  gfp::IncrementalSpan<std::int32_t> span(u.dim() * v.dim(), u.parent->p);
  for (int idle = 0; idle < 20;) {
    FpMatrix x = sample_hom(u, v, h, rng);
    if (span.insert(flatten(x))) {
      out.push_back(std::move(x));
      idle = 0;
    } else {
      ++idle;
    }
  }
  return out;
}

}  // namespace

bool modules_isomorphic(const Summand& u, const Summand& v, std::mt19937_64& rng, const HomBasis* uv,
                        const HomBasis* vu) {
  if (u.parent->n != v.parent->n || u.parent->p != v.parent->p) return false;
  if (u.dim() != v.dim()) return false;
  std::optional<HomBasis> own_uv, own_vu;
  if (!uv) uv = &own_uv.emplace(*u.parent, *v.parent);
  if (!vu) vu = &own_vu.emplace(*v.parent, *u.parent);
  if (uv->size() == 0 || vu->size() == 0) return false;
  for (int t = 0; t < 12; ++t)
    if (gfp::is_invertible(sample_hom(u, v, *uv, rng))) return true;
  auto there = sampled_hom_basis(u, v, *uv, rng);
  auto back = sampled_hom_basis(v, u, *vu, rng);
  for (const auto& b : back)
    for (const auto& a : there)
      if (gfp::is_invertible(gfp::mul(b, a))) return true;
  return false;
}

bool modules_isomorphic(const SignedPermModule& m, const SignedPermModule& n, std::uint64_t seed) {
  if (m.n != n.n || m.p != n.p || m.dim() != n.dim()) return false;
  HomBasis mn(m, n), nm(n, m);
  if (HomBasis(m, m).size() != mn.size() || HomBasis(n, n).size() != mn.size()) return false;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int t = 0; t < 8; ++t)
    if (gfp::is_invertible(mn.random_element(rng))) return true;
  auto pm = std::make_shared<const SignedPermModule>(m);
  auto pn = std::make_shared<const SignedPermModule>(n);
  Decomposition dm = decompose_module(pm, DecomposeOptions{seed});
  Decomposition dn = decompose_module(pn, DecomposeOptions{seed});
  if (dm.classes.size() != dn.classes.size()) return false;
  std::vector<char> used(dn.classes.size(), 0);
  for (const auto& cm : dm.classes) {
    bool matched = false;
    const Summand& u = dm.pieces[cm.front()];
    for (std::size_t j = 0; j < dn.classes.size() && !matched; ++j) {
      if (used[j] || dn.classes[j].size() != cm.size()) continue;
      if (modules_isomorphic(u, dn.pieces[dn.classes[j].front()], rng, &mn, &nm)) {
        used[j] = 1;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace skostka::modrep
