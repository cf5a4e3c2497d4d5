#include "skostka/modrep/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "skostka/gfp/poly.hpp"
#include "skostka/modrep/decompose.hpp"

namespace skostka::modrep {

namespace {

Coords unit(std::size_t m, std::size_t k) {
  Coords c(m, 0);
  c[k] = 1;
  return c;
}

Coords combine(const std::vector<Coords>& basis, const Coords& c, std::size_t m, std::int64_t p) {
  Coords out(m, 0);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!c[k]) continue;
    for (std::size_t j = 0; j < m; ++j) out[j] = (out[j] + c[k] * basis[k][j]) % p;
  }
  return out;
}

FpMatrix rows_matrix(const std::vector<Coords>& v, std::size_t m, int p) {
  FpMatrix out(static_cast<Index>(v.size()), static_cast<Index>(m), p);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) out.set(static_cast<Index>(i), static_cast<Index>(j), v[i][j]);
  return out;
}

std::vector<Coords> matrix_rows(const FpMatrix& a) {
  std::vector<Coords> out(static_cast<std::size_t>(a.rows()), Coords(static_cast<std::size_t>(a.cols())));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j) out[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = a(i, j);
  return out;
}

bool is_zero(const Coords& c) {
  return std::all_of(c.begin(), c.end(), [](std::int64_t x) { return x == 0; });
}

// (Tr(X^(p^i)) mod p^(i+1)) / p^i for an integer lift X of a residue matrix.
std::int64_t trace_power_digit(const FpMatrix& x, int p, int i) {
  std::int64_t q = 1;
  for (int k = 0; k <= i; ++k) q *= p;
  using IntMat = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
  IntMat m = x.data().cast<std::int64_t>();
  auto mulmod = [q](const IntMat& a, const IntMat& b) {
    IntMat r = IntMat::Zero(a.rows(), b.cols());
    for (Index r0 = 0; r0 < a.rows(); ++r0)
      for (Index k = 0; k < a.cols(); ++k) {
        const std::int64_t v = a(r0, k);
        if (!v) continue;
        for (Index c = 0; c < b.cols(); ++c) r(r0, c) = (r(r0, c) + v * b(k, c)) % q;
      }
    return r;
  };
  for (int k = 0; k < i; ++k) {
    IntMat acc = IntMat::Identity(m.rows(), m.cols());
    IntMat base = m;
    int e = p;
    while (e) {
      if (e & 1) acc = mulmod(acc, base);
      e >>= 1;
      if (e) base = mulmod(base, base);
    }
    m = acc;
  }
  std::int64_t t = 0;
  for (Index k = 0; k < m.rows(); ++k) t = (t + m(k, k)) % q;
  const std::int64_t scale = q / p;
  if (t % scale != 0) throw IntegrityError("trace chain: trace not divisible by the expected prime power");
  return t / scale;
}

// Core of the chain. rep maps coordinates to a faithful matrix; mul multiplies coordinates.
template <typename Rep, typename Mul>
std::vector<Coords> trace_chain(std::size_t m, int p, Index degree, Rep rep, Mul mul) {
  std::vector<Coords> ideal;
  for (std::size_t k = 0; k < m; ++k) ideal.push_back(unit(m, k));
  int levels = 0;
  for (Index q = p; q <= degree; q *= p) ++levels;
  for (int i = 0; i <= levels && !ideal.empty(); ++i) {
    FpMatrix g(static_cast<Index>(m), static_cast<Index>(ideal.size()), p);
    for (std::size_t k = 0; k < ideal.size(); ++k)
      for (std::size_t j = 0; j < m; ++j)
        g.set(static_cast<Index>(j), static_cast<Index>(k), trace_power_digit(rep(mul(ideal[k], unit(m, j))), p, i));
    FpMatrix ns = gfp::nullspace(g);
    std::vector<Coords> next;
    for (Index r = 0; r < ns.rows(); ++r) {
      Coords c(ideal.size());
      for (std::size_t k = 0; k < ideal.size(); ++k) c[k] = ns(r, static_cast<Index>(k));
      next.push_back(combine(ideal, c, m, p));
    }
    ideal = std::move(next);
  }
  if (ideal.empty()) return ideal;
  return matrix_rows(gfp::row_space(rows_matrix(ideal, m, p)));
}

}  // namespace

EndAlgebra::EndAlgebra(std::vector<FpMatrix> basis, int p) : dim_(basis.size()), p_(p), basis_(std::move(basis)) {
  if (basis_.empty()) throw std::invalid_argument("EndAlgebra: empty basis");
  degree_ = basis_[0].rows();
  const Index len = degree_ * degree_;
  FpMatrix flat(static_cast<Index>(dim_), len, p_);
  for (std::size_t k = 0; k < dim_; ++k) {
    if (basis_[k].rows() != degree_ || basis_[k].cols() != degree_)
      throw std::invalid_argument("EndAlgebra: basis matrices must be square of one size");
    for (Index a = 0; a < degree_; ++a)
      for (Index b = 0; b < degree_; ++b) flat.raw()(static_cast<Index>(k), a * degree_ + b) = basis_[k](a, b);
  }
  auto rr = gfp::rref(flat);
  if (rr.pivots.size() != dim_) throw std::invalid_argument("EndAlgebra: basis is linearly dependent");
  FpMatrix bp(static_cast<Index>(dim_), static_cast<Index>(dim_), p_);
  for (std::size_t j = 0; j < dim_; ++j) {
    const Index c = rr.pivots[j];
    pivots_.emplace_back(c / degree_, c % degree_);
    for (std::size_t k = 0; k < dim_; ++k) bp.raw()(static_cast<Index>(k), static_cast<Index>(j)) = flat(static_cast<Index>(k), c);
  }
  coord_inverse_ = *gfp::inverse(bp);
  finish_setup();
}

EndAlgebra EndAlgebra::of_module(std::shared_ptr<const SignedPermModule> m) {
  EndAlgebra a;
  a.p_ = m->p;
  a.module_ = m;
  a.hom_ = std::make_shared<HomBasis>(*m, *m);
  a.dim_ = a.hom_->size();
  a.degree_ = static_cast<Index>(m->dim());
  const std::size_t n = m->dim();
  a.by_row_.resize(n);
  for (std::size_t y = 0; y < n; ++y) {
    auto& row = a.by_row_[y];
    for (std::size_t x = 0; x < n; ++x) {
      const auto o = a.hom_->orbit_of(y, x);
      if (o >= 0) row.push_back({o, static_cast<std::int32_t>(x), a.hom_->sign_of(y, x)});
    }
    std::sort(row.begin(), row.end(), [](const Entry& l, const Entry& r) { return l.orbit < r.orbit; });
  }
  a.finish_setup();
  return a;
}

void EndAlgebra::finish_setup() {
  one_ = coordinates(FpMatrix::identity(degree_, p_));
  if (!(combination(one_) == FpMatrix::identity(degree_, p_)))
    throw std::invalid_argument("EndAlgebra: identity not in the span of the basis");
}

FpMatrix EndAlgebra::element(std::size_t k) const {
  if (hom_) return hom_->element(k);
  return basis_.at(k);
}

FpMatrix EndAlgebra::combination(const Coords& c) const {
  if (hom_) return hom_->combination(c);
  FpMatrix out(degree_, degree_, p_);
  for (std::size_t k = 0; k < dim_; ++k)
    if (gfp::reduce(c[k], p_)) out = gfp::add(out, gfp::scale(c[k], basis_[k]));
  return out;
}

Coords EndAlgebra::coordinates(const FpMatrix& x) const {
  if (hom_) return hom_->coordinates(x);
  FpMatrix v(1, static_cast<Index>(dim_), p_);
  for (std::size_t j = 0; j < dim_; ++j) v.raw()(0, static_cast<Index>(j)) = x(pivots_[j].first, pivots_[j].second);
  FpMatrix c = gfp::mul(v, coord_inverse_);
  Coords out(dim_);
  for (std::size_t j = 0; j < dim_; ++j) out[j] = c(0, static_cast<Index>(j));
  return out;
}

const Coords& EndAlgebra::product(std::size_t i, std::size_t j) const {
  auto key = std::make_pair(i, j);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Coords c;
  if (hom_) {
    c.assign(dim_, 0);
    const auto& reps = hom_->reps();
    const auto oi = static_cast<std::int32_t>(i), oj = static_cast<std::int32_t>(j);
    for (std::size_t k = 0; k < dim_; ++k) {
      const auto [y, x] = reps[k];
      const auto& row = by_row_[y];
      auto lo = std::lower_bound(row.begin(), row.end(), oi, [](const Entry& e, std::int32_t v) { return e.orbit < v; });
      std::int64_t val = 0;
      for (auto e = lo; e != row.end() && e->orbit == oi; ++e) {
        const auto z = static_cast<std::size_t>(e->col);
        if (hom_->orbit_of(z, x) == oj) val += e->sign * hom_->sign_of(z, x);
      }
      c[k] = gfp::reduce(val * hom_->sign_of(y, x), p_);
    }
  } else {
    c = coordinates(gfp::mul(basis_[i], basis_[j]));
  }
  return cache_.emplace(key, std::move(c)).first->second;
}

Coords EndAlgebra::multiply(const Coords& a, const Coords& b) const {
  Coords out(dim_, 0);
  for (std::size_t i = 0; i < dim_; ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!b[j]) continue;
      const auto& pr = product(i, j);
      const std::int64_t f = a[i] * b[j] % p_;
      for (std::size_t k = 0; k < dim_; ++k) out[k] = (out[k] + f * pr[k]) % p_;
    }
  }
  return out;
}

StructureAlgebra StructureAlgebra::from(const EndAlgebra& a) {
  StructureAlgebra s;
  s.p = a.modulus();
  s.dim = a.dim();
  s.prod.assign(s.dim, std::vector<Coords>(s.dim));
  for (std::size_t i = 0; i < s.dim; ++i)
    for (std::size_t j = 0; j < s.dim; ++j) s.prod[i][j] = a.product(i, j);
  s.one = a.one();
  return s;
}

Coords StructureAlgebra::mul(const Coords& x, const Coords& y) const {
  Coords out(dim, 0);
  for (std::size_t i = 0; i < dim; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < dim; ++j) {
      if (!y[j]) continue;
      const std::int64_t f = x[i] * y[j] % p;
      const auto& pr = prod[i][j];
      for (std::size_t k = 0; k < dim; ++k) out[k] = (out[k] + f * pr[k]) % p;
    }
  }
  return out;
}

FpMatrix StructureAlgebra::left_regular(const Coords& x) const {
  FpMatrix l(static_cast<Index>(dim), static_cast<Index>(dim), p);
  for (std::size_t j = 0; j < dim; ++j) {
    Coords c = mul(x, unit(dim, j));
    for (std::size_t k = 0; k < dim; ++k) l.raw()(static_cast<Index>(k), static_cast<Index>(j)) = static_cast<std::int32_t>(c[k]);
  }
  return l;
}

Coords StructureAlgebra::power(Coords x, std::uint64_t e) const {
  Coords r = one;
  while (e) {
    if (e & 1) r = mul(r, x);
    e >>= 1;
    if (e) x = mul(x, x);
  }
  return r;
}

bool StructureAlgebra::commutative() const {
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      if (prod[i][j] != prod[j][i]) return false;
  return true;
}

std::vector<Coords> radical_coords(const StructureAlgebra& a) {
  return trace_chain(
      a.dim, a.p, static_cast<Index>(a.dim), [&](const Coords& x) { return a.left_regular(x); },
      [&](const Coords& x, const Coords& y) { return a.mul(x, y); });
}

std::vector<Coords> radical_of_matrices(const std::vector<FpMatrix>& basis, int p) {
  EndAlgebra a(basis, p);
  return trace_chain(
      a.dim(), p, a.degree(), [&](const Coords& x) { return a.combination(x); },
      [&](const Coords& x, const Coords& y) { return a.multiply(x, y); });
}

std::vector<FpMatrix> radical(const EndAlgebra& a) {
  std::vector<Coords> j;
  if (a.module() == nullptr && a.degree() <= static_cast<Index>(a.dim())) {
    j = trace_chain(
        a.dim(), a.modulus(), a.degree(), [&](const Coords& x) { return a.combination(x); },
        [&](const Coords& x, const Coords& y) { return a.multiply(x, y); });
  } else {
    j = radical_coords(StructureAlgebra::from(a));
  }
  std::vector<FpMatrix> out;
  for (const auto& c : j) out.push_back(a.combination(c));
  // the quotient must be semisimple
  StructureAlgebra s = StructureAlgebra::from(a);
  Quotient q = semisimple_quotient(s);
  if (!radical_coords(q.alg).empty()) throw IntegrityError("radical: quotient is not semisimple");
  return out;
}

Quotient semisimple_quotient(const StructureAlgebra& a) {
  Quotient q;
  q.radical = radical_coords(a);
  const std::int64_t p = a.p;
  std::vector<std::size_t> piv;
  for (const auto& r : q.radical)
    for (std::size_t k = 0; k < a.dim; ++k)
      if (r[k]) {
        piv.push_back(k);
        break;
      }
  std::vector<char> is_piv(a.dim, 0);
  for (auto k : piv) is_piv[k] = 1;
  for (std::size_t k = 0; k < a.dim; ++k)
    if (!is_piv[k]) q.lift.push_back(k);
  auto reduce_mod_j = [&](Coords x) {
    for (std::size_t r = 0; r < q.radical.size(); ++r) {
      const std::int64_t f = x[piv[r]];
      if (!f) continue;
      for (std::size_t k = 0; k < a.dim; ++k) x[k] = gfp::reduce(x[k] - f * q.radical[r][k], p);
    }
    Coords out;
    for (auto k : q.lift) out.push_back(x[k]);
    return out;
  };
  const std::size_t s = q.lift.size();
  q.alg.p = a.p;
  q.alg.dim = s;
  q.alg.prod.assign(s, std::vector<Coords>(s));
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < s; ++j) q.alg.prod[i][j] = reduce_mod_j(a.prod[q.lift[i]][q.lift[j]]);
  q.alg.one = reduce_mod_j(a.one);
  return q;
}

namespace {

// Basis (coords) of the subspace {z in span(basis) : z^p = z}, assuming span(basis) is a commutative subalgebra.
std::vector<Coords> berlekamp_subalgebra(const StructureAlgebra& s, const std::vector<Coords>& basis) {
  const std::int64_t p = s.p;
  FpMatrix f(static_cast<Index>(s.dim), static_cast<Index>(basis.size()), s.p);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    Coords z = s.power(basis[k], static_cast<std::uint64_t>(p));
    for (std::size_t j = 0; j < s.dim; ++j) f.set(static_cast<Index>(j), static_cast<Index>(k), z[j] - basis[k][j]);
  }
  FpMatrix ns = gfp::nullspace(f);
  std::vector<Coords> out;
  for (Index r = 0; r < ns.rows(); ++r) {
    Coords c(basis.size());
    for (std::size_t k = 0; k < basis.size(); ++k) c[k] = ns(r, static_cast<Index>(k));
    out.push_back(combine(basis, c, s.dim, p));
  }
  return out;
}

std::vector<Coords> center(const StructureAlgebra& s) {
  FpMatrix c(static_cast<Index>(s.dim * s.dim), static_cast<Index>(s.dim), s.p);
  for (std::size_t a = 0; a < s.dim; ++a)
    for (std::size_t b = 0; b < s.dim; ++b)
      for (std::size_t k = 0; k < s.dim; ++k)
        c.set(static_cast<Index>(b * s.dim + k), static_cast<Index>(a), s.prod[a][b][k] - s.prod[b][a][k]);
  return matrix_rows(gfp::nullspace(c));
}

Index span_rank(const std::vector<Coords>& v, std::size_t m, int p) {
  if (v.empty()) return 0;
  return gfp::rank(rows_matrix(v, m, p));
}

// Primitive idempotents of the split commutative algebra spanned by b (every element satisfies z^p = z).
std::vector<Coords> split_idempotents_of(const StructureAlgebra& s, const std::vector<Coords>& b, std::mt19937_64& rng) {
  const std::int64_t p = s.p;
  std::vector<Coords> idem{s.one};
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (int attempt = 0; idem.size() < b.size(); ++attempt) {
    if (attempt > 1000) throw IntegrityError("failed to split a commutative semisimple algebra");
    Coords c(b.size());
    for (auto& x : c) x = dist(rng);
    Coords z = combine(b, c, s.dim, p);
    std::vector<Coords> next;
    for (const auto& e : idem) {
      for (std::int64_t lam = 0; lam < p; ++lam) {
        Coords w = z;
        for (std::size_t k = 0; k < s.dim; ++k) w[k] = gfp::reduce(w[k] - lam * s.one[k], p);
        Coords pw = s.power(w, static_cast<std::uint64_t>(p - 1));
        Coords el(s.dim);
        for (std::size_t k = 0; k < s.dim; ++k) el[k] = gfp::reduce(s.one[k] - pw[k], p);
        Coords f = s.mul(e, el);
        if (!is_zero(f)) next.push_back(f);
      }
    }
    idem = std::move(next);
  }
  return idem;
}

}  // namespace

std::vector<WedderburnComponent> wedderburn_structural(const StructureAlgebra& a) {
  Quotient q = semisimple_quotient(a);
  const StructureAlgebra& s = q.alg;
  std::vector<Coords> z = center(s);
  std::vector<Coords> b = berlekamp_subalgebra(s, z);
  std::mt19937_64 rng(0x5eed);
  std::vector<Coords> eps = split_idempotents_of(s, b, rng);
  std::vector<WedderburnComponent> out;
  for (const auto& e : eps) {
    std::vector<Coords> es, ez;
    for (std::size_t j = 0; j < s.dim; ++j) es.push_back(s.mul(e, unit(s.dim, j)));
    for (const auto& zz : z) ez.push_back(s.mul(e, zz));
    const Index ds = span_rank(es, s.dim, s.p), de = span_rank(ez, s.dim, s.p);
    const int m = static_cast<int>(std::lround(std::sqrt(static_cast<double>(ds) / static_cast<double>(de))));
    if (static_cast<Index>(m) * m * de != ds) throw IntegrityError("wedderburn: component dimension is not m^2 e");
    out.push_back({m, static_cast<int>(de)});
  }
  std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return std::tie(l.m, l.e) < std::tie(r.m, r.e); });
  return out;
}

std::vector<WedderburnComponent> wedderburn(const EndAlgebra& a) {
  if (a.module() != nullptr && a.dim() > 48) {
    Decomposition d = decompose_module(a.module_ptr(), DecomposeOptions{});
    std::vector<WedderburnComponent> out;
    for (const auto& cls : d.classes) out.push_back({static_cast<int>(cls.size()), d.residue_degree[cls.front()]});
    std::sort(out.begin(), out.end(), [](const auto& l, const auto& r) { return std::tie(l.m, l.e) < std::tie(r.m, r.e); });
    return out;
  }
  return wedderburn_structural(StructureAlgebra::from(a));
}

int local_residue_degree(const StructureAlgebra& a) {
  Quotient q = semisimple_quotient(a);
  const StructureAlgebra& s = q.alg;
  if (s.dim == 0 || !s.commutative()) return 0;
  std::vector<Coords> all;
  for (std::size_t k = 0; k < s.dim; ++k) all.push_back(unit(s.dim, k));
  if (berlekamp_subalgebra(s, all).size() != 1) return 0;
  return static_cast<int>(s.dim);
}

Coords lift_idempotent(const StructureAlgebra& a, Coords e) {
  const std::int64_t p = a.p;
  for (std::size_t it = 0; it <= a.dim + 2; ++it) {
    Coords e2 = a.mul(e, e);
    if (e2 == e) return e;
    Coords e3 = a.mul(e2, e);
    for (std::size_t k = 0; k < a.dim; ++k) e[k] = gfp::reduce(3 * e2[k] - 2 * e3[k], p);
  }
  throw IntegrityError("lift_idempotent: refinement did not converge");
}

std::optional<Coords> nontrivial_idempotent(const StructureAlgebra& a, std::mt19937_64& rng) {
  Quotient q = semisimple_quotient(a);
  const StructureAlgebra& s = q.alg;
  const std::int64_t p = a.p;
  std::vector<Coords> z = center(s);
  std::vector<Coords> b = berlekamp_subalgebra(s, z);
  std::optional<Coords> found;
  if (b.size() >= 2) {
    found = split_idempotents_of(s, b, rng).front();
  } else if (!s.commutative()) {
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    for (int attempt = 0; attempt < 500 && !found; ++attempt) {
      Coords x(s.dim);
      for (auto& v : x) v = dist(rng);
      FpMatrix lx = s.left_regular(x);
      gfp::Poly mu = gfp::minimal_polynomial(lx);
      gfp::Poly r = gfp::poly_radical(mu, p);
      if (gfp::poly_degree(r) < 2 || gfp::poly_is_irreducible(r, p)) continue;
      gfp::Poly g = gfp::poly_least_factor(r, p, rng);
      gfp::Poly ga{1}, h = mu;
      while (true) {
        auto [qq, rem] = gfp::poly_divmod(h, g, p);
        if (!rem.empty()) break;
        h = qq;
        ga = gfp::poly_mul(ga, g, p);
      }
      auto bz = gfp::poly_xgcd(ga, h, p);
      gfp::Poly vh = gfp::poly_mul(bz.v, h, p);
      FpMatrix le = gfp::poly_eval(vh, lx);
      Coords e(s.dim);
      for (std::size_t k = 0; k < s.dim; ++k) {
        std::int64_t acc = 0;
        for (std::size_t j = 0; j < s.dim; ++j) acc += static_cast<std::int64_t>(le(static_cast<Index>(k), static_cast<Index>(j))) * s.one[j];
        e[k] = gfp::reduce(acc, p);
      }
      if (!is_zero(e) && e != s.one) found = e;
    }
    if (!found) throw IntegrityError("nontrivial_idempotent: no splitting element found");
  } else {
    return std::nullopt;
  }
  Coords lifted(a.dim, 0);
  for (std::size_t k = 0; k < q.lift.size(); ++k) lifted[q.lift[k]] = (*found)[k];
  return lift_idempotent(a, lifted);
}

}  // namespace skostka::modrep
