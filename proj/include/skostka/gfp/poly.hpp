#ifndef SKOSTKA_GFP_POLY_HPP
#define SKOSTKA_GFP_POLY_HPP

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "skostka/gfp/matrix.hpp"

namespace skostka::gfp {

// Polynomial over GF(p), coefficients from low to high degree, no trailing zeros.
using Poly = std::vector<std::int64_t>;

Poly poly_trim(Poly a);
int poly_degree(const Poly& a);
Poly poly_add(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p);
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_mod(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_monic(const Poly& a, std::int64_t p);
Poly poly_gcd(Poly a, Poly b, std::int64_t p);
// Returns (g, u, v) with u a + v b = g monic.
struct Bezout {
  Poly g, u, v;
};
Bezout poly_xgcd(const Poly& a, const Poly& b, std::int64_t p);
Poly poly_derivative(const Poly& a, std::int64_t p);
Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::int64_t p);

// Product of the distinct monic irreducible factors.
Poly poly_radical(const Poly& f, std::int64_t p);
// An irreducible monic factor of least degree of a squarefree f with deg f >= 1.
Poly poly_least_factor(const Poly& f, std::int64_t p, std::mt19937_64& rng);
bool poly_is_irreducible(const Poly& f, std::int64_t p);
// All distinct roots in GF(p).
std::vector<std::int64_t> poly_roots(const Poly& f, std::int64_t p);

template <typename S>
Matrix<S> poly_eval(const Poly& f, const Matrix<S>& x) {
  const Index n = x.rows();
  const std::int64_t p = x.modulus();
  Matrix<S> r(n, n, p);
  for (int k = poly_degree(f); k >= 0; --k) {
    r = mul(r, x);
    const std::int64_t c = f[static_cast<std::size_t>(k)];
    if (c)
      for (Index i = 0; i < n; ++i) r.set(i, i, r(i, i) + c);
  }
  return r;
}

// Monic minimal polynomial of the vector v (a column) under x.
template <typename S>
Poly krylov_minpoly(const Matrix<S>& x, const Matrix<S>& v) {
  const Index n = x.rows();
  const std::int64_t p = x.modulus();
  Matrix<S> k(n, n + 1, p);
  Matrix<S> cur = v;
  for (Index j = 0; j <= n; ++j) {
    k.raw().col(j) = cur.data().col(0);
    if (j < n) cur = mul(x, cur);
  }
  auto rr = rref(k);
  Index d = static_cast<Index>(rr.pivots.size());
  for (Index j = 0; j < d; ++j)
    if (rr.pivots[static_cast<std::size_t>(j)] != j) {
      d = j;
      break;
    }
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  f[static_cast<std::size_t>(d)] = 1;
  for (Index i = 0; i < d; ++i) f[static_cast<std::size_t>(i)] = reduce(-static_cast<std::int64_t>(rr.form(i, d)), p);
  return f;
}

// Monic minimal polynomial of x (through powers of x; intended for small matrices).
template <typename S>
Poly minimal_polynomial(const Matrix<S>& x) {
  const Index n = x.rows();
  const std::int64_t p = x.modulus();
  Matrix<S> k(n * n, n + 1, p);
  Matrix<S> cur = Matrix<S>::identity(n, p);
  for (Index j = 0; j <= n; ++j) {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) k.raw()(a * n + b, j) = cur(a, b);
    if (j < n) cur = mul(cur, x);
  }
  auto rr = rref(k);
  Index d = static_cast<Index>(rr.pivots.size());
  for (Index j = 0; j < d; ++j)
    if (rr.pivots[static_cast<std::size_t>(j)] != j) {
      d = j;
      break;
    }
  Poly f(static_cast<std::size_t>(d) + 1, 0);
  f[static_cast<std::size_t>(d)] = 1;
  for (Index i = 0; i < d; ++i) f[static_cast<std::size_t>(i)] = reduce(-static_cast<std::int64_t>(rr.form(i, d)), p);
  return f;
}

}  // namespace skostka::gfp

#endif
