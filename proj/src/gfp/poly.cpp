#include "skostka/gfp/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace skostka::gfp {

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

int poly_degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly poly_add(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = reduce((i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0), p);
  return poly_trim(std::move(r));
}

Poly poly_sub(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = reduce((i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0), p);
  return poly_trim(std::move(r));
}

Poly poly_mul(const Poly& a, const Poly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  return poly_trim(std::move(r));
}

std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, std::int64_t p) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  Poly r = poly_trim(a);
  if (r.size() < b.size()) return {{}, r};
  Poly q(r.size() - b.size() + 1, 0);
  const std::int64_t inv = inv_mod(b.back(), p);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::int64_t c = r[k + b.size() - 1] * inv % p;
    q[k] = c;
    if (!c) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k + j] = reduce(r[k + j] - c * b[j], p);
  }
  return {poly_trim(std::move(q)), poly_trim(std::move(r))};
}

Poly poly_mod(const Poly& a, const Poly& b, std::int64_t p) { return poly_divmod(a, b, p).second; }

Poly poly_monic(const Poly& a, std::int64_t p) {
  Poly r = poly_trim(a);
  if (r.empty()) return r;
  const std::int64_t inv = inv_mod(r.back(), p);
  for (auto& c : r) c = c * inv % p;
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return poly_monic(a, p);
}

Bezout poly_xgcd(const Poly& a, const Poly& b, std::int64_t p) {
  Poly r0 = poly_trim(a), r1 = poly_trim(b);
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = poly_divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
    Poly t2 = poly_sub(t0, poly_mul(q, t1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) return {{}, {}, {}};
  const std::int64_t inv = inv_mod(r0.back(), p);
  Poly c{inv};
  return {poly_mul(r0, c, p), poly_mul(s0, c, p), poly_mul(t0, c, p)};
}

Poly poly_derivative(const Poly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = static_cast<std::int64_t>(i) % p * a[i] % p;
  return poly_trim(std::move(r));
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& mod, std::int64_t p) {
  Poly r = poly_mod(Poly{1}, mod, p);
  base = poly_mod(base, mod, p);
  while (e) {
    if (e & 1) r = poly_mod(poly_mul(r, base, p), mod, p);
    e >>= 1;
    if (e) base = poly_mod(poly_mul(base, base, p), mod, p);
  }
  return r;
}

namespace {

Poly pth_root(const Poly& f, std::int64_t p) {
  Poly r;
  for (std::size_t i = 0; i < f.size(); i += static_cast<std::size_t>(p)) r.push_back(f[i]);
  return poly_trim(std::move(r));
}

Poly lcm(const Poly& a, const Poly& b, std::int64_t p) {
  Poly g = poly_gcd(a, b, p);
  return poly_monic(poly_divmod(poly_mul(a, b, p), g, p).first, p);
}

// x^(p^k) mod f via k successive p-th powers.
Poly frobenius_power(const Poly& y, int k, const Poly& f, std::int64_t p) {
  Poly r = poly_mod(y, f, p);
  for (int i = 0; i < k; ++i) r = poly_powmod(r, static_cast<std::uint64_t>(p), f, p);
  return r;
}

}  // namespace

Poly poly_radical(const Poly& f0, std::int64_t p) {
  Poly f = poly_monic(f0, p);
  if (poly_degree(f) <= 0) return Poly{1};
  Poly d = poly_derivative(f, p);
  if (d.empty()) return poly_radical(pth_root(f, p), p);
  Poly g = poly_gcd(f, d, p);
  Poly h = poly_monic(poly_divmod(f, g, p).first, p);
  if (poly_degree(g) == 0) return h;
  return lcm(h, poly_radical(g, p), p);
}

Poly poly_least_factor(const Poly& f0, std::int64_t p, std::mt19937_64& rng) {
  Poly f = poly_monic(f0, p);
  if (poly_degree(f) < 1) throw std::invalid_argument("poly_least_factor: constant polynomial");
  Poly x{0, 1};
  Poly xq = poly_mod(x, f, p);
  int d = 0;
  Poly g;
  while (true) {
    ++d;
    xq = poly_powmod(xq, static_cast<std::uint64_t>(p), f, p);
    g = poly_gcd(f, poly_sub(xq, x, p), p);
    if (poly_degree(g) > 0) break;
    if (2 * d > poly_degree(f)) return f;
  }
  // g is the product of the irreducible factors of degree d.
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  while (poly_degree(g) > d) {
    Poly a(static_cast<std::size_t>(poly_degree(g)));
    for (auto& c : a) c = dist(rng);
    a = poly_trim(std::move(a));
    if (poly_degree(a) < 1) continue;
    Poly s = poly_gcd(g, a, p);
    if (poly_degree(s) > 0 && poly_degree(s) < poly_degree(g)) {
      g = poly_degree(s) < poly_degree(g) - poly_degree(s) ? s : poly_monic(poly_divmod(g, s, p).first, p);
      continue;
    }
    // b = a^((p^d - 1)/2) = (prod_{k<d} a^(p^k))^((p-1)/2)
    Poly prod{1};
    Poly ak = poly_mod(a, g, p);
    for (int k = 0; k < d; ++k) {
      prod = poly_mod(poly_mul(prod, ak, p), g, p);
      if (k + 1 < d) ak = frobenius_power(ak, 1, g, p);
    }
    Poly b = poly_powmod(prod, static_cast<std::uint64_t>((p - 1) / 2), g, p);
    Poly s2 = poly_gcd(g, poly_sub(b, Poly{1}, p), p);
    if (poly_degree(s2) > 0 && poly_degree(s2) < poly_degree(g))
      g = poly_degree(s2) <= poly_degree(g) - poly_degree(s2) ? s2 : poly_monic(poly_divmod(g, s2, p).first, p);
  }
  return g;
}

bool poly_is_irreducible(const Poly& f0, std::int64_t p) {
  Poly f = poly_monic(f0, p);
  const int n = poly_degree(f);
  if (n < 1) return false;
  Poly x{0, 1};
  Poly xq = poly_mod(x, f, p);
  for (int d = 1; 2 * d <= n; ++d) {
    xq = poly_powmod(xq, static_cast<std::uint64_t>(p), f, p);
    if (poly_degree(poly_gcd(f, poly_sub(xq, x, p), p)) > 0) return false;
  }
  return true;
}

std::vector<std::int64_t> poly_roots(const Poly& f0, std::int64_t p) {
  Poly f = poly_trim(f0);
  std::vector<std::int64_t> roots;
  for (std::int64_t a = 0; a < p; ++a) {
    std::int64_t v = 0;
    for (std::size_t k = f.size(); k-- > 0;) v = (v * a + f[k]) % p;
    if (v == 0) roots.push_back(a);
  }
  return roots;
}

}  // namespace skostka::gfp
