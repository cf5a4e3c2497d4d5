#include <doctest.h>

#include <random>

#include "skostka/gfp/matrix.hpp"
#include "skostka/gfp/poly.hpp"

using namespace skostka::gfp;

namespace {
FpMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows, int p) {
  FpMatrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()), p);
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (int v : r) m.set(i, j++, v);
    ++i;
  }
  return m;
}
}  // namespace

TEST_CASE("scalar inverse") {
  CHECK(inv_mod(2, 3) == 2);
  CHECK(FpScalar(2, 3) * FpScalar(2, 3) == FpScalar(1, 3));
  CHECK_THROWS(inv_mod(0, 5));
  auto x = solve(from_rows({{2}}, 3), from_rows({{1}}, 3));
  REQUIRE(x);
  CHECK((*x)(0, 0) == 2);
}

TEST_CASE("rank, nullspace and inverse") {
  const FpMatrix a = from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 1}}, 3);  // rows 1,2 are dependent mod 3
  CHECK(rank(a) == 2);
  const FpMatrix ns = nullspace(a);
  CHECK(ns.rows() == 1);
  CHECK(mul(a, ns.transpose()).is_zero());
  CHECK_FALSE(inverse(a));
  const FpMatrix b = from_rows({{1, 1}, {0, 1}}, 5);
  auto bi = inverse(b);
  REQUIRE(bi);
  CHECK(mul(b, *bi) == FpMatrix::identity(2, 5));
  CHECK_FALSE(solve(from_rows({{0}}, 3), from_rows({{1}}, 3)));
  CHECK_THROWS(mul(from_rows({{1, 2}}, 3), from_rows({{1, 2}}, 3)));
}

TEST_CASE("random matrices: inverse and solve are consistent") {
  std::mt19937_64 rng(7);
  for (int p : {3, 5, 7}) {
    for (int t = 0; t < 20; ++t) {
      const FpMatrix m = FpMatrix::random(6, 6, p, rng);
      auto inv = inverse(m);
      CHECK(static_cast<bool>(inv) == (rank(m) == 6));
      if (inv) CHECK(mul(*inv, m) == FpMatrix::identity(6, p));
      CHECK(rank(m) + nullspace(m).rows() == 6);
    }
  }
}

TEST_CASE("large products reduce correctly") {
  std::mt19937_64 rng(3);
  const FpMatrix a = FpMatrix::random(3, 40, 7, rng), b = FpMatrix::random(40, 2, 7, rng);
  const FpMatrix c = mul(a, b);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 2; ++j) {
      std::int64_t s = 0;
      for (Index k = 0; k < 40; ++k) s += static_cast<std::int64_t>(a(i, k)) * b(k, j);
      CHECK(c(i, j) == s % 7);
    }
}

TEST_CASE("polynomials") {
  // (x+1)(x+2) = x^2 + 3x + 2 = x^2 + 2 over GF(3)
  const Poly f = poly_mul({1, 1}, {2, 1}, 3);
  CHECK(f == Poly{2, 0, 1});
  CHECK(poly_gcd(f, {1, 1}, 3) == Poly{1, 1});
  CHECK(poly_is_irreducible({1, 0, 1}, 3));
  CHECK_FALSE(poly_is_irreducible(f, 3));
  auto roots = poly_roots(f, 3);
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<std::int64_t>{1, 2});
  auto [q, r] = poly_divmod({1, 0, 0, 1}, {1, 1}, 3);
  CHECK(poly_trim(r).empty());
}
