#include <doctest.h>

#include <functional>
#include <set>

#include "skostka/lambda_engine.hpp"
#include "skostka/modrep/engine.hpp"

using namespace skostka;
using lambda::LambdaTuple;

namespace {

BiComposition bc(std::initializer_list<int> a, std::initializer_list<int> b) {
  return make_pair(Partition(a), Partition(b));
}

// Level-by-level enumeration: choose each level's pair with the right size, then keep
// families whose weighted sums give alpha and beta.
std::set<LambdaTuple> brute_lambda(const BiComposition& ab, const RhoShape& rho) {
  const std::size_t la = ab.first.length(), lb = ab.second.length();
  std::set<LambdaTuple> out;
  LambdaTuple cur;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long w) {
    if (i == rho.counts.size()) {
      std::vector<int> a(la, 0), b(lb, 0);
      long wi = 1;
      for (std::size_t q = 0; q < i; ++q, wi *= rho.p) {
        for (std::size_t j = 0; j < la; ++j) a[j] += static_cast<int>(wi * cur.gam[q][j]);
        for (std::size_t j = 0; j < lb; ++j) b[j] += static_cast<int>(wi * cur.del[q][j]);
      }
      if (a == ab.first.parts() && b == ab.second.parts()) {
        LambdaTuple t = cur;
        t.normalize();
        out.insert(t);
      }
      return;
    }
    for (const auto& c : enumerate_compositions(rho.counts[i], la + lb)) {
      std::vector<int> g(c.parts().begin(), c.parts().begin() + static_cast<long>(la));
      std::vector<int> d(c.parts().begin() + static_cast<long>(la), c.parts().end());
      bool fits = true;
      for (std::size_t j = 0; j < la; ++j) fits = fits && w * g[j] <= ab.first[j];
      for (std::size_t j = 0; j < lb; ++j) fits = fits && w * d[j] <= ab.second[j];
      if (!fits) continue;
      cur.gam.push_back(Composition(g));
      cur.del.push_back(Composition(d));
      rec(i + 1, w * rho.p);
      cur.gam.pop_back();
      cur.del.pop_back();
    }
  };
  rec(0, 1);
  return out;
}

}  // namespace

TEST_CASE("Lambda sets: conventions") {
  CHECK(lambda::enumerate_lambda(bc({}, {}), RhoShape{{}, 3}).size() == 1);
  auto one = lambda::enumerate_lambda(bc({1}, {}), RhoShape{{1}, 3});
  REQUIRE(one.size() == 1);
  CHECK(one[0].gam[0] == Composition{1});
  for (const auto& lam : enumerate_partitions(5))
    if (is_p_restricted(lam, 3))
      CHECK(lambda::enumerate_lambda_supp(make_pair(lam, Partition{}), PairP2p(lam, {}, 3)).size() == 1);
  CHECK_THROWS(lambda::enumerate_lambda(bc({2}, {}), RhoShape{{1}, 3}));
}

TEST_CASE("Lambda sets agree with a level-first enumeration") {
  for (int p : {3, 5})
    for (int n = 0; n <= 7; ++n)
      for (const auto& ab : enumerate_p2(n))
        for (const auto& x : enumerate_p2p(n, p)) {
          const RhoShape rho = rho_of(x);
          auto got = lambda::enumerate_lambda(ab, rho);
          std::set<LambdaTuple> s(got.begin(), got.end());
          CHECK(s.size() == got.size());
          CHECK(s == brute_lambda(ab, rho));
        }
}

TEST_CASE("worked example: three support tuples and k = 9") {
  const BiComposition ab = bc({1, 1, 1}, {6, 3, 3});
  const PairP2p x({2, 2, 1, 1}, {2, 1}, 3);
  auto supp = lambda::enumerate_lambda_supp(ab, x);
  REQUIRE(supp.size() == 3);
  std::set<std::pair<Composition, Composition>> deltas;
  for (const auto& t : supp) {
    REQUIRE(t.levels() >= 2);
    deltas.emplace(t.del[0], t.del[1]);
  }
  const std::set<std::pair<Composition, Composition>> want{
      {Composition{3, 0, 0}, Composition{1, 1, 1}},
      {Composition{0, 3, 0}, Composition{2, 0, 1}},
      {Composition{0, 0, 3}, Composition{2, 1, 0}}};
  CHECK(deltas == want);
  modrep::DirectEngine direct(3);
  lambda::ReductionEngine red(direct);
  CHECK(red.signed_kostka(ab, x) == 9);
  CHECK(red.signed_kostka(ab, x) == 9);  // memoized path
  for (const auto& t : supp) CHECK(red.summand(t, x) == 3);
}

TEST_CASE("reduction engine examples") {
  modrep::DirectEngine direct(3);
  lambda::ReductionEngine red(direct);
  for (const auto& x : enumerate_p2p(6, 3)) CHECK(red.signed_kostka(x.as_pair(), x) == 1);
  CHECK(red.signed_kostka(bc({5, 1}, {}), PairP2p({6}, {}, 3)) == 0);
  CHECK(red.kostka(Composition{4, 2}, Partition{5, 1}) == 1);
  CHECK(red.kostka(Composition{2, 4}, Partition{5, 1}) == 1);
  CHECK_THROWS(red.signed_kostka(bc({2}, {}), PairP2p({1}, {}, 3)));
  CHECK_THROWS(modrep::DirectEngine(4));
}

TEST_CASE("product and factor formulas: examples") {
  modrep::DirectEngine direct(3);
  lambda::ReductionEngine red(direct);
  CHECK(red.mullineux_factor(bc({3}, {3}), PairP2p({3}, {1}, 3)) == 1);
  CHECK(red.product_formula(bc({3}, {3}), PairP2p({3}, {1}, 3), 0, 0) == 1);
  CHECK_THROWS(red.product_formula(bc({3}, {3}), PairP2p({6}, {}, 3), 0, 0));
  // |alpha| = 3 = |lam| - |lam(0)|: the Mullineux image of lam(0) is restricted, so never (3).
  for (const auto& x : enumerate_p2p(6, 3)) {
    if (!x.mu.empty() || x.lam.size() - digit(x.lam, 3, 0).size() != 3) continue;
    for (const auto& a : enumerate_partitions(3)) {
      CHECK(red.mullineux_factor(make_pair(a, Partition{3}), x) == 0);
      CHECK(direct.multiplicity(make_pair(a, Partition{3}), x) == 0);
    }
  }
}

TEST_CASE("principal part and vanishing") {
  modrep::DirectEngine direct(3);
  lambda::ReductionEngine red(direct);
  using PP = std::vector<std::pair<PairP2p, long>>;
  CHECK(red.principal_part_formula(bc({3}, {3})) == PP{{PairP2p({3}, {1}, 3), 1}});
  CHECK(red.principal_part_formula(bc({2, 1}, {3})).empty());
  CHECK(red.principal_part_formula(bc({1, 1, 1, 1, 1, 1}, {})).empty());
  CHECK_THROWS(red.principal_part_formula(bc({2, 1, 1, 1}, {})));
  CHECK(lambda::vanishing_check(bc({2, 1}, {3}), PairP2p({6}, {}, 3)));
  CHECK(red.signed_kostka(bc({2, 1}, {3}), PairP2p({6}, {}, 3)) == 0);
  CHECK(lambda::vanishing_check(bc({}, {3, 3}), PairP2p({3}, {1}, 3)));
  CHECK(red.signed_kostka(bc({}, {3, 3}), PairP2p({3}, {1}, 3)) == 0);
  CHECK(lambda::vanishing_check(bc({3}, {3}), PairP2p({3}, {1}, 3)));
  CHECK_THROWS(lambda::vanishing_check(bc({2, 1}, {3}), PairP2p({2, 1}, {1}, 3)));
  CHECK(lambda::principal_by_digit(PairP2p({3, 3}, {}, 3)));
  CHECK_FALSE(lambda::principal_by_digit(PairP2p({4, 2}, {}, 3)));
  // (4,1,1) has an empty 3-core but a nonempty digit 0
  CHECK(lambda::principal_by_core(PairP2p({4, 1, 1}, {}, 3)));
  CHECK_FALSE(lambda::principal_by_digit(PairP2p({4, 1, 1}, {}, 3)));
}

TEST_CASE("reduction agrees with the direct engine at n=5 for p=3 and p=5") {
  for (int p : {3, 5}) {
    modrep::DirectEngine direct(p);
    lambda::ReductionEngine red(direct);
    for (int n = 0; n <= 5; ++n)
      for (const auto& ab : enumerate_p2(n))
        for (const auto& x : enumerate_p2p(n, p)) {
          const long k = direct.multiplicity(ab, x);
          CHECK(red.signed_kostka(ab, x) == k);
          CHECK(red.lambda_sum(ab, x) == k);
        }
  }
}
