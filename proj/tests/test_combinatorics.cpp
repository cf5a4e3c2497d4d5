#include <doctest.h>

#include <set>

#include "skostka/combinatorics.hpp"

using namespace skostka;

TEST_CASE("sorting and concatenation") {
  CHECK(wp(Composition{2, 0, 1}) == Partition{2, 1});
  CHECK(wp(Composition{0, 0, 3}) == Partition{3});
  CHECK(wp(Composition{}).empty());
  CHECK(concat(Partition{3, 2}, Partition{1, 1}) == Partition{3, 2, 1, 1});
  CHECK(concat(Partition{2, 1}, Partition{}) == Partition{2, 1});
  CHECK(concat(Partition{}, Partition{1, 1}) == Partition{1, 1});
}

TEST_CASE("dominance") {
  CHECK(dominates(Partition{2}, Partition{1, 1}));
  CHECK(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 1, 1}));
  CHECK_FALSE(dominates(Partition{2, 2, 1, 1}, Partition{3, 1, 1, 1}));
  CHECK_THROWS(dominates(Partition{2}, Partition{1}));
  const BiComposition two_empty = make_pair(Partition{2}, Partition{});
  const BiComposition one_one = make_pair(Partition{1}, Partition{1});
  const BiComposition empty_two = make_pair(Partition{}, Partition{2});
  const BiComposition empty_11 = make_pair(Partition{}, Partition{1, 1});
  CHECK(dominates_pair(two_empty, make_pair(Partition{1, 1}, Partition{})));
  CHECK(dominates_pair(one_one, empty_two));
  CHECK_FALSE(dominates_pair(empty_11, empty_two));
  CHECK_THROWS(dominates_pair(two_empty, make_pair(Partition{1}, Partition{})));
}

TEST_CASE("p-adic digits") {
  auto d = p_adic_expansion(Partition{6, 3}, 3);
  REQUIRE(d.size() == 2);
  CHECK(d[0].empty());
  CHECK(d[1] == Partition{2, 1});
  d = p_adic_expansion(Partition{2, 2, 1, 1}, 3);
  REQUIRE(d.size() == 1);
  CHECK(d[0] == Partition{2, 2, 1, 1});
  d = p_adic_expansion(Partition{4, 1, 1}, 3);
  REQUIRE(d.size() == 2);
  CHECK(d[0] == Partition{1, 1, 1});
  CHECK(d[1] == Partition{1});
  CHECK(is_p_restricted(Partition{2, 2, 1, 1}, 3));
  CHECK_FALSE(is_p_restricted(Partition{3}, 3));
  CHECK(is_p_restricted(Partition{}, 5));
}

TEST_CASE("digits from base-p expansion of row differences") {
  // Row differences of lam expand in base p; digit i collects the i-th base-p digits.
  for (int p : {3, 5})
    for (int n = 0; n <= 10; ++n)
      for (const auto& lam : enumerate_partitions(n)) {
        auto d = p_adic_expansion(lam, p);
        long w = 1;
        for (std::size_t i = 0; i < 4; ++i, w *= p) {
          std::vector<int> parts(lam.length(), 0);
          int running = 0;
          for (std::size_t j = lam.length(); j-- > 0;) {
            running += static_cast<int>((lam[j] - lam[j + 1]) / w % p);
            parts[j] = running;
          }
          while (!parts.empty() && parts.back() == 0) parts.pop_back();
          CHECK(digit(lam, p, i) == Partition(parts));
        }
      }
}

TEST_CASE("cuts") {
  CHECK(top_cut(Partition{3, 2, 1, 1}, 2) == Partition{3, 2});
  CHECK(bottom_cut(Partition{3, 2, 1, 1}, 2) == Partition{1, 1});
  CHECK(top_cut(Partition{3, 2}, 0).empty());
  CHECK(bottom_cut(Partition{2, 1}, 5).empty());
  CHECK_FALSE(admits_horizontal_cut(Partition{4, 2}, Partition{5, 1}, 1));
  CHECK(admits_horizontal_cut(Partition{4, 2}, Partition{4, 2}, 1));
  CHECK(admits_horizontal_cut(Partition{4, 2}, Partition{5, 1}, 0));
}

TEST_CASE("rho shapes") {
  const RhoShape r = rho_of(PairP2p(Partition{2, 2, 1, 1}, Partition{2, 1}, 3));
  CHECK(r.size() == 15);
  REQUIRE(r.counts.size() >= 2);
  CHECK(r.counts[0] == 6);
  CHECK(r.counts[1] == 3);
  const RhoShape s = rho_of(PairP2p(Partition{2, 1}, Partition{}, 3));
  CHECK(s.counts == std::vector<int>{3});
  CHECK(rho_of(PairP2p(Partition{}, Partition{}, 3)).size() == 0);
}

TEST_CASE("p-cores") {
  CHECK(p_core(Partition{3}, 3).empty());
  CHECK(p_core(Partition{2, 2, 1, 1}, 3) == Partition{2, 2, 1, 1});
  CHECK(p_core(Partition{4, 1, 1}, 3).empty());
  auto h = hook_lengths(Partition{2, 2, 1, 1});
  std::multiset<int> hs(h.begin(), h.end());
  CHECK(hs == std::multiset<int>{5, 4, 2, 2, 1, 1});
}

TEST_CASE("Mullineux map") {
  CHECK(mullineux(Partition{1, 1}, 3) == Partition{2});
  CHECK(mullineux(Partition{2, 1}, 3) == Partition{1, 1, 1});
  CHECK(mullineux(Partition{}, 5).empty());
  CHECK_THROWS(mullineux(Partition{3}, 3));
  // Semisimple case: when p exceeds n every simple module is a Specht module and
  // tensoring with sign conjugates the label.
  for (int n = 0; n <= 6; ++n)
    for (const auto& mu : enumerate_partitions(n)) CHECK(mullineux(mu, 7) == conjugate(mu));
}

TEST_CASE("enumeration sizes") {
  CHECK(enumerate_partitions(6).size() == 11);
  CHECK(enumerate_p2p(6, 3).size() == 16);
  CHECK(enumerate_p2p(6, 5).size() == 12);
  CHECK(enumerate_p2(6).size() == 65);
  CHECK(enumerate_p2p(0, 3).size() == 1);
  auto labels = enumerate_p2p(6, 3);
  CHECK(label_string(labels.front()) == "6|-");
  CHECK(label_string(labels.back()) == "-|3,3");
}

TEST_CASE("label strings round trip") {
  for (int p : {3, 5})
    for (int n = 0; n <= 8; ++n)
      for (const auto& x : enumerate_p2p(n, p)) CHECK(parse_label(label_string(x), p) == x);
  for (int n = 0; n <= 6; ++n)
    for (const auto& ab : enumerate_p2(n)) CHECK(parse_pair(to_string(ab)) == ab);
  CHECK_THROWS(parse_label("2|4", 3));
  CHECK_THROWS(parse_composition("1,,2"));
}

TEST_CASE("total order") {
  auto labels = enumerate_p2p(8, 3);
  for (std::size_t i = 0; i + 1 < labels.size(); ++i) CHECK(cmp_total(labels[i], labels[i + 1]) < 0);
  auto parts = enumerate_partitions(7);
  for (std::size_t i = 0; i + 1 < parts.size(); ++i) CHECK(dict_compare(parts[i], parts[i + 1]) > 0);
  CHECK_THROWS(require_odd_prime(2));
  CHECK_THROWS(require_odd_prime(9));
}
