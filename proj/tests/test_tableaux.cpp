#include <doctest.h>

#include "skostka/tableaux.hpp"

using namespace skostka;
using namespace skostka::tableaux;

namespace {
BiComposition bc(std::initializer_list<int> a, std::initializer_list<int> b) {
  return make_pair(Partition(a), Partition(b));
}
}  // namespace

TEST_CASE("signed tableau counts") {
  CHECK(count_signed_ssyt(Partition{3, 2, 1, 1}, bc({3, 2}, {1, 1})) == 1);
  CHECK(count_signed_ssyt(Partition{1, 1}, bc({}, {2})) == 1);
  CHECK(count_signed_ssyt(Partition{2}, bc({}, {2})) == 0);
  CHECK(count_signed_ssyt(Partition{6}, bc({6}, {})) == 1);
  CHECK_THROWS(count_signed_ssyt(Partition{2}, bc({1}, {2})));
  auto ts = list_signed_ssyt(Partition{3, 2, 1, 1}, bc({3, 2}, {1, 1}));
  REQUIRE(ts.size() == 1);
  CHECK(to_string(ts[0]) == "c1 c1 c1\nc2 c2\nd1\nd2\n");
}

TEST_CASE("characters") {
  const SchurVector h1e1{{Partition{2}, 1}, {Partition{1, 1}, 1}};
  CHECK(char_vector(bc({1}, {1})) == h1e1);
  CHECK(pieri_expand(bc({1}, {1})) == h1e1);
  CHECK(char_vector(bc({5}, {})) == SchurVector{{Partition{5}, 1}});
  CHECK(pieri_expand(bc({}, {1, 1, 1, 1})).at(Partition{1, 1, 1, 1}) == 1);
  CHECK(pieri_expand(bc({3, 2}, {1, 1})).at(Partition{3, 2, 1, 1}) == 1);
  // e_1^4 = sum over lambda of f^lambda s_lambda; f^(2,2) = 2, f^(3,1) = 3
  const SchurVector e = pieri_expand(bc({}, {1, 1, 1, 1}));
  CHECK(e.at(Partition{2, 2}) == 2);
  CHECK(e.at(Partition{3, 1}) == 3);
  CHECK(classical_kostka(Partition{2, 1}, Composition{1, 1, 1}) == 2);
  CHECK(classical_kostka(Partition{3, 2}, Composition{2, 2, 1}) == 2);
  CHECK(classical_kostka(Partition{2, 2}, Composition{3, 1}) == 0);
}

TEST_CASE("canonical labels and the isomorphism criterion") {
  auto c = canonical_label(bc({2, 1, 1}, {1}));
  CHECK(c.core == bc({2}, {}));
  CHECK(c.a == 2);
  CHECK(c.c == 1);
  CHECK(canonical_label(bc({}, {1, 1})).core == bc({}, {}));
  c = canonical_label(bc({3, 2}, {3, 1}));
  CHECK(c.core == bc({3, 2}, {3}));
  CHECK(c.a == 0);
  CHECK(c.c == 1);
  CHECK(iso_equivalent(bc({2, 1, 1}, {1}), bc({2, 1}, {1, 1})));
  CHECK(iso_equivalent(bc({1, 1}, {}), bc({}, {1, 1})));
  CHECK_FALSE(iso_equivalent(bc({2}, {}), bc({1, 1}, {})));
  CHECK_THROWS(iso_equivalent(bc({2}, {}), bc({1}, {})));
}
