#include <doctest.h>

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>

#include "skostka/modrep/algebra.hpp"
#include "skostka/modrep/decompose.hpp"
#include "skostka/modrep/engine.hpp"
#include "skostka/modrep/module.hpp"

using namespace skostka;
using namespace skostka::modrep;

namespace {

std::shared_ptr<const SignedPermModule> shared_module(const BiComposition& ab, int p) {
  return std::make_shared<const SignedPermModule>(build_module(ab, p));
}

BiComposition bc(std::initializer_list<int> a, std::initializer_list<int> b) {
  return make_pair(Partition(a), Partition(b));
}

// Character value at g: colourings constant on the cycles of g with the right content,
// each d-coloured cycle of length L contributing (-1)^(L-1).
long character(const BiComposition& ab, const std::vector<int>& cycles) {
  std::vector<int> left;
  for (int x : ab.first.parts()) left.push_back(x);
  const std::size_t r = left.size();
  for (int x : ab.second.parts()) left.push_back(x);
  long total = 0;
  std::function<void(std::size_t, long)> rec = [&](std::size_t i, long sign) {
    if (i == cycles.size()) {
      total += sign;
      return;
    }
    for (std::size_t k = 0; k < left.size(); ++k) {
      if (left[k] < cycles[i]) continue;
      left[k] -= cycles[i];
      rec(i + 1, k >= r && cycles[i] % 2 == 0 ? -sign : sign);
      left[k] += cycles[i];
    }
  };
  rec(0, 1);
  return total;
}

// <chi_M, chi_N> over all permutations of n points.
long character_inner_product(const BiComposition& a, const BiComposition& b, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  long sum = 0, order = 0;
  do {
    std::vector<char> seen(perm.size(), 0);
    std::vector<int> cycles;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
        seen[j] = 1;
        ++len;
      }
      cycles.push_back(len);
    }
    sum += character(a, cycles) * character(b, cycles);
    ++order;
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(sum % order == 0);
  return sum / order;
}

// dim of {X : g X = X g for every generator}, by solving the linear system directly.
long naive_commutant_dim(const SignedPermModule& src, const SignedPermModule& tgt) {
  const Index ds = static_cast<Index>(src.dim()), dt = static_cast<Index>(tgt.dim());
  const Index unknowns = ds * dt;
  FpMatrix sys(static_cast<Index>(src.gens.size()) * unknowns, unknowns, src.p);
  for (std::size_t g = 0; g < src.gens.size(); ++g) {
    const FpMatrix gs = src.generator_matrix(g), gt = tgt.generator_matrix(g);
    for (Index a = 0; a < dt; ++a)
      for (Index b = 0; b < ds; ++b) {
        const Index row = static_cast<Index>(g) * unknowns + a * ds + b;
        for (Index c = 0; c < dt; ++c) sys.set(row, c * ds + b, sys(row, c * ds + b) + gt(a, c));
        for (Index c = 0; c < ds; ++c) sys.set(row, a * ds + c, sys(row, a * ds + c) - gs(c, b));
      }
  }
  return unknowns - gfp::rank(sys);
}

}  // namespace

TEST_CASE("module dimensions and the sign action") {
  CHECK(module_dimension(bc({4, 2}, {})) == 15);
  CHECK(module_dimension(bc({2, 1}, {3})) == 60);
  const SignedPermModule m = build_module(bc({}, {2}), 3);
  REQUIRE(m.dim() == 1);
  CHECK(m.generator_matrix(0)(0, 0) == 2);  // -1 mod 3
  CHECK_THROWS_AS(build_module(bc({1, 1, 1, 1, 1, 1, 1}, {}), 3, 100), DimensionCapError);
  CHECK_THROWS(build_module(bc({1}, {}), 2));
}

TEST_CASE("Hom dimensions equal the character inner product") {
  for (int n = 1; n <= 5; ++n) {
    auto labels = enumerate_p2(n);
    for (const auto& a : labels)
      for (const auto& b : labels) {
        if (n == 5 && (module_dimension(a) > 30 || module_dimension(b) > 30)) continue;
        const SignedPermModule ma = build_module(a, 3), mb = build_module(b, 3);
        const HomBasis h = hom_basis(ma, mb);
        CHECK_MESSAGE(static_cast<long>(h.size()) == character_inner_product(a, b, n), to_string(a), " ", to_string(b));
      }
  }
}

TEST_CASE("Hom bases intertwine and match the naive commutant") {
  for (int p : {3, 5})
    for (int n = 1; n <= 4; ++n) {
      auto labels = enumerate_p2(n);
      for (const auto& a : labels)
        for (const auto& b : labels) {
          const SignedPermModule ma = build_module(a, p), mb = build_module(b, p);
          if (ma.dim() * mb.dim() > 144) continue;
          const HomBasis h = hom_basis(ma, mb);
          CHECK(static_cast<long>(h.size()) == naive_commutant_dim(ma, mb));
          for (std::size_t k = 0; k < h.size(); ++k) {
            const FpMatrix x = h.element(k);
            for (std::size_t g = 0; g < ma.gens.size(); ++g)
              CHECK(gfp::mul(mb.generator_matrix(g), x) == gfp::mul(x, ma.generator_matrix(g)));
          }
        }
    }
}

TEST_CASE("radicals") {
  auto unit = [](int i, int j) {
    FpMatrix e(2, 2, 3);
    e.set(i, j, 1);
    return e;
  };
  CHECK(radical_of_matrices({unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1)}, 3).empty());
  CHECK(radical_of_matrices({unit(0, 0), unit(0, 1), unit(1, 1)}, 3).size() == 1);
  const EndAlgebra group_algebra = EndAlgebra::of_module(shared_module(bc({1, 1, 1}, {}), 3));
  CHECK(group_algebra.dim() == 6);
  CHECK(radical(group_algebra).size() == 4);
}

TEST_CASE("Wedderburn components") {
  auto w = wedderburn(EndAlgebra::of_module(shared_module(bc({1, 1}, {}), 3)));
  CHECK(w == std::vector<WedderburnComponent>{{1, 1}, {1, 1}});
  w = wedderburn(EndAlgebra::of_module(shared_module(bc({4, 2}, {}), 3)));
  REQUIRE(w.size() == 2);
  CHECK(w[0].m == 1);
  CHECK(w[1].m == 1);
}

TEST_CASE("decomposition of M((4,2)) at p=3") {
  auto d = decompose_module(shared_module(bc({4, 2}, {}), 3), {});
  std::vector<Index> dims;
  for (const auto& u : d.pieces) dims.push_back(u.dim());
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<Index>{6, 9});
  CHECK(d.classes.size() == 2);
  std::mt19937_64 rng(1);
  CHECK(modules_isomorphic(d.pieces[0], d.pieces[0], rng));
  CHECK_FALSE(modules_isomorphic(d.pieces[0], d.pieces[1], rng));
  for (const auto& u : d.pieces) CHECK(gfp::mul(u.proj, u.basis) == FpMatrix::identity(u.dim(), 3));
}

TEST_CASE("labelled decompositions") {
  DirectEngine e(3);
  using LD = LabelledDecomposition;
  CHECK(e.decompose_labelled(bc({6}, {})) == LD{{PairP2p({6}, {}, 3), 1}});
  CHECK(e.decompose_labelled(bc({4, 2}, {})) == LD{{PairP2p({5, 1}, {}, 3), 1}, {PairP2p({4, 2}, {}, 3), 1}});
  CHECK(e.decompose_labelled(bc({2, 1}, {3})) ==
        LD{{PairP2p({3, 1, 1, 1}, {}, 3), 1}, {PairP2p({2, 2, 1, 1}, {}, 3), 1}, {PairP2p({2, 1}, {1}, 3), 1}});
  CHECK(e.decompose_labelled(bc({}, {3, 3})) == LD{{PairP2p({2, 2, 1, 1}, {}, 3), 1}, {PairP2p({}, {2}, 3), 1}, {PairP2p({}, {1, 1}, 3), 1}});
  CHECK(e.projective_signed(bc({1, 1, 1}, {3}), Partition{2, 2, 1, 1}) == 3);
  CHECK(e.projective_signed(bc({1, 1, 1}, {}), Partition{2, 1}) == 1);
  CHECK(e.projective_signed(bc({2, 1}, {}), Partition{2, 1}) == 1);
  CHECK_THROWS_AS(e.decompose_labelled(bc({7}, {})), DimensionCapError);
}

TEST_CASE("registries: one class per label and dimensions add up") {
  for (int p : {3, 5}) {
    DirectEngine e(p);
    for (int n = 0; n <= 5; ++n) {
      const YoungRegistry& reg = e.registry(n);
      CHECK(reg.size() == enumerate_p2p(n, p).size());
      for (const auto& ab : enumerate_p2(n)) {
        long total = 0;
        for (const auto& [y, m] : e.decompose_labelled(ab)) {
          const auto* entry = reg.find(y);
          REQUIRE(entry);
          total += m * static_cast<long>(entry->rep.dim());
        }
        CHECK(total == static_cast<long>(module_dimension(ab)));
      }
    }
    CHECK(e.flagged().empty());
  }
}

TEST_CASE("full-module isomorphism") {
  DirectEngine e(3);
  CHECK(e.isomorphic(bc({2, 1, 1}, {1}), bc({2, 1}, {1, 1})));
  CHECK_FALSE(e.isomorphic(bc({2}, {}), bc({1, 1}, {})));
  CHECK(e.isomorphic(bc({1, 1}, {}), bc({}, {1, 1})));
  CHECK(modules_isomorphic(build_module(bc({1, 1}, {}), 3), build_module(bc({}, {1, 1}), 3)));
}

TEST_CASE("decompositions do not depend on the seed") {
  DirectEngine a(3, EngineOptions{0}), b(3, EngineOptions{12345});
  for (const auto& ab : enumerate_p2(5)) CHECK(a.decompose_labelled(ab) == b.decompose_labelled(ab));
}
