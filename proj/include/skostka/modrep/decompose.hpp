#ifndef SKOSTKA_MODREP_DECOMPOSE_HPP
#define SKOSTKA_MODREP_DECOMPOSE_HPP

#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "skostka/modrep/algebra.hpp"
#include "skostka/modrep/module.hpp"

namespace skostka::modrep {

// A direct summand U of a parent module: basis (parent_dim x u) and an equivariant
// projection (u x parent_dim) with proj * basis = I.
struct Summand {
  std::shared_ptr<const SignedPermModule> parent;
  FpMatrix basis;
  FpMatrix proj;

  Index dim() const { return basis.cols(); }
  FpMatrix idempotent() const { return gfp::mul(basis, proj); }
  FpMatrix restricted_generator(std::size_t i) const;
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  int split_patience = 6;
};

struct Decomposition {
  std::shared_ptr<const SignedPermModule> module;
  std::size_t end_dim = 0;
  std::vector<Summand> pieces;
  std::vector<std::size_t> piece_end_dim;
  std::vector<int> residue_degree;
  // hom[k][l]: basis of Hom(U_k, U_l) as (dim U_l x dim U_k) matrices
  std::vector<std::vector<std::vector<FpMatrix>>> hom;
  std::vector<int> class_of;                    // piece -> class
  std::vector<std::vector<std::size_t>> classes;  // class -> pieces
};

Decomposition decompose_module(std::shared_ptr<const SignedPermModule> m, const DecomposeOptions& opts);

struct SummandRecord {
  BiComposition parent;
  FpMatrix idempotent;
  Index dim = 0;
  int multiplicity = 0;
  int iso_class = 0;
};

// One record per isomorphism class; the idempotent projects onto the isotypic part.
std::vector<SummandRecord> split_idempotents(const EndAlgebra& a, const SignedPermModule& m);
std::vector<SummandRecord> records_of(const Decomposition& d);

// Decide U = V for indecomposable summands with local endomorphism rings.
// Positive answers carry an invertible intertwiner; negative answers check that every
// composition of sampled Hom bases is singular.
bool modules_isomorphic(const Summand& u, const Summand& v, std::mt19937_64& rng, const HomBasis* uv = nullptr,
                        const HomBasis* vu = nullptr);
// Full modules by Krull-Schmidt comparison of decompositions.
bool modules_isomorphic(const SignedPermModule& m, const SignedPermModule& n, std::uint64_t seed = 0);

// Random intertwiner of small summands, restricted through their parents.
FpMatrix sample_hom(const Summand& u, const Summand& v, const HomBasis& h, std::mt19937_64& rng);

}  // namespace skostka::modrep

#endif
