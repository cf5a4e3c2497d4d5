#ifndef SKOSTKA_MODREP_ALGEBRA_HPP
#define SKOSTKA_MODREP_ALGEBRA_HPP

#include <map>
#include <optional>
#include <memory>
#include <random>
#include <vector>

#include "skostka/modrep/module.hpp"

namespace skostka::modrep {

using Coords = std::vector<std::int64_t>;

// Finite-dimensional unital algebra of matrices over GF(p), given by a basis.
// Products are computed on demand and cached per basis pair.
class EndAlgebra {
 public:
  // basis: square matrices of one size spanning a unital subalgebra.
  EndAlgebra(std::vector<FpMatrix> basis, int p);
  // End(M) through the orbit basis; matrices are never materialized in full.
  static EndAlgebra of_module(std::shared_ptr<const SignedPermModule> m);

  std::size_t dim() const { return dim_; }
  int modulus() const { return p_; }
  Index degree() const { return degree_; }
  const SignedPermModule* module() const { return module_.get(); }
  std::shared_ptr<const SignedPermModule> module_ptr() const { return module_; }

  FpMatrix element(std::size_t k) const;
  FpMatrix combination(const Coords& c) const;
  Coords coordinates(const FpMatrix& x) const;
  const Coords& product(std::size_t i, std::size_t j) const;
  Coords multiply(const Coords& a, const Coords& b) const;
  const Coords& one() const { return one_; }

 private:
  EndAlgebra() = default;
  void finish_setup();

  std::size_t dim_ = 0;
  int p_ = 3;
  Index degree_ = 0;
  // explicit representation
  std::vector<FpMatrix> basis_;
  FpMatrix coord_inverse_;  // inverse of the basis restricted to pivot positions
  std::vector<std::pair<Index, Index>> pivots_;
  // orbit representation
  std::shared_ptr<const SignedPermModule> module_;
  std::shared_ptr<const HomBasis> hom_;
  struct Entry {
    std::int32_t orbit;
    std::int32_t col;
    std::int8_t sign;
  };
  std::vector<std::vector<Entry>> by_row_;  // per row, sorted by orbit

  Coords one_;
  mutable std::map<std::pair<std::size_t, std::size_t>, Coords> cache_;
};

// Abstract algebra given by structure constants: prod[i][j] = coordinates of b_i b_j.
struct StructureAlgebra {
  int p = 3;
  std::size_t dim = 0;
  std::vector<std::vector<Coords>> prod;
  Coords one;

  static StructureAlgebra from(const EndAlgebra& a);
  Coords mul(const Coords& x, const Coords& y) const;
  FpMatrix left_regular(const Coords& x) const;  // column j = x * b_j
  Coords power(Coords x, std::uint64_t e) const;
  bool commutative() const;
};

// Radical in coordinates; computed by the characteristic-p trace chain on the
// left regular representation.
std::vector<Coords> radical_coords(const StructureAlgebra& a);
// The same chain applied to an explicit faithful matrix representation.
std::vector<Coords> radical_of_matrices(const std::vector<FpMatrix>& basis, int p);
std::vector<FpMatrix> radical(const EndAlgebra& a);

struct Quotient {
  StructureAlgebra alg;      // A/J
  std::vector<std::size_t> lift;  // quotient basis element k is the image of A-basis element lift[k]
  std::vector<Coords> radical;    // rref basis of J
};
Quotient semisimple_quotient(const StructureAlgebra& a);

struct WedderburnComponent {
  int m = 0;  // matrix size
  int e = 0;  // residue-field degree
  bool operator==(const WedderburnComponent&) const = default;
};

std::vector<WedderburnComponent> wedderburn(const EndAlgebra& a);
std::vector<WedderburnComponent> wedderburn_structural(const StructureAlgebra& a);

// For a local algebra returns the residue degree; otherwise 0.
int local_residue_degree(const StructureAlgebra& a);

// A nontrivial idempotent of a non-local algebra, lifted from A/J; empty if A is local.
std::optional<Coords> nontrivial_idempotent(const StructureAlgebra& a, std::mt19937_64& rng);
// Cubic refinement e <- 3e^2 - 2e^3 until exactly idempotent.
Coords lift_idempotent(const StructureAlgebra& a, Coords e);

}  // namespace skostka::modrep

#endif
