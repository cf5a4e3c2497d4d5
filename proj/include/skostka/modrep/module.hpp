#ifndef SKOSTKA_MODREP_MODULE_HPP
#define SKOSTKA_MODREP_MODULE_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skostka/combinatorics.hpp"
#include "skostka/gfp/matrix.hpp"

namespace skostka::modrep {

using gfp::FpMatrix;
using gfp::Index;

inline constexpr std::size_t kDefaultDimCap = 20000;

class DimensionCapError : public std::runtime_error {
 public:
  DimensionCapError(const std::string& what, std::size_t required)
      : std::runtime_error(what), required_(required) {}
  std::size_t required() const { return required_; }

 private:
  std::size_t required_;
};

class IntegrityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A monomial matrix with entries +-1: basis vector i goes to sign[i] * e_{target[i]}.
struct SignedPerm {
  std::vector<std::int32_t> target;
  std::vector<std::int8_t> sign;
};

// Induced module from trivial on the first blocks and sign on the second.
struct SignedPermModule {
  BiComposition label;
  int n = 0;
  int p = 3;
  // word[k] lists the colour of each point; colours 0..r-1 are c-colours, r.. are d-colours.
  std::vector<std::vector<std::uint8_t>> basis;
  std::vector<SignedPerm> gens;  // adjacent transpositions s_1 .. s_{n-1}

  std::size_t dim() const { return basis.size(); }
  FpMatrix generator_matrix(std::size_t i) const;
  // g applied to the columns of x (x has dim() rows).
  FpMatrix act(std::size_t i, const FpMatrix& x) const;
};

std::size_t module_dimension(const BiComposition& ab);
SignedPermModule build_module(const BiComposition& ab, int p, std::size_t cap = kDefaultDimCap);

// Intertwiners source -> target, one per sign-consistent orbit of basis pairs.
class HomBasis {
 public:
  HomBasis() = default;
  HomBasis(const SignedPermModule& source, const SignedPermModule& target);

  std::size_t size() const { return reps_.size(); }
  std::size_t source_dim() const { return sdim_; }
  std::size_t target_dim() const { return tdim_; }
  int modulus() const { return p_; }
  const BiComposition& source_label() const { return slabel_; }
  const BiComposition& target_label() const { return tlabel_; }

  // Dense matrix (target_dim x source_dim) of basis element k.
  FpMatrix element(std::size_t k) const;
  std::vector<FpMatrix> matrices() const;
  // sum_k c_k * element(k)
  FpMatrix combination(const std::vector<std::int64_t>& c) const;
  FpMatrix random_element(std::mt19937_64& rng) const;
  // Coordinates of an intertwiner in this basis (read at orbit representatives).
  std::vector<std::int64_t> coordinates(const FpMatrix& x) const;
  // Orbit index of the pair (target row y, source column x), or -1.
  std::int32_t orbit_of(std::size_t y, std::size_t x) const { return orbit_[y * sdim_ + x]; }
  std::int8_t sign_of(std::size_t y, std::size_t x) const { return sign_[y * sdim_ + x]; }
  // Representative pair (target row, source column) of each orbit.
  const std::vector<std::pair<std::size_t, std::size_t>>& reps() const { return reps_; }

 private:
  BiComposition slabel_, tlabel_;
  std::size_t sdim_ = 0, tdim_ = 0;
  int p_ = 3;
  std::vector<std::int32_t> orbit_;  // indexed y * sdim + x
  std::vector<std::int8_t> sign_;
  std::vector<std::pair<std::size_t, std::size_t>> reps_;  // (y, x)
};

HomBasis hom_basis(const SignedPermModule& m, const SignedPermModule& n);

}  // namespace skostka::modrep

#endif
