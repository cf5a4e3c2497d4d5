#ifndef SKOSTKA_TABLEAUX_HPP
#define SKOSTKA_TABLEAUX_HPP

#include <functional>
#include <map>
#include <vector>

#include "skostka/combinatorics.hpp"

namespace skostka::tableaux {

// Colours 0..l(alpha)-1 are c_1.., the next l(beta) are d_1..; rows[i][j] is the colour of cell (i,j).
struct SignedTableau {
  Partition shape;
  std::size_t c_colours = 0;
  std::vector<std::vector<int>> rows;
};

std::string to_string(const SignedTableau& t);

using SchurVector = std::map<Partition, long>;  // zero coefficients omitted

// Visits every semistandard tableau of the given shape and type in lexicographic order
// of the row-reading colour word.
void for_each_signed_ssyt(const Partition& lam, const BiComposition& ab,
                          const std::function<void(const SignedTableau&)>& visit);
long count_signed_ssyt(const Partition& lam, const BiComposition& ab);
std::vector<SignedTableau> list_signed_ssyt(const Partition& lam, const BiComposition& ab);

SchurVector char_vector(const BiComposition& ab);
// h_alpha e_beta in the Schur basis by horizontal then vertical Pieri strips.
SchurVector pieri_expand(const BiComposition& ab);
// Classical Kostka number K_{lam,a}: tableaux of shape lam and content a.
long classical_kostka(const Partition& lam, const Composition& a);

struct CanonicalLabel {
  BiComposition core;  // both coordinates with trailing 1s removed
  int a = 0;           // ones removed from the first coordinate
  int c = 0;           // ones removed from the second
  auto operator<=>(const CanonicalLabel&) const = default;
};

CanonicalLabel canonical_label(const BiComposition& ab);
bool iso_equivalent(const BiComposition& ab, const BiComposition& cd);

}  // namespace skostka::tableaux

#endif
