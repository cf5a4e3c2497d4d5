#ifndef SKOSTKA_COMBINATORICS_HPP
#define SKOSTKA_COMBINATORICS_HPP

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace skostka {

// Finite sequence of nonnegative integers. Zero parts are kept.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;  // |a|
  // 0-based access; entries past the end read as 0.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  auto operator<=>(const Composition&) const = default;

 private:
  std::vector<int> parts_;
};

// A finitely supported sequence, stored as a composition. Equality of
// sequences ignores trailing zeros; see same_sequence.
using Seq = Composition;
bool same_sequence(const Seq& a, const Seq& b);

// Weakly decreasing list of positive integers; the empty list is the empty partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int size() const;
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  Composition composition() const { return Composition(parts_); }

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

struct BiComposition {
  Composition first;
  Composition second;
  int size() const { return first.size() + second.size(); }
  bool is_bipartition() const;
  auto operator<=>(const BiComposition&) const = default;
};

BiComposition make_pair(const Partition& a, const Partition& b);

// (lam | p*mu) in the set of pairs with second coordinate divisible by p.
struct PairP2p {
  Partition lam;
  Partition mu;
  int p = 3;
  PairP2p() = default;
  PairP2p(Partition l, Partition m, int prime);
  int size() const { return lam.size() + p * mu.size(); }
  Partition pmu() const;
  BiComposition as_pair() const;
  bool operator==(const PairP2p&) const = default;
};

// rho = ((p^i)^{n_i}); counts[i] = n_i.
struct RhoShape {
  std::vector<int> counts;
  int p = 3;
  int size() const;
  bool operator==(const RhoShape& o) const;
};

void require_odd_prime(int p);
bool is_prime(int p);

Partition wp(const Composition& s);
Composition concat(const Composition& a, const Composition& b);
Partition concat(const Partition& a, const Partition& b);  // throws if not a partition

Partition conjugate(const Partition& lam);
Partition add(const Partition& a, const Partition& b);      // pointwise
Partition scale(int q, const Partition& a);
Composition add(const Composition& a, const Composition& b);
Composition scale(int q, const Composition& a);
// a - b pointwise; throws unless the result is a partition.
Partition subtract(const Partition& a, const Partition& b);
// (c^r): r parts equal to c.
Partition rectangle(int c, int r);

bool dominates(const Partition& a, const Partition& b);
bool dominates_pair(const BiComposition& a, const BiComposition& b);
// Dictionary (lexicographic) comparison of partitions.
std::strong_ordering dict_compare(const Partition& a, const Partition& b);
// less = precedes in the fixed total order.
std::strong_ordering cmp_total(const PairP2p& a, const PairP2p& b);

std::vector<Partition> p_adic_expansion(const Partition& lam, int p);
// Digit i of the expansion, empty past the last level.
Partition digit(const Partition& lam, int p, std::size_t i);
bool is_p_restricted(const Partition& lam, int p);
bool is_p_regular(const Partition& lam, int p);

Partition top_cut(const Partition& lam, std::size_t r);
Partition bottom_cut(const Partition& lam, std::size_t r);
Composition top_cut(const Composition& a, std::size_t r);
Composition bottom_cut(const Composition& a, std::size_t r);
bool admits_horizontal_cut(const Partition& a, const Partition& lam, std::size_t r);

RhoShape rho_of(const PairP2p& x);

std::vector<int> hook_lengths(const Partition& lam);
Partition p_core(const Partition& lam, int p);
// Mullineux map on p-restricted partitions (D_mu tensor sign).
Partition mullineux(const Partition& mu, int p);
// Mullineux map on p-regular partitions.
Partition mullineux_regular(const Partition& lam, int p);

std::vector<Partition> enumerate_partitions(int n);
std::vector<PairP2p> enumerate_p2p(int n, int p);
std::vector<BiComposition> enumerate_p2(int n);
std::vector<Composition> enumerate_compositions(int n, std::size_t parts);

// Text syntax: "2,2,1,1" or "-" for the empty partition.
Partition parse_partition(std::string_view text);
Composition parse_composition(std::string_view text);
std::string to_string(const Composition& a);
std::string to_string(const Partition& a);
// "a|b"
std::string to_string(const BiComposition& ab);
BiComposition parse_pair(std::string_view text);
// "lam|p*mu" with p*mu written out.
std::string label_string(const PairP2p& x);
PairP2p parse_label(std::string_view text, int p);

}  // namespace skostka

#endif
