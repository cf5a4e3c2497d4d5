#include "skostka/tableaux.hpp"

#include <sstream>
#include <stdexcept>

namespace skostka::tableaux {

std::string to_string(const SignedTableau& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    for (std::size_t j = 0; j < t.rows[i].size(); ++j) {
      const int k = t.rows[i][j];
      const bool is_c = static_cast<std::size_t>(k) < t.c_colours;
      os << (j ? " " : "") << (is_c ? 'c' : 'd') << (is_c ? k + 1 : k - static_cast<int>(t.c_colours) + 1);
    }
    os << '\n';
  }
  return os.str();
}

void for_each_signed_ssyt(const Partition& lam, const BiComposition& ab,
                          const std::function<void(const SignedTableau&)>& visit) {
  if (lam.size() != ab.size()) throw std::invalid_argument("signed tableaux: size mismatch");
  const std::size_t r = ab.first.length();
  std::vector<int> left;
  for (int x : ab.first.parts()) left.push_back(x);
  for (int x : ab.second.parts()) left.push_back(x);
  const int colours = static_cast<int>(left.size());
  SignedTableau t;
  t.shape = lam;
  t.c_colours = r;
  for (int len : lam.parts()) t.rows.emplace_back(len, -1);
  auto is_c = [&](int k) { return static_cast<std::size_t>(k) < r; };
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j) cells.emplace_back(i, static_cast<std::size_t>(j));

  std::function<void(std::size_t)> rec = [&](std::size_t q) {
    if (q == cells.size()) {
      visit(t);
      return;
    }
    const auto [i, j] = cells[q];
    const int l = j > 0 ? t.rows[i][j - 1] : -1;
    const int u = i > 0 ? t.rows[i - 1][j] : -1;
    for (int k = 0; k < colours; ++k) {
      if (left[k] == 0) continue;
      if (l >= 0) {
        // rows: c weakly, d strictly increasing
        if (is_c(k) ? l > k : (is_c(l) ? false : l >= k)) continue;
      }
      if (u >= 0) {
        // columns: c strictly, d weakly increasing
        if (is_c(k) ? u >= k : (is_c(u) ? false : u > k)) continue;
      }
      --left[k];
      t.rows[i][j] = k;
      rec(q + 1);
      t.rows[i][j] = -1;
      ++left[k];
    }
  };
  rec(0);
}

long count_signed_ssyt(const Partition& lam, const BiComposition& ab) {
  long n = 0;
  for_each_signed_ssyt(lam, ab, [&](const SignedTableau&) { ++n; });
  return n;
}

std::vector<SignedTableau> list_signed_ssyt(const Partition& lam, const BiComposition& ab) {
  std::vector<SignedTableau> out;
  for_each_signed_ssyt(lam, ab, [&](const SignedTableau& t) { out.push_back(t); });
  return out;
}

SchurVector char_vector(const BiComposition& ab) {
  SchurVector v;
  for (const auto& lam : enumerate_partitions(ab.size())) {
    long c = count_signed_ssyt(lam, ab);
    if (c) v[lam] = c;
  }
  return v;
}

namespace {

// All nu containing lam with nu/lam a horizontal strip of size k.
void horizontal_strips(const Partition& lam, int k, std::vector<Partition>& out) {
  const std::size_t len = lam.length() + 1;
  std::vector<int> nu(len, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rest) {
    if (i == len) {
      if (rest == 0) {
        std::vector<int> v;
        for (int x : nu)
          if (x > 0) v.push_back(x);
        out.emplace_back(std::move(v));
      }
      return;
    }
    const int lo = lam[i];
    const int hi = i == 0 ? lo + rest : lam[i - 1];
    for (int x = lo; x <= hi && x - lo <= rest; ++x) {
      nu[i] = x;
      rec(i + 1, rest - (x - lo));
    }
  };
  rec(0, k);
}

void add_strip(SchurVector& v, int k, bool vertical) {
  SchurVector next;
  for (const auto& [lam, c] : v) {
    std::vector<Partition> nus;
    horizontal_strips(vertical ? conjugate(lam) : lam, k, nus);
    for (const auto& nu : nus) next[vertical ? conjugate(nu) : nu] += c;
  }
  v.swap(next);
}

}  // namespace

SchurVector pieri_expand(const BiComposition& ab) {
  SchurVector v{{Partition{}, 1}};
  for (int k : ab.first.parts()) add_strip(v, k, false);
  for (int k : ab.second.parts()) add_strip(v, k, true);
  return v;
}

long classical_kostka(const Partition& lam, const Composition& a) {
  if (lam.size() != a.size()) throw std::invalid_argument("classical_kostka: size mismatch");
  // peel horizontal strips for the last entries of the content
  std::function<long(const Partition&, std::size_t)> rec = [&](const Partition& nu, std::size_t m) -> long {
    if (m == 0) return nu.empty() ? 1 : 0;
    const int k = a[m - 1];
    long total = 0;
    // rho subset of nu with nu/rho a horizontal strip of size k: nu_{i+1} <= rho_i <= nu_i
    const std::size_t len = nu.length();
    std::vector<int> rho(len, 0);
    std::function<void(std::size_t, int)> pick = [&](std::size_t i, int rest) {
      if (i == len) {
        if (rest == 0) {
          std::vector<int> v;
          for (int x : rho)
            if (x > 0) v.push_back(x);
          total += rec(Partition(std::move(v)), m - 1);
        }
        return;
      }
      for (int x = nu[i]; x >= nu[i + 1] && nu[i] - x <= rest; --x) {
        rho[i] = x;
        pick(i + 1, rest - (nu[i] - x));
      }
    };
    pick(0, k);
    return total;
  };
  return rec(lam, a.length());
}

CanonicalLabel canonical_label(const BiComposition& ab) {
  auto strip = [](const Composition& c, int& ones) {
    std::vector<int> v = c.parts();
    while (!v.empty() && v.back() == 1) {
      v.pop_back();
      ++ones;
    }
    return Composition(std::move(v));
  };
  CanonicalLabel out;
  out.core.first = strip(ab.first, out.a);
  out.core.second = strip(ab.second, out.c);
  return out;
}

bool iso_equivalent(const BiComposition& ab, const BiComposition& cd) {
  if (ab.size() != cd.size()) throw std::invalid_argument("iso_equivalent: size mismatch");
  return canonical_label(ab).core == canonical_label(cd).core;
}

}  // namespace skostka::tableaux
