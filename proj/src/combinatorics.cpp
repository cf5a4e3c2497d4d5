#include "skostka/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace skostka {

namespace {

int sum_of(const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); }

std::vector<int> trimmed(std::vector<int> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

}  // namespace

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int x : parts_)
    if (x < 0) throw std::invalid_argument("composition with negative part");
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

int Composition::size() const { return sum_of(parts_); }

bool same_sequence(const Seq& a, const Seq& b) { return trimmed(a.parts()) == trimmed(b.parts()); }

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition with nonpositive part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition not weakly decreasing");
  }
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

int Partition::size() const { return sum_of(parts_); }

bool BiComposition::is_bipartition() const {
  auto ok = [](const Composition& c) {
    const auto& v = c.parts();
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] <= 0) return false;
      if (i > 0 && v[i] > v[i - 1]) return false;
    }
    return true;
  };
  return ok(first) && ok(second);
}

BiComposition make_pair(const Partition& a, const Partition& b) { return {a.composition(), b.composition()}; }

PairP2p::PairP2p(Partition l, Partition m, int prime) : lam(std::move(l)), mu(std::move(m)), p(prime) {
  require_odd_prime(p);
}

Partition PairP2p::pmu() const { return scale(p, mu); }

BiComposition PairP2p::as_pair() const { return make_pair(lam, pmu()); }

int RhoShape::size() const {
  int total = 0, pw = 1;
  for (int c : counts) {
    total += c * pw;
    pw *= p;
  }
  return total;
}

bool RhoShape::operator==(const RhoShape& o) const { return p == o.p && trimmed(counts) == trimmed(o.counts); }

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_odd_prime(int p) {
  if (p == 2) throw std::invalid_argument("p = 2 is not supported; p must be an odd prime");
  if (!is_prime(p)) throw std::invalid_argument("p must be an odd prime, got " + std::to_string(p));
}

Partition wp(const Composition& s) {
  std::vector<int> v;
  for (int x : s.parts())
    if (x > 0) v.push_back(x);
  std::sort(v.begin(), v.end(), std::greater<>());
  return Partition(std::move(v));
}

Composition concat(const Composition& a, const Composition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Composition(std::move(v));
}

Partition concat(const Partition& a, const Partition& b) {
  std::vector<int> v = a.parts();
  v.insert(v.end(), b.parts().begin(), b.parts().end());
  return Partition(std::move(v));
}

Partition conjugate(const Partition& lam) {
  std::vector<int> c(lam.empty() ? 0 : lam[0], 0);
  for (int row : lam.parts())
    for (int j = 0; j < row; ++j) ++c[j];
  return Partition(std::move(c));
}

Composition add(const Composition& a, const Composition& b) {
  std::vector<int> v(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return Composition(std::move(v));
}

Composition scale(int q, const Composition& a) {
  std::vector<int> v = a.parts();
  for (int& x : v) x *= q;
  return Composition(std::move(v));
}

Partition add(const Partition& a, const Partition& b) {
  return Partition(add(a.composition(), b.composition()).parts());
}

Partition scale(int q, const Partition& a) {
  if (q == 0) return {};
  return Partition(scale(q, a.composition()).parts());
}

Partition subtract(const Partition& a, const Partition& b) {
  std::vector<int> v(std::max(a.length(), b.length()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = a[i] - b[i];
    if (v[i] < 0) throw std::invalid_argument("subtract: negative part");
  }
  return Partition(trimmed(std::move(v)));
}

Partition rectangle(int c, int r) {
  if (c == 0 || r == 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(r), c));
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominates: size mismatch");
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t k = 0; k < len; ++k) {
    sa += a[k];
    sb += b[k];
    if (sa < sb) return false;
  }
  return true;
}

bool dominates_pair(const BiComposition& a, const BiComposition& b) {
  if (!a.is_bipartition() || !b.is_bipartition())
    throw std::invalid_argument("dominates_pair: arguments must be pairs of partitions");
  if (a.size() != b.size()) throw std::invalid_argument("dominates_pair: size mismatch");
  const int fa = a.first.size(), fb = b.first.size();
  std::size_t len = std::max({a.first.length(), b.first.length(), a.second.length(), b.second.length()});
  int s1 = 0, s2 = 0, t1 = fa, t2 = fb;
  for (std::size_t k = 0; k < len; ++k) {
    s1 += a.first[k];
    s2 += b.first[k];
    if (s1 < s2) return false;
    t1 += a.second[k];
    t2 += b.second[k];
    if (t1 < t2) return false;
  }
  return true;
}

std::strong_ordering dict_compare(const Partition& a, const Partition& b) {
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i)
    if (a[i] != b[i]) return a[i] <=> b[i];
  return std::strong_ordering::equal;
}

std::strong_ordering cmp_total(const PairP2p& a, const PairP2p& b) {
  if (a.p != b.p || a.size() != b.size()) throw std::invalid_argument("cmp_total: mismatched n or p");
  if (a.mu.size() != b.mu.size()) return a.mu.size() <=> b.mu.size();
  if (auto c = dict_compare(a.mu, b.mu); c != 0) return 0 <=> c;  // descending
  return 0 <=> dict_compare(a.lam, b.lam);
}

std::vector<Partition> p_adic_expansion(const Partition& lam, int p) {
  if (p < 2) throw std::invalid_argument("p_adic_expansion: p < 2");
  const std::size_t len = lam.length();
  std::vector<int> diff(len);
  for (std::size_t j = 0; j < len; ++j) diff[j] = lam[j] - lam[j + 1];
  std::vector<Partition> digits;
  bool more = len > 0;
  while (more) {
    more = false;
    std::vector<int> d(len);
    for (std::size_t j = 0; j < len; ++j) {
      d[j] = diff[j] % p;
      diff[j] /= p;
      if (diff[j] != 0) more = true;
    }
    std::vector<int> parts(len);
    int acc = 0;
    for (std::size_t j = len; j-- > 0;) {
      acc += d[j];
      parts[j] = acc;
    }
    digits.emplace_back(trimmed(std::move(parts)));
  }
  Partition check;
  int pw = 1;
  for (const auto& dg : digits) {
    check = add(check, scale(pw, dg));
    pw *= p;
  }
  if (check != lam) throw std::logic_error("p_adic_expansion: re-summation failed");
  return digits;
}

Partition digit(const Partition& lam, int p, std::size_t i) {
  auto d = p_adic_expansion(lam, p);
  return i < d.size() ? d[i] : Partition{};
}

bool is_p_restricted(const Partition& lam, int p) {
  for (std::size_t i = 0; i < lam.length(); ++i)
    if (lam[i] - lam[i + 1] > p - 1) return false;
  return true;
}

bool is_p_regular(const Partition& lam, int p) {
  int run = 1;
  for (std::size_t i = 1; i < lam.length(); ++i) {
    run = lam[i] == lam[i - 1] ? run + 1 : 1;
    if (run >= p) return false;
  }
  return true;
}

Partition top_cut(const Partition& lam, std::size_t r) {
  std::vector<int> v(lam.parts().begin(), lam.parts().begin() + std::min(r, lam.length()));
  return Partition(std::move(v));
}

Partition bottom_cut(const Partition& lam, std::size_t r) {
  if (r >= lam.length()) return {};
  return Partition(std::vector<int>(lam.parts().begin() + r, lam.parts().end()));
}

Composition top_cut(const Composition& a, std::size_t r) {
  return Composition(std::vector<int>(a.parts().begin(), a.parts().begin() + std::min(r, a.length())));
}

Composition bottom_cut(const Composition& a, std::size_t r) {
  if (r >= a.length()) return {};
  return Composition(std::vector<int>(a.parts().begin() + r, a.parts().end()));
}

bool admits_horizontal_cut(const Partition& a, const Partition& lam, std::size_t r) {
  return top_cut(a, r).size() == top_cut(lam, r).size();
}

RhoShape rho_of(const PairP2p& x) {
  auto ld = p_adic_expansion(x.lam, x.p);
  auto md = p_adic_expansion(x.mu, x.p);
  std::size_t levels = std::max(ld.size(), md.size() + 1);
  RhoShape r;
  r.p = x.p;
  r.counts.assign(levels, 0);
  for (std::size_t i = 0; i < ld.size(); ++i) r.counts[i] += ld[i].size();
  for (std::size_t i = 0; i < md.size(); ++i) r.counts[i + 1] += md[i].size();
  r.counts = trimmed(std::move(r.counts));
  return r;
}

std::vector<int> hook_lengths(const Partition& lam) {
  Partition c = conjugate(lam);
  std::vector<int> h;
  for (std::size_t i = 0; i < lam.length(); ++i)
    for (int j = 0; j < lam[i]; ++j)
      h.push_back(lam[i] - j - 1 + c[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1 + 1);
  return h;
}

Partition p_core(const Partition& lam, int p) {
  const int len = static_cast<int>(lam.length());
  std::vector<int> beads_per_runner(static_cast<std::size_t>(p), 0);
  for (int j = 0; j < len; ++j) ++beads_per_runner[static_cast<std::size_t>((lam[j] + len - 1 - j) % p)];
  std::vector<int> beta;
  for (int r = 0; r < p; ++r)
    for (int k = 0; k < beads_per_runner[static_cast<std::size_t>(r)]; ++k) beta.push_back(r + k * p);
  std::sort(beta.begin(), beta.end(), std::greater<>());
  std::vector<int> parts;
  for (int j = 0; j < len; ++j) parts.push_back(beta[static_cast<std::size_t>(j)] - (len - 1 - j));
  return Partition(trimmed(std::move(parts)));
}

namespace {

// Kleshchev crystal on p-regular partitions. Residue of node (row i, col j) is (j - i) mod p.
struct Node {
  int row;
  bool addable;
};

std::vector<Node> signature(const std::vector<int>& lam, int p, int res) {
  std::vector<Node> sig;
  const int len = static_cast<int>(lam.size());
  for (int i = 0; i <= len; ++i) {
    int cur = i < len ? lam[i] : 0;
    int above = i == 0 ? 1 << 30 : lam[i - 1];
    // addable node at (i, cur)
    if (cur < above && ((cur - i) % p + p) % p == res) sig.push_back({i, true});
    // removable node at (i, cur-1)
    if (i < len && cur > 0) {
      int below = i + 1 < len ? lam[i + 1] : 0;
      if (cur > below && ((cur - 1 - i) % p + p) % p == res) sig.push_back({i, false});
    }
  }
  std::sort(sig.begin(), sig.end(), [](const Node& a, const Node& b) { return a.row < b.row; });
  return sig;
}

// Cancel (addable above removable) pairs; returns the reduced signature R..R A..A.
std::vector<Node> reduce(const std::vector<Node>& sig) {
  std::vector<Node> out;
  for (const Node& nd : sig) {
    if (!nd.addable && !out.empty() && out.back().addable) {
      out.pop_back();
      continue;
    }
    out.push_back(nd);
  }
  return out;
}

int good_removable_row(const std::vector<int>& lam, int p, int res) {
  auto red = reduce(signature(lam, p, res));
  int row = -1;
  for (const Node& nd : red)
    if (!nd.addable) row = nd.row;
  return row;
}

int good_addable_row(const std::vector<int>& lam, int p, int res) {
  for (const Node& nd : reduce(signature(lam, p, res)))
    if (nd.addable) return nd.row;
  return -1;
}

}  // namespace

Partition mullineux_regular(const Partition& lam, int p) {
  require_odd_prime(p);
  if (!is_p_regular(lam, p)) throw std::invalid_argument("mullineux_regular: partition is not p-regular");
  std::vector<int> cur = lam.parts();
  std::vector<int> path;
  while (!cur.empty()) {
    bool found = false;
    for (int res = 0; res < p && !found; ++res) {
      int row = good_removable_row(cur, p, res);
      if (row < 0) continue;
      --cur[static_cast<std::size_t>(row)];
      if (cur.back() == 0) cur.pop_back();
      path.push_back(res);
      found = true;
    }
    if (!found) throw std::logic_error("mullineux: no good removable node");
  }
  std::vector<int> out;
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    int res = (p - *it) % p;
    int row = good_addable_row(out, p, res);
    if (row < 0) throw std::logic_error("mullineux: no good addable node");
    if (row == static_cast<int>(out.size())) out.push_back(0);
    ++out[static_cast<std::size_t>(row)];
  }
  return Partition(std::move(out));
}

Partition mullineux(const Partition& mu, int p) {
  require_odd_prime(p);
  if (!is_p_restricted(mu, p)) throw std::invalid_argument("mullineux: partition is not p-restricted");
  return conjugate(mullineux_regular(conjugate(mu), p));
}

namespace {

void partitions_rec(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, maxpart); k >= 1; --k) {
    cur.push_back(k);
    partitions_rec(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 0) throw std::invalid_argument("enumerate_partitions: n < 0");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

std::vector<PairP2p> enumerate_p2p(int n, int p) {
  require_odd_prime(p);
  std::vector<PairP2p> out;
  for (int s = 0; s * p <= n; ++s)
    for (const auto& mu : enumerate_partitions(s))
      for (const auto& lam : enumerate_partitions(n - s * p)) out.emplace_back(lam, mu, p);
  std::sort(out.begin(), out.end(), [](const PairP2p& a, const PairP2p& b) { return cmp_total(a, b) < 0; });
  return out;
}

std::vector<BiComposition> enumerate_p2(int n) {
  std::vector<BiComposition> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& a : enumerate_partitions(n - k))
      for (const auto& b : enumerate_partitions(k)) out.push_back(make_pair(a, b));
  return out;
}

namespace {

void compositions_rec(int n, std::size_t parts, std::vector<int>& cur, std::vector<Composition>& out) {
  if (cur.size() + 1 == parts) {
    cur.push_back(n);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = n; k >= 0; --k) {
    cur.push_back(k);
    compositions_rec(n - k, parts, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Composition> enumerate_compositions(int n, std::size_t parts) {
  std::vector<Composition> out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> cur;
  compositions_rec(n, parts, cur, out);
  return out;
}

Composition parse_composition(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty() || text == "-") return {};
  std::vector<int> v;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string_view::npos) next = text.size();
    std::string_view tok = text.substr(pos, next - pos);
    int x = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
      throw std::invalid_argument("cannot parse '" + std::string(text) + "'");
    v.push_back(x);
    pos = next + 1;
  }
  return Composition(std::move(v));
}

Partition parse_partition(std::string_view text) { return Partition(parse_composition(text).parts()); }

std::string to_string(const Composition& a) {
  if (a.empty()) return "-";
  std::string s;
  for (std::size_t i = 0; i < a.length(); ++i) {
    if (i) s += ',';
    s += std::to_string(a[i]);
  }
  return s;
}

std::string to_string(const Partition& a) { return to_string(a.composition()); }

std::string to_string(const BiComposition& ab) { return to_string(ab.first) + "|" + to_string(ab.second); }

BiComposition parse_pair(std::string_view text) {
  auto bar = text.find('|');
  if (bar == std::string_view::npos) throw std::invalid_argument("pair needs '|': " + std::string(text));
  return {parse_composition(text.substr(0, bar)), parse_composition(text.substr(bar + 1))};
}

std::string label_string(const PairP2p& x) { return to_string(x.lam) + "|" + to_string(x.pmu()); }

PairP2p parse_label(std::string_view text, int p) {
  BiComposition ab = parse_pair(text);
  std::vector<int> mu;
  for (int x : ab.second.parts()) {
    if (x % p != 0) throw std::invalid_argument("label second part not divisible by p: " + std::string(text));
    mu.push_back(x / p);
  }
  return PairP2p(Partition(ab.first.parts()), Partition(std::move(mu)), p);
}

}  // namespace skostka
