#include "skostka/modrep/module.hpp"

#include <algorithm>
#include <unordered_map>

namespace skostka::modrep {

FpMatrix SignedPermModule::generator_matrix(std::size_t i) const {
  const Index d = static_cast<Index>(dim());
  FpMatrix g(d, d, p);
  const auto& s = gens.at(i);
  for (Index k = 0; k < d; ++k) g.set(s.target[static_cast<std::size_t>(k)], k, s.sign[static_cast<std::size_t>(k)]);
  return g;
}

FpMatrix SignedPermModule::act(std::size_t i, const FpMatrix& x) const {
  const auto& s = gens.at(i);
  FpMatrix out(x.rows(), x.cols(), p);
  for (Index k = 0; k < x.rows(); ++k) {
    const Index t = s.target[static_cast<std::size_t>(k)];
    if (s.sign[static_cast<std::size_t>(k)] > 0)
      out.raw().row(t) = x.data().row(k);
    else
      out.raw().row(t) = negate(x.block(k, 0, 1, x.cols())).data();
  }
  return out;
}

std::size_t module_dimension(const BiComposition& ab) {
  // multinomial n! / prod a_i! prod b_j!, saturating at SIZE_MAX
  long double d = 1;
  int done = 0;
  auto absorb = [&](int part) {
    for (int k = 1; k <= part; ++k) {
      ++done;
      d = d * done / k;
    }
  };
  for (int a : ab.first.parts()) absorb(a);
  for (int b : ab.second.parts()) absorb(b);
  if (d > 1e18L) return static_cast<std::size_t>(-1);
  return static_cast<std::size_t>(d + 0.5L);
}

SignedPermModule build_module(const BiComposition& ab, int p, std::size_t cap) {
  require_odd_prime(p);
  const std::size_t need = module_dimension(ab);
  if (need > cap)
    throw DimensionCapError("module " + to_string(ab) + " has dimension " + std::to_string(need) +
                                " above the cap " + std::to_string(cap),
                            need);
  SignedPermModule m;
  m.label = ab;
  m.n = ab.size();
  m.p = p;
  const std::size_t r = ab.first.length();
  std::vector<std::uint8_t> word;
  std::vector<char> is_d;
  for (std::size_t i = 0; i < r; ++i) {
    word.insert(word.end(), static_cast<std::size_t>(ab.first[i]), static_cast<std::uint8_t>(i));
    is_d.push_back(0);
  }
  for (std::size_t j = 0; j < ab.second.length(); ++j) {
    word.insert(word.end(), static_cast<std::size_t>(ab.second[j]), static_cast<std::uint8_t>(r + j));
    is_d.push_back(1);
  }
  const std::uint64_t base = std::max<std::uint64_t>(2, is_d.size());
  auto encode = [base](const std::vector<std::uint8_t>& w) {
    std::uint64_t code = 0;
    for (auto c : w) code = code * base + c;
    return code;
  };
  std::unordered_map<std::uint64_t, std::int32_t> index;
  index.reserve(need);
  do {
    index.emplace(encode(word), static_cast<std::int32_t>(m.basis.size()));
    m.basis.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));

  const std::size_t d = m.basis.size();
  for (int i = 0; i + 1 < m.n; ++i) {
    SignedPerm g;
    g.target.resize(d);
    g.sign.resize(d);
    for (std::size_t k = 0; k < d; ++k) {
      std::vector<std::uint8_t> w = m.basis[k];
      const auto a = w[static_cast<std::size_t>(i)], b = w[static_cast<std::size_t>(i) + 1];
      if (a == b) {
        g.target[k] = static_cast<std::int32_t>(k);
        g.sign[k] = is_d[a] ? -1 : 1;
      } else {
        std::swap(w[static_cast<std::size_t>(i)], w[static_cast<std::size_t>(i) + 1]);
        g.target[k] = index.at(encode(w));
        g.sign[k] = 1;
      }
    }
    m.gens.push_back(std::move(g));
  }
  return m;
}

HomBasis::HomBasis(const SignedPermModule& source, const SignedPermModule& target)
    : slabel_(source.label), tlabel_(target.label), sdim_(source.dim()), tdim_(target.dim()), p_(source.p) {
  if (source.n != target.n) throw std::invalid_argument("hom_basis: degree mismatch");
  if (source.p != target.p) throw std::invalid_argument("hom_basis: characteristic mismatch");
  const std::size_t total = sdim_ * tdim_;
  constexpr std::int32_t kUnseen = -2;
  orbit_.assign(total, kUnseen);
  sign_.assign(total, 0);
  std::vector<std::size_t> members;
  std::int32_t next = 0;
  for (std::size_t start = 0; start < total; ++start) {
    if (orbit_[start] != kUnseen) continue;
    members.clear();
    members.push_back(start);
    orbit_[start] = next;
    sign_[start] = 1;
    bool killed = false;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const std::size_t cur = members[head];
      const std::size_t y = cur / sdim_, x = cur % sdim_;
      for (std::size_t g = 0; g < source.gens.size(); ++g) {
        const auto& sg = source.gens[g];
        const auto& tg = target.gens[g];
        const std::size_t nb = static_cast<std::size_t>(tg.target[y]) * sdim_ + static_cast<std::size_t>(sg.target[x]);
        const std::int8_t s = static_cast<std::int8_t>(sign_[cur] * tg.sign[y] * sg.sign[x]);
        if (orbit_[nb] == kUnseen) {
          orbit_[nb] = next;
          sign_[nb] = s;
          members.push_back(nb);
        } else if (sign_[nb] != s) {
          killed = true;
        }
      }
    }
    if (killed) {
      for (std::size_t k : members) {
        orbit_[k] = -1;
        sign_[k] = 0;
      }
    } else {
      reps_.emplace_back(start / sdim_, start % sdim_);
      ++next;
    }
  }
}

FpMatrix HomBasis::element(std::size_t k) const {
  FpMatrix out(static_cast<Index>(tdim_), static_cast<Index>(sdim_), p_);
  const auto kk = static_cast<std::int32_t>(k);
  for (std::size_t y = 0; y < tdim_; ++y)
    for (std::size_t x = 0; x < sdim_; ++x)
      if (orbit_[y * sdim_ + x] == kk) out.set(static_cast<Index>(y), static_cast<Index>(x), sign_[y * sdim_ + x]);
  return out;
}

std::vector<FpMatrix> HomBasis::matrices() const {
  std::vector<FpMatrix> out;
  for (std::size_t k = 0; k < size(); ++k) {
    std::vector<std::int64_t> c(size(), 0);
    c[k] = 1;
    out.push_back(combination(c));
  }
  return out;
}

FpMatrix HomBasis::combination(const std::vector<std::int64_t>& c) const {
  FpMatrix out(static_cast<Index>(tdim_), static_cast<Index>(sdim_), p_);
  auto& raw = out.raw();
  std::vector<std::int32_t> pos(c.size()), neg(c.size());
  for (std::size_t k = 0; k < c.size(); ++k) {
    pos[k] = static_cast<std::int32_t>(gfp::reduce(c[k], p_));
    neg[k] = static_cast<std::int32_t>(gfp::reduce(-c[k], p_));
  }
  for (std::size_t y = 0; y < tdim_; ++y) {
    std::int32_t* row = raw.row(static_cast<Index>(y)).data();
    const std::int32_t* orb = orbit_.data() + y * sdim_;
    const std::int8_t* sg = sign_.data() + y * sdim_;
    for (std::size_t x = 0; x < sdim_; ++x) {
      const std::int32_t o = orb[x];
      if (o >= 0) row[x] = sg[x] > 0 ? pos[static_cast<std::size_t>(o)] : neg[static_cast<std::size_t>(o)];
    }
  }
  return out;
}

FpMatrix HomBasis::random_element(std::mt19937_64& rng) const {
  std::uniform_int_distribution<std::int64_t> dist(0, p_ - 1);
  std::vector<std::int64_t> c(size());
  for (auto& v : c) v = dist(rng);
  return combination(c);
}

std::vector<std::int64_t> HomBasis::coordinates(const FpMatrix& x) const {
  std::vector<std::int64_t> c(size());
  for (std::size_t k = 0; k < reps_.size(); ++k) {
    const auto [y, xx] = reps_[k];
    c[k] = gfp::reduce(static_cast<std::int64_t>(x(static_cast<Index>(y), static_cast<Index>(xx))) * sign_[y * sdim_ + xx], p_);
  }
  return c;
}

HomBasis hom_basis(const SignedPermModule& m, const SignedPermModule& n) { return HomBasis(m, n); }

}  // namespace skostka::modrep
