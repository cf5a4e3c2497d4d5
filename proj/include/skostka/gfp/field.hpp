#ifndef SKOSTKA_GFP_FIELD_HPP
#define SKOSTKA_GFP_FIELD_HPP

#include <cstdint>
#include <stdexcept>

namespace skostka::gfp {

inline std::int64_t reduce(std::int64_t x, std::int64_t p) {
  x %= p;
  return x < 0 ? x + p : x;
}

inline std::int64_t pow_mod(std::int64_t b, std::uint64_t e, std::int64_t p) {
  std::int64_t r = 1 % p;
  b = reduce(b, p);
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  a = reduce(a, p);
  if (a == 0) throw std::domain_error("inverse of zero in GF(p)");
  std::int64_t t = 0, nt = 1, r = p, nr = a;
  while (nr) {
    std::int64_t q = r / nr;
    std::int64_t tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  return reduce(t, p);
}

// A residue together with its modulus.
class FpScalar {
 public:
  FpScalar(std::int64_t value, std::int64_t p) : v_(reduce(value, p)), p_(p) {}
  std::int64_t value() const { return v_; }
  std::int64_t modulus() const { return p_; }
  FpScalar operator+(FpScalar o) const { return {v_ + o.v_, p_}; }
  FpScalar operator-(FpScalar o) const { return {v_ - o.v_, p_}; }
  FpScalar operator*(FpScalar o) const { return {v_ * o.v_, p_}; }
  FpScalar operator-() const { return {-v_, p_}; }
  FpScalar inverse() const { return {inv_mod(v_, p_), p_}; }
  bool operator==(const FpScalar&) const = default;

 private:
  std::int64_t v_;
  std::int64_t p_;
};

}  // namespace skostka::gfp

#endif
