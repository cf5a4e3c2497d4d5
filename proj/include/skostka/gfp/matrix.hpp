#ifndef SKOSTKA_GFP_MATRIX_HPP
#define SKOSTKA_GFP_MATRIX_HPP

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "skostka/gfp/field.hpp"

namespace skostka::gfp {

using Index = Eigen::Index;

// Dense matrix over GF(p), row-major residues in [0, p).
template <typename Scalar>
class Matrix {
  static_assert(std::is_integral_v<Scalar> && std::is_signed_v<Scalar>, "signed integral scalar required");

 public:
  using Storage = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  Matrix() = default;
  Matrix(Index rows, Index cols, std::int64_t p) : d_(Storage::Zero(rows, cols)), p_(p) { check_modulus(); }
  // Entries are reduced on construction.
  Matrix(const Storage& data, std::int64_t p) : d_(data), p_(p) {
    check_modulus();
    normalize();
  }

  static Matrix zero(Index rows, Index cols, std::int64_t p) { return Matrix(rows, cols, p); }
  static Matrix identity(Index n, std::int64_t p) {
    Matrix m(n, n, p);
    m.d_.setIdentity();
    return m;
  }
  template <typename Rng>
  static Matrix random(Index rows, Index cols, std::int64_t p, Rng& rng) {
    Matrix m(rows, cols, p);
    std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
    for (Index i = 0; i < rows; ++i)
      for (Index j = 0; j < cols; ++j) m.d_(i, j) = static_cast<Scalar>(dist(rng));
    return m;
  }

  Index rows() const { return d_.rows(); }
  Index cols() const { return d_.cols(); }
  std::int64_t modulus() const { return p_; }
  Scalar operator()(Index i, Index j) const { return d_(i, j); }
  void set(Index i, Index j, std::int64_t v) { d_(i, j) = static_cast<Scalar>(reduce(v, p_)); }
  const Storage& data() const { return d_; }
  // Raw access; callers must keep entries reduced.
  Storage& raw() { return d_; }

  bool is_zero() const { return (d_.array() == 0).all(); }
  bool operator==(const Matrix& o) const {
    return p_ == o.p_ && rows() == o.rows() && cols() == o.cols() && d_ == o.d_;
  }

  Matrix block(Index r, Index c, Index nr, Index nc) const {
    Matrix m;
    m.p_ = p_;
    m.d_ = d_.block(r, c, nr, nc);
    return m;
  }
  Matrix transpose() const {
    Matrix m;
    m.p_ = p_;
    m.d_ = d_.transpose();
    return m;
  }

 private:
  void check_modulus() const {
    if (p_ < 2 || p_ > 46000) throw std::invalid_argument("gfp::Matrix: modulus out of supported range");
  }
  void normalize() {
    for (Index i = 0; i < d_.rows(); ++i)
      for (Index j = 0; j < d_.cols(); ++j) d_(i, j) = static_cast<Scalar>(reduce(d_(i, j), p_));
  }

  Storage d_;
  std::int64_t p_ = 2;
};

using FpMatrix = Matrix<std::int32_t>;

namespace detail {

template <typename S>
void require_same_field(const Matrix<S>& a, const Matrix<S>& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("gfp: modulus mismatch");
}

template <typename S>
Eigen::MatrixXd to_double(const Matrix<S>& a) {
  return a.data().template cast<double>();
}

template <typename S>
Matrix<S> from_double(const Eigen::MatrixXd& m, std::int64_t p) {
  typename Matrix<S>::Storage s(m.rows(), m.cols());
  const double pd = static_cast<double>(p);
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) {
      double r = std::fmod(m(i, j), pd);
      if (r < 0) r += pd;
      s(i, j) = static_cast<S>(r);
    }
  Matrix<S> out(s.rows(), s.cols(), p);
  out.raw() = s;
  return out;
}

}  // namespace detail

template <typename S>
Matrix<S> add(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("gfp::add: dimension mismatch");
  Matrix<S> out(a.rows(), a.cols(), a.modulus());
  const S p = static_cast<S>(a.modulus());
  out.raw() = (a.data() + b.data()).unaryExpr([p](S x) { return x >= p ? static_cast<S>(x - p) : x; });
  return out;
}

template <typename S>
Matrix<S> negate(const Matrix<S>& a) {
  Matrix<S> out(a.rows(), a.cols(), a.modulus());
  const S p = static_cast<S>(a.modulus());
  out.raw() = a.data().unaryExpr([p](S x) { return x == 0 ? x : static_cast<S>(p - x); });
  return out;
}

template <typename S>
Matrix<S> sub(const Matrix<S>& a, const Matrix<S>& b) {
  return add(a, negate(b));
}

template <typename S>
Matrix<S> scale(std::int64_t c, const Matrix<S>& a) {
  Matrix<S> out(a.rows(), a.cols(), a.modulus());
  const std::int64_t p = a.modulus(), cc = reduce(c, p);
  out.raw() = a.data().unaryExpr([p, cc](S x) { return static_cast<S>(cc * x % p); });
  return out;
}

// Product through double-precision GEMM; the inner dimension is chunked so every
// partial sum stays below 2^53 and is therefore exact.
template <typename S>
Matrix<S> mul(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.rows()) throw std::invalid_argument("gfp::mul: dimension mismatch");
  const std::int64_t p = a.modulus();
  const double sq = static_cast<double>(p - 1) * static_cast<double>(p - 1);
  const Index chunk = std::max<Index>(1, static_cast<Index>(9.0e15 / std::max(1.0, sq)) - 1);
  if (a.cols() <= chunk) {
    Eigen::MatrixXd r = detail::to_double(a) * detail::to_double(b);
    return detail::from_double<S>(r, p);
  }
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(a.rows(), b.cols());
  const double pd = static_cast<double>(p);
  for (Index k0 = 0; k0 < a.cols(); k0 += chunk) {
    Index kk = std::min(chunk, a.cols() - k0);
    acc += a.data().middleCols(k0, kk).template cast<double>() * b.data().middleRows(k0, kk).template cast<double>();
    acc = acc.unaryExpr([pd](double x) { return std::fmod(x, pd); });
  }
  return detail::from_double<S>(acc, p);
}

template <typename S>
std::int64_t trace(const Matrix<S>& a) {
  std::int64_t t = 0;
  for (Index i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return reduce(t, a.modulus());
}

template <typename S>
Matrix<S> hstack(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("gfp::hstack: row mismatch");
  Matrix<S> out(a.rows(), a.cols() + b.cols(), a.modulus());
  out.raw().leftCols(a.cols()) = a.data();
  out.raw().rightCols(b.cols()) = b.data();
  return out;
}

template <typename S>
Matrix<S> vstack(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_field(a, b);
  if (a.cols() != b.cols()) throw std::invalid_argument("gfp::vstack: column mismatch");
  Matrix<S> out(a.rows() + b.rows(), a.cols(), a.modulus());
  out.raw().topRows(a.rows()) = a.data();
  out.raw().bottomRows(b.rows()) = b.data();
  return out;
}

template <typename S>
struct RrefResult {
  Matrix<S> form;
  std::vector<Index> pivots;
};

// Gauss-Jordan elimination with leftmost pivots. Updates are accumulated lazily in
// the scalar type and reduced only when the entry bound would overflow.
template <typename S>
RrefResult<S> rref(const Matrix<S>& m) {
  const std::int64_t p = m.modulus();
  typename Matrix<S>::Storage w = m.data();
  const Index R = w.rows(), C = w.cols();
  const std::int64_t step = (p - 1) * (p - 1);
  const std::int64_t limit = static_cast<std::int64_t>(std::numeric_limits<S>::max()) - p;
  std::int64_t bound = p - 1;
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < C && r < R; ++c) {
    Index piv = -1;
    for (Index i = r; i < R; ++i)
      if (w(i, c) % p != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) w.row(piv).swap(w.row(r));
    S* prow = w.row(r).data();
    for (Index j = c; j < C; ++j) prow[j] = static_cast<S>(prow[j] % p);
    const std::int64_t inv = inv_mod(prow[c], p);
    if (inv != 1)
      for (Index j = c; j < C; ++j) prow[j] = static_cast<S>(prow[j] * inv % p);
    if (bound + step > limit) {
      w = w.unaryExpr([p](S x) { return static_cast<S>(x % p); });
      bound = p - 1;
    }
    for (Index i = 0; i < R; ++i) {
      if (i == r) continue;
      S* row = w.row(i).data();
      const S f = static_cast<S>(row[c] % p);
      if (f == 0) {
        row[c] = 0;
        continue;
      }
      const S g = static_cast<S>(p - f);
      for (Index j = c; j < C; ++j) row[j] = static_cast<S>(row[j] + g * prow[j]);
    }
    bound += step;
    pivots.push_back(c);
    ++r;
  }
  w = w.unaryExpr([p](S x) { return static_cast<S>(x % p); });
  Matrix<S> out(R, C, p);
  out.raw() = std::move(w);
  return {std::move(out), std::move(pivots)};
}

template <typename S>
Index rank(const Matrix<S>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Basis of {x : m x = 0}, one vector per row.
template <typename S>
Matrix<S> nullspace(const Matrix<S>& m) {
  const std::int64_t p = m.modulus();
  auto rr = rref(m);
  const Index C = m.cols();
  std::vector<char> is_pivot(static_cast<std::size_t>(C), 0);
  for (Index c : rr.pivots) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<Index> free;
  for (Index c = 0; c < C; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) free.push_back(c);
  Matrix<S> out(static_cast<Index>(free.size()), C, p);
  for (std::size_t k = 0; k < free.size(); ++k) {
    const Index f = free[k];
    out.raw()(static_cast<Index>(k), f) = 1;
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
      S v = rr.form(static_cast<Index>(i), f);
      if (v) out.raw()(static_cast<Index>(k), rr.pivots[i]) = static_cast<S>(p - v);
    }
  }
  return out;
}

// Basis of the row space, as rows of the reduced form.
template <typename S>
Matrix<S> row_space(const Matrix<S>& m) {
  auto rr = rref(m);
  return rr.form.block(0, 0, static_cast<Index>(rr.pivots.size()), m.cols());
}

// Basis of the column space, as columns.
template <typename S>
Matrix<S> column_space(const Matrix<S>& m) {
  return row_space(m.transpose()).transpose();
}

// Some x with a x = b, if one exists.
template <typename S>
std::optional<Matrix<S>> solve(const Matrix<S>& a, const Matrix<S>& b) {
  detail::require_same_field(a, b);
  if (a.rows() != b.rows()) throw std::invalid_argument("gfp::solve: dimension mismatch");
  auto rr = rref(hstack(a, b));
  const Index n = a.cols();
  for (Index c : rr.pivots)
    if (c >= n) return std::nullopt;
  Matrix<S> x(n, b.cols(), a.modulus());
  for (std::size_t i = 0; i < rr.pivots.size(); ++i)
    x.raw().row(rr.pivots[i]) = rr.form.data().row(static_cast<Index>(i)).tail(b.cols());
  return x;
}

template <typename S>
std::optional<Matrix<S>> inverse(const Matrix<S>& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("gfp::inverse: matrix not square");
  const Index n = m.rows();
  auto rr = rref(hstack(m, Matrix<S>::identity(n, m.modulus())));
  if (static_cast<Index>(rr.pivots.size()) < n || (n > 0 && rr.pivots[static_cast<std::size_t>(n - 1)] >= n))
    return std::nullopt;
  return rr.form.block(0, n, n, n);
}

template <typename S>
bool is_invertible(const Matrix<S>& m) {
  return m.rows() == m.cols() && rank(m) == m.rows();
}

// Echelon basis grown one vector at a time; reports whether a vector was new.
template <typename S>
class IncrementalSpan {
 public:
  IncrementalSpan(Index len, std::int64_t p) : len_(len), p_(p) {}

  Index dim() const { return static_cast<Index>(rows_.size()); }
  Index length() const { return len_; }

  // Reduce v against the basis; returns the residue (zero iff v is in the span).
  std::vector<std::int64_t> residue(std::vector<std::int64_t> v) const {
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::int64_t f = v[static_cast<std::size_t>(piv_[k])] % p_;
      if (f == 0) continue;
      const auto& r = rows_[k];
      for (Index j = piv_[k]; j < len_; ++j) v[static_cast<std::size_t>(j)] = (v[static_cast<std::size_t>(j)] + (p_ - f) * r[static_cast<std::size_t>(j)]) % p_;
    }
    for (auto& x : v) x %= p_;
    return v;
  }

  bool insert(const std::vector<std::int64_t>& v) {
    auto res = residue(v);
    Index piv = -1;
    for (Index j = 0; j < len_; ++j)
      if (res[static_cast<std::size_t>(j)] != 0) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    const std::int64_t inv = inv_mod(res[static_cast<std::size_t>(piv)], p_);
    for (auto& x : res) x = x * inv % p_;
    // keep the stored rows reduced against one another at their pivots
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      std::int64_t f = rows_[k][static_cast<std::size_t>(piv)];
      if (f == 0) continue;
      for (Index j = 0; j < len_; ++j)
        rows_[k][static_cast<std::size_t>(j)] = (rows_[k][static_cast<std::size_t>(j)] + (p_ - f) * res[static_cast<std::size_t>(j)]) % p_;
    }
    rows_.push_back(std::move(res));
    piv_.push_back(piv);
    return true;
  }

 private:
  Index len_;
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> rows_;
  std::vector<Index> piv_;
};

}  // namespace skostka::gfp

#endif
