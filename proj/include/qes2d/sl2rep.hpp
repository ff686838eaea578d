#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "qes2d/polyops.hpp"

namespace qes2d {

/// Exact scalar used for identity checks.
using Exact = Rational;

/// Dense linear operator on the monomial basis {1, rho, ..., rho^N}.
///
/// Column k holds the coefficients of the image of rho^k, so composition A*B
/// is the ordinary matrix product.
template <class Scalar>
class Operator {
 public:
  Operator() = default;
  explicit Operator(std::size_t dim) : dim_(dim), data_(dim * dim, Scalar(0)) {}

  std::size_t dim() const noexcept { return dim_; }

  Scalar& operator()(std::size_t row, std::size_t col) { return data_[col * dim_ + row]; }
  const Scalar& operator()(std::size_t row, std::size_t col) const { return data_[col * dim_ + row]; }

  std::span<const Scalar> column(std::size_t col) const {
    return std::span<const Scalar>(data_).subspan(col * dim_, dim_);
  }

  Operator operator*(const Operator& rhs) const {
    Operator out(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      for (std::size_t k = 0; k < dim_; ++k) {
        const Scalar& b = rhs(k, c);
        if (b == 0) continue;
        for (std::size_t r = 0; r < dim_; ++r) {
          const Scalar& a = (*this)(r, k);
          if (a != 0) out(r, c) += a * b;
        }
      }
    }
    return out;
  }

  Operator& operator+=(const Operator& rhs) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
    return *this;
  }
  Operator& operator-=(const Operator& rhs) {
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
    return *this;
  }
  Operator& operator*=(const Scalar& factor) {
    for (auto& v : data_) v *= factor;
    return *this;
  }

  friend Operator operator+(Operator a, const Operator& b) { return a += b; }
  friend Operator operator-(Operator a, const Operator& b) { return a -= b; }
  friend Operator operator*(const Scalar& f, Operator a) { return a *= f; }

  friend bool operator==(const Operator& a, const Operator& b) {
    return a.dim_ == b.dim_ && a.data_ == b.data_;
  }

  std::vector<Scalar> apply(std::span<const Scalar> v) const {
    std::vector<Scalar> out(dim_, Scalar(0));
    for (std::size_t c = 0; c < dim_ && c < v.size(); ++c) {
      if (v[c] == 0) continue;
      for (std::size_t r = 0; r < dim_; ++r) out[r] += (*this)(r, c) * v[c];
    }
    return out;
  }

  template <class To>
  Operator<To> cast() const {
    Operator<To> out(dim_);
    for (std::size_t c = 0; c < dim_; ++c) {
      for (std::size_t r = 0; r < dim_; ++r) out(r, c) = convert<To>((*this)(r, c));
    }
    return out;
  }

 private:
  template <class To>
  static To convert(const Scalar& v) {
    if constexpr (std::is_same_v<Scalar, Exact> && !std::is_same_v<To, Exact>) {
      return v.template convert_to<To>();
    } else {
      return static_cast<To>(v);
    }
  }

  std::size_t dim_ = 0;
  std::vector<Scalar> data_;
};

/// J+_n = rho^2 d/drho - n rho on P_N (the image of rho^N is dropped past the top).
template <class Scalar = Exact>
Operator<Scalar> jplus(int n, int N) {
  Operator<Scalar> op(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k < N; ++k) op(k + 1, k) = Scalar(k - n);
  return op;
}

/// J0_n = rho d/drho - n/2.
template <class Scalar = Exact>
Operator<Scalar> jzero(int n, int N) {
  Operator<Scalar> op(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) op(k, k) = Scalar(2 * k - n) / Scalar(2);
  return op;
}

/// J- = d/drho.
template <class Scalar = Exact>
Operator<Scalar> jminus(int N) {
  Operator<Scalar> op(static_cast<std::size_t>(N) + 1);
  for (int k = 1; k <= N; ++k) op(k - 1, k) = Scalar(k);
  return op;
}

/// Secular operator T(n) on P_n, with the rho-coefficient fixed to -n:
/// T rho^k = (k - n) rho^{k+1} - k (k + 2|s|) rho^{k-1}.
template <class Scalar = Exact>
Operator<Scalar> build_T_direct(int n, int s_abs, int N) {
  Operator<Scalar> op(static_cast<std::size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    if (k + 1 <= N) op(k + 1, k) = Scalar(k - n);
    if (k >= 1) op(k - 1, k) = Scalar(-k * (k + 2 * s_abs));
  }
  return op;
}

template <class Scalar = Exact>
Operator<Scalar> build_T_direct(int n, int s_abs) {
  return build_T_direct<Scalar>(n, s_abs, n);
}

/// T(n) = -J0_n J- + J+_n - (1 + 2|s| + n/2) J-, composed from the generators on P_n.
template <class Scalar = Exact>
Operator<Scalar> build_T_algebraic(int n, int s_abs) {
  const Scalar shift = Scalar(2 + 4 * s_abs + n) / Scalar(2);
  Operator<Scalar> t = jplus<Scalar>(n, n);
  t -= jzero<Scalar>(n, n) * jminus<Scalar>(n);
  t -= shift * jminus<Scalar>(n);
  return t;
}

struct CommutatorReport {
  int n = 0;
  int N = 0;
  double dev_j0_jplus = 0.0;    ///< max |[J0,J+] - J+|
  double dev_j0_jminus = 0.0;   ///< max |[J0,J-] + J-|
  double dev_jminus_jplus = 0.0;  ///< max |[J-,J+] - 2 J0|
  double max_deviation() const;
};

/// Checks the sl(2) relations on columns k <= N-2 of a padded space.
/// Requires N >= n + 2; throws Error{InvalidInput} otherwise.
CommutatorReport commutator_check(int n, int N);

}  // namespace qes2d
