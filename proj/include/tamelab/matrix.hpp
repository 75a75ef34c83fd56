#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tamelab/padic.hpp"

namespace tamelab {

/// m x m matrix over one coefficient ring (PadicScalar or SeriesElement).
/// All entries share the ring parameters of the prototype they were built from.
template <class R>
class RingMatrix {
 public:
  RingMatrix(std::size_t m, const R& proto) : m_(m), entries_(m * m, proto.zero_like()) {}

  static RingMatrix identity(std::size_t m, const R& proto) {
    RingMatrix r(m, proto);
    for (std::size_t i = 0; i < m; ++i) r(i, i) = proto.one_like();
    return r;
  }

  static RingMatrix from_ints(const R& proto, const std::vector<std::vector<i64>>& rows) {
    RingMatrix r(rows.size(), proto);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != rows.size()) throw AlgebraError(ErrorKind::DomainError, "matrix rows must be square");
      for (std::size_t j = 0; j < rows.size(); ++j) r(i, j) = proto.from_int_like(rows[i][j]);
    }
    return r;
  }

  std::size_t size() const noexcept { return m_; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  R& operator()(std::size_t i, std::size_t j) { return entries_[i * m_ + j]; }
  const std::vector<R>& entries() const noexcept { return entries_; }
  const R& proto() const { return entries_.front(); }

  u64 p() const { return proto().p(); }
  int precision() const { return proto().precision(); }

  template <class F>
  RingMatrix map(F&& f) const {
    RingMatrix r(m_, f(entries_.front()));
    for (std::size_t i = 0; i < entries_.size(); ++i) r.entries_[i] = f(entries_[i]);
    return r;
  }

  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    a.require_same_size(b);
    RingMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.entries_[i] + b.entries_[i];
    return r;
  }

  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
    a.require_same_size(b);
    RingMatrix r = a;
    for (std::size_t i = 0; i < r.entries_.size(); ++i) r.entries_[i] = a.entries_[i] - b.entries_[i];
    return r;
  }

  RingMatrix operator-() const {
    RingMatrix r = *this;
    for (auto& e : r.entries_) e = -e;
    return r;
  }

  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    a.require_same_size(b);
    const std::size_t m = a.m_;
    RingMatrix r(m, a.proto());
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t k = 0; k < m; ++k) {
        const R& aik = a(i, k);
        if (aik.is_zero()) continue;
        for (std::size_t j = 0; j < m; ++j) r(i, j) = r(i, j) + aik * b(k, j);
      }
    }
    return r;
  }

  friend RingMatrix operator*(const R& s, const RingMatrix& a) {
    RingMatrix r = a;
    for (auto& e : r.entries_) e = s * e;
    return r;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.m_ == b.m_ && a.entries_ == b.entries_;
  }

  R trace() const {
    R t = proto().zero_like();
    for (std::size_t i = 0; i < m_; ++i) t = t + (*this)(i, i);
    return t;
  }

  R det() const {
    if (m_ <= 4) return laplace_det(all_indices(), all_indices());
    RingMatrix work = *this;
    R d = proto().one_like();
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = m_;
      for (std::size_t r = c; r < m_; ++r) {
        if (work(r, c).is_unit()) {
          piv = r;
          break;
        }
      }
      // No unit pivot: det lies in the maximal ideal; expand instead.
      if (piv == m_) return laplace_det(all_indices(), all_indices());
      if (piv != c) {
        work.swap_rows(piv, c);
        d = -d;
      }
      d = d * work(c, c);
      const R inv = work(c, c).inverse();
      for (std::size_t r = c + 1; r < m_; ++r) {
        const R f = work(r, c) * inv;
        if (f.is_zero()) continue;
        for (std::size_t j = c; j < m_; ++j) work(r, j) = work(r, j) - f * work(c, j);
      }
    }
    return d;
  }

  /// Adjugate for m <= 4, Gauss-Jordan with unit pivots otherwise.
  RingMatrix inverse() const {
    if (m_ <= 4) {
      const R d = det();
      if (!d.is_unit()) throw AlgebraError(ErrorKind::NonUnitDeterminant, "determinant is not a unit");
      const R dinv = d.inverse();
      RingMatrix r(m_, proto());
      for (std::size_t i = 0; i < m_; ++i) {
        for (std::size_t j = 0; j < m_; ++j) {
          // adj(i, j) = (-1)^(i+j) minor(j, i)
          R c = laplace_det(without(j), without(i));
          if ((i + j) % 2 == 1) c = -c;
          r(i, j) = c * dinv;
        }
      }
      return r;
    }
    RingMatrix work = *this;
    RingMatrix r = identity(m_, proto());
    for (std::size_t c = 0; c < m_; ++c) {
      std::size_t piv = m_;
      for (std::size_t row = c; row < m_; ++row) {
        if (work(row, c).is_unit()) {
          piv = row;
          break;
        }
      }
      if (piv == m_) throw AlgebraError(ErrorKind::NonUnitDeterminant, "no unit pivot in column");
      work.swap_rows(piv, c);
      r.swap_rows(piv, c);
      const R inv = work(c, c).inverse();
      for (std::size_t j = 0; j < m_; ++j) {
        work(c, j) = work(c, j) * inv;
        r(c, j) = r(c, j) * inv;
      }
      for (std::size_t row = 0; row < m_; ++row) {
        if (row == c) continue;
        const R f = work(row, c);
        if (f.is_zero()) continue;
        for (std::size_t j = 0; j < m_; ++j) {
          work(row, j) = work(row, j) - f * work(c, j);
          r(row, j) = r(row, j) - f * r(c, j);
        }
      }
    }
    return r;
  }

  bool is_identity() const { return *this == identity(m_, proto()); }

  /// Canonical serialization used as a hash key during closure.
  std::string key() const {
    std::string out;
    for (const auto& e : entries_) e.append_key(out);
    return out;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < m_; ++i) {
      s += i == 0 ? "[" : ", [";
      for (std::size_t j = 0; j < m_; ++j) {
        if (j) s += ", ";
        s += (*this)(i, j).to_string();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  void require_same_size(const RingMatrix& other) const {
    if (m_ != other.m_) throw AlgebraError(ErrorKind::RingMismatch, "matrix sizes differ");
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  std::vector<std::size_t> all_indices() const {
    std::vector<std::size_t> v(m_);
    for (std::size_t i = 0; i < m_; ++i) v[i] = i;
    return v;
  }

  std::vector<std::size_t> without(std::size_t skip) const {
    std::vector<std::size_t> v;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != skip) v.push_back(i);
    }
    return v;
  }

  R laplace_det(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    const std::size_t n = rows.size();
    if (n == 0) return proto().one_like();
    if (n == 1) return (*this)(rows[0], cols[0]);
    if (n == 2) return (*this)(rows[0], cols[0]) * (*this)(rows[1], cols[1]) - (*this)(rows[0], cols[1]) * (*this)(rows[1], cols[0]);
    R d = proto().zero_like();
    const std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
    for (std::size_t j = 0; j < n; ++j) {
      const R& a = (*this)(rows[0], cols[j]);
      if (a.is_zero()) continue;
      std::vector<std::size_t> sub_cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) sub_cols.push_back(cols[k]);
      }
      const R term = a * laplace_det(sub_rows, sub_cols);
      d = (j % 2 == 0) ? d + term : d - term;
    }
    return d;
  }

  std::size_t m_;
  std::vector<R> entries_;
};

using ScalarMatrix = RingMatrix<PadicScalar>;
using SeriesMatrix = RingMatrix<SeriesElement>;

/// Largest k <= precision with g = I mod m^k.
template <class R>
int congruence_depth(const RingMatrix<R>& g) {
  int best = g.precision();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      const R e = (i == j) ? g(i, j) - g.proto().one_like() : g(i, j);
      best = std::min(best, e.depth());
    }
  }
  return best;
}

/// Largest k with every entry of X in m^k.
template <class R>
int matrix_depth(const RingMatrix<R>& x) {
  int best = x.precision();
  for (const auto& e : x.entries()) best = std::min(best, e.depth());
  return best;
}

/// g h g^-1 h^-1. With this convention the tame relations read
/// [s, x] = x^(N(q) - 1) for s = diag(alpha, alpha^-1).
template <class R>
RingMatrix<R> commutator(const RingMatrix<R>& g, const RingMatrix<R>& h) {
  return g * h * g.inverse() * h.inverse();
}

template <class R>
RingMatrix<R> matrix_bracket(const RingMatrix<R>& x, const RingMatrix<R>& y) {
  return x * y - y * x;
}

template <class R>
RingMatrix<R> int_power(const RingMatrix<R>& g, i64 e) {
  if (e < 0) return int_power(g.inverse(), -(e + 1)) * g.inverse();
  RingMatrix<R> result = RingMatrix<R>::identity(g.size(), g.proto());
  RingMatrix<R> base = g;
  auto n = static_cast<u64>(e);
  while (n != 0) {
    if (n & 1) result = result * base;
    n >>= 1;
    if (n != 0) base = base * base;
  }
  return result;
}

/// g^alpha for g = I mod m. Only alpha mod p^(precision - depth(g)) matters,
/// so the power is taken on the canonical integer representative.
template <class R>
RingMatrix<R> zp_power(const RingMatrix<R>& g, const PadicScalar& alpha) {
  const int depth = congruence_depth(g);
  if (depth < 1) throw AlgebraError(ErrorKind::DepthError, "zp_power needs g = I mod m");
  if (alpha.p() != g.p()) throw AlgebraError(ErrorKind::RingMismatch, "exponent prime differs from matrix prime");
  const int needed = g.precision() - depth;
  if (alpha.precision() < needed) {
    throw AlgebraError(ErrorKind::PrecisionMismatch, "exponent known mod p^" + std::to_string(alpha.precision()) +
                                                         ", need p^" + std::to_string(needed));
  }
  const u64 e = needed <= 0 ? 0 : alpha.value() % checked_pow(alpha.p(), needed);
  return int_power(g, static_cast<i64>(e));
}

// PadicScalar-specific matrix helpers (matgrp.cpp).

ScalarMatrix truncate(const ScalarMatrix& g, int precision);
ScalarMatrix lift(const ScalarMatrix& g, int precision);
/// Exact division of every entry by p^k (entries must be divisible).
ScalarMatrix divide_by_p_power(const ScalarMatrix& x, int k);

/// Truncated exponential series for X = 0 mod p; det(exp X) = pexp(trace X).
ScalarMatrix mat_exp(const ScalarMatrix& x);
/// Truncated logarithm series for g = I mod p.
ScalarMatrix mat_log(const ScalarMatrix& g);

/// Elementary matrix with p in position (i, j) (0-based).
ScalarMatrix scaled_elementary(std::size_t m, std::size_t i, std::size_t j, u64 p, int precision);
/// E_i = E_{i,i} - E_{i+1,i+1} + E_{i,i+1} - E_{i+1,i}, each with p in place of 1.
ScalarMatrix scaled_diagonal_generator(std::size_t m, std::size_t i, u64 p, int precision);

/// y_{i,j} = exp(E_{i,j}) for i != j, followed by y_i = exp(E_i), i = 1..m-1.
std::vector<ScalarMatrix> sl_congruence_generators(std::size_t m, u64 p, int precision);

}  // namespace tamelab
