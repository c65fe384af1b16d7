#pragma once

#include <Eigen/Core>

#include <vector>

#include "seamrep/qscalar.hpp"

namespace seamrep {

template <class S>
using ExactMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <class S>
using ExactVector = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <class S>
ExactMatrix<S> zero_matrix(Eigen::Index r, Eigen::Index c) {
  ExactMatrix<S> m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = S(0);
  return m;
}

template <class S>
ExactMatrix<S> identity_matrix(Eigen::Index n) {
  ExactMatrix<S> m = zero_matrix<S>(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = S(1);
  return m;
}

// Plain triple loop; skips zero entries of a.
template <class S>
ExactMatrix<S> mat_mul(const ExactMatrix<S>& a, const ExactMatrix<S>& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product");
  ExactMatrix<S> r = zero_matrix<S>(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index l = 0; l < a.cols(); ++l) {
      if (is_zero(a(i, l))) continue;
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!is_zero(b(l, j))) r(i, j) += a(i, l) * b(l, j);
    }
  return r;
}

template <class S>
ExactMatrix<S> transpose(const ExactMatrix<S>& a) {
  ExactMatrix<S> r(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) r(j, i) = a(i, j);
  return r;
}

template <class S>
bool equal(const ExactMatrix<S>& a, const ExactMatrix<S>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

template <class S>
bool is_zero_matrix(const ExactMatrix<S>& a) {
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (!is_zero(a(i, j))) return false;
  return true;
}

template <class S>
struct Rref {
  ExactMatrix<S> reduced;
  std::vector<Eigen::Index> pivots;  // pivot column per nonzero row
};

// Gauss-Jordan over the field S, pivot = first nonzero entry in the column.
template <class S>
Rref<S> rref(ExactMatrix<S> m) {
  Rref<S> out;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r) m.row(p).swap(m.row(r));
    S inv = S(1) / m(r, c);
    for (Eigen::Index j = c; j < m.cols(); ++j)
      if (!is_zero(m(r, j))) m(r, j) *= inv;
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      S f = m(i, c);
      for (Eigen::Index j = c; j < m.cols(); ++j)
        if (!is_zero(m(r, j))) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

template <class S>
Eigen::Index rank(const ExactMatrix<S>& m) {
  return static_cast<Eigen::Index>(rref(m).pivots.size());
}

// Columns form a basis of {x : m x = 0}; checked by multiplication.
template <class S>
ExactMatrix<S> kernel(const ExactMatrix<S>& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (auto c : rr.pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    if (!is_pivot[static_cast<size_t>(c)]) free.push_back(c);
  ExactMatrix<S> k = zero_matrix<S>(m.cols(), static_cast<Eigen::Index>(free.size()));
  for (size_t f = 0; f < free.size(); ++f) {
    const auto fc = free[f];
    k(fc, static_cast<Eigen::Index>(f)) = S(1);
    for (size_t r = 0; r < rr.pivots.size(); ++r)
      k(rr.pivots[r], static_cast<Eigen::Index>(f)) = -rr.reduced(static_cast<Eigen::Index>(r), fc);
  }
  if (!is_zero_matrix(mat_mul(m, k))) throw VerificationFailed("kernel basis does not annihilate the matrix");
  return k;
}

// Determinant by elimination over the field.
template <class S>
S det_field(ExactMatrix<S> m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  S det(1);
  const Eigen::Index n = m.rows();
  for (Eigen::Index c = 0; c < n; ++c) {
    Eigen::Index p = c;
    while (p < n && is_zero(m(p, c))) ++p;
    if (p == n) return S(0);
    if (p != c) {
      m.row(p).swap(m.row(c));
      det = -det;
    }
    det *= m(c, c);
    S inv = S(1) / m(c, c);
    for (Eigen::Index i = c + 1; i < n; ++i) {
      if (is_zero(m(i, c))) continue;
      S f = m(i, c) * inv;
      for (Eigen::Index j = c; j < n; ++j)
        if (!is_zero(m(c, j))) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

// Fraction-free determinant for generic q: rows are cleared of denominators and
// Bareiss elimination runs over Laurent polynomials with exact division.
RationalFunction determinant(const ExactMatrix<RationalFunction>& m);
inline Cyclotomic determinant(const ExactMatrix<Cyclotomic>& m) { return det_field(m); }

ExactMatrix<Cyclotomic> specialize(const ExactMatrix<RationalFunction>& m, const UnityOrder& order);

}  // namespace seamrep
