#include "seamrep/exact_matrix.hpp"

namespace seamrep {

RationalFunction determinant(const ExactMatrix<RationalFunction>& m) {
  if (m.rows() != m.cols()) throw ShapeMismatch("determinant of a non-square matrix");
  const Eigen::Index n = m.rows();
  if (n == 0) return RationalFunction(1);
  std::vector<std::vector<LaurentPoly>> a(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  RationalFunction scale(1);  // det m = det a / scale
  for (Eigen::Index i = 0; i < n; ++i) {
    LaurentPoly l(1);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& den = m(i, j).den();
      if (den.is_constant()) continue;
      LaurentPoly g = LaurentPoly::poly_gcd(l, den);
      l = *(l * den).exact_div(g);
    }
    int low = 0;
    bool any = false;
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto& x = m(i, j);
      if (x.is_zero()) continue;
      LaurentPoly v = x.num() * *l.exact_div(x.den());
      low = any ? std::min(low, v.low()) : v.low();
      any = true;
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = std::move(v);
    }
    if (!any) return RationalFunction(0);
    for (auto& v : a[static_cast<size_t>(i)]) v = v.shifted(-low);
    scale *= RationalFunction(l.shifted(-low));
  }
  bool negate = false;
  LaurentPoly prev(1);
  const auto N = static_cast<size_t>(n);
  for (size_t k = 0; k + 1 < N; ++k) {
    if (a[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < N && a[p][k].is_zero()) ++p;
      if (p == N) return RationalFunction(0);
      std::swap(a[p], a[k]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < N; ++i) {
      for (size_t j = k + 1; j < N; ++j) {
        LaurentPoly t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto qt = t.exact_div(prev);
        if (!qt) throw VerificationFailed("Bareiss step is not exact");
        a[i][j] = std::move(*qt);
      }
      a[i][k] = LaurentPoly();
    }
    prev = a[k][k];
  }
  RationalFunction det(a[N - 1][N - 1]);
  if (negate) det = -det;
  return det / scale;
}

ExactMatrix<Cyclotomic> specialize(const ExactMatrix<RationalFunction>& m, const UnityOrder& order) {
  ExactMatrix<Cyclotomic> r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = specialize(m(i, j), order);
  return r;
}

}  // namespace seamrep
