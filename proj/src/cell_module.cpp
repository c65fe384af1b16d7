#include "seamrep/cell_module.hpp"

namespace seamrep {

RationalFunction det_formula(int n, int k, int d) {
  GenericQ g;
  RationalFunction r(1);
  auto power = [](RationalFunction x, long long e) {
    RationalFunction p(1);
    for (long long i = 0; i < e; ++i) p *= x;
    return p;
  };
  for (int j = 1; j <= k / 2; ++j) r *= power(g.qnum(j) / g.qnum(k - j + 1), cell_dimension(n, k - 2 * j, d));
  for (int j = 1; j <= (n + k - d) / 2; ++j)
    r *= power(g.qnum(d + j + 1) / g.qnum(j), cell_dimension(n, k, d + 2 * j));
  return r;
}

ExactMatrix<Cyclotomic> renormalized_gram(const CellBasis<GenericQ>& b, const RationalFunction& divisor,
                                          const UnityOrder& order) {
  if (divisor.is_zero()) throw DenominatorVanishes("renormalizing by zero");
  auto g = gram_matrix(b);
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = 0; j < g.cols(); ++j) g(i, j) /= divisor;
  return specialize(g, order);
}

Diagram drop_top_defect(const Diagram& w) {
  const int L = w.left(), R = w.right();
  if (L == 0 || w.partner(0) != L) throw ShapeMismatch("top left point is not joined to the top right point");
  auto map = [&](int i) { return i < L ? i - 1 : i - 2; };
  std::vector<std::uint8_t> p(static_cast<size_t>(L + R - 2));
  for (int i = 1; i < L + R; ++i) {
    if (i == L) continue;
    p[static_cast<size_t>(map(i))] = static_cast<std::uint8_t>(map(w.partner(i)));
  }
  return Diagram(L - 1, R - 1, std::move(p));
}

Diagram open_top_arc(const Diagram& w) {
  const int L = w.left(), R = w.right();
  if (L == 0 || w.partner(0) >= L) throw ShapeMismatch("top left point is not on an arc");
  const int pt = w.partner(0);
  auto map = [&](int i) { return i < L ? i - 1 : i; };
  std::vector<std::uint8_t> p(static_cast<size_t>(L + R));
  for (int i = 1; i < L + R; ++i) {
    if (i == pt) continue;
    p[static_cast<size_t>(map(i))] = static_cast<std::uint8_t>(map(w.partner(i)));
  }
  p[static_cast<size_t>(map(pt))] = static_cast<std::uint8_t>(L - 1);
  p[static_cast<size_t>(L - 1)] = static_cast<std::uint8_t>(map(pt));
  return Diagram(L - 1, R + 1, std::move(p));
}

ChangeOfBasis<RootOfUnity> change_of_basis_at(const CellBasis<GenericQ>& b, const UnityOrder& order) {
  const int d = b.d();
  if (RootOfUnity(order).qnum_vanishes(d + 1)) throw CriticalD("[d+1] = 0 for d=" + std::to_string(d));
  auto g = change_of_basis(b);
  ChangeOfBasis<RootOfUnity> out;
  out.fam1 = g.fam1;
  out.fam2 = g.fam2;
  out.opened = g.opened;
  out.gram = specialize(g.gram, order);
  out.U = specialize(g.U, order);
  out.block1 = specialize(g.block1, order);
  out.block2 = specialize(g.block2, order);
  const auto m = out.U.rows();
  out.unitriangular = true;
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c <= r; ++c)
      if (out.U(r, c) != Cyclotomic(r == c ? 1 : 0)) out.unitriangular = false;
  out.transformed = mat_mul(transpose(out.U), mat_mul(out.gram, out.U));
  auto blocks = zero_matrix<Cyclotomic>(m, m);
  blocks.topLeftCorner(out.block1.rows(), out.block1.cols()) = out.block1;
  blocks.bottomRightCorner(out.block2.rows(), out.block2.cols()) = out.block2;
  out.block_diagonal = equal(out.transformed, blocks);
  return out;
}

}  // namespace seamrep
