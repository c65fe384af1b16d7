#include <algorithm>
#include <set>

#include "seamrep/errors.hpp"
#include "seamrep/gl_morphism.hpp"
#include "seamrep/structure.hpp"

namespace seamrep {

LinkForest link_forest(const Diagram& w) {
  const int L = w.left();
  auto pos = [&](int idx) { return idx < L ? L - 1 - idx : idx; };
  LinkForest f;
  for (int i = 0; i < w.size(); ++i) {
    int j = w.partner(i);
    if (j < i) continue;
    ForestLink x;
    x.a = w.point(i);
    x.b = w.point(j);
    x.lo = std::min(pos(i), pos(j));
    x.hi = std::max(pos(i), pos(j));
    f.links.push_back(x);
  }
  std::sort(f.links.begin(), f.links.end(), [](const ForestLink& x, const ForestLink& y) { return x.lo < y.lo; });
  for (size_t y = 0; y < f.size(); ++y)
    for (size_t x = 0; x < f.size(); ++x)
      if (f.leq(x, y)) ++f.links[y].h;
  return f;
}

LaurentPoly stanley_H(const LinkForest& f) {
  LaurentPoly num = LaurentPoly::monomial(0);
  for (long j = 2; j <= static_cast<long>(f.size()); ++j) num = num * qnum_poly(j);
  for (const auto& y : f.links) {
    auto r = num.exact_div(qnum_poly(y.h));
    if (!r) throw NotDivisible("[" + std::to_string(f.size()) + "]! is not divisible by the hook product");
    num = *r;
  }
  return num;
}

bool is_mirror_pair(int t, int s, const UnityOrder& order) {
  const int two_ell = 2 * order.ell;
  return t < s && s < t + two_ell && ((s + t + 2) % two_ell + two_ell) % two_ell == 0;
}

std::vector<std::pair<int, int>> mirror_pairs(int n, int k, const UnityOrder& order) {
  std::vector<std::pair<int, int>> out;
  const auto ds = delta(n, k);
  for (int t : ds)
    for (int s : ds)
      if (is_mirror_pair(t, s, order)) out.emplace_back(t, s);
  return out;
}

ExactMatrix<Cyclotomic> theta_component(const CellBasis<RootOfUnity>& bs, const CellBasis<RootOfUnity>& bt,
                                        const Diagram& w, const Cyclotomic& h) {
  auto m = zero_matrix<Cyclotomic>(static_cast<Eigen::Index>(bt.size()), static_cast<Eigen::Index>(bs.size()));
  if (h.is_zero()) return m;
  for (size_t i = 0; i < bs.size(); ++i) {
    auto c = compose(bs.diagram(i), w);
    if (c.loops != 0) throw VerificationFailed("loop closed at the s-interface of a monic product");
    // P_k kills products with a boundary-boundary arc; the rest are basis diagrams
    if (auto j = bt.index_of(c.diagram)) m(static_cast<Eigen::Index>(*j), static_cast<Eigen::Index>(i)) = h;
  }
  return m;
}

namespace {

std::vector<Element<Cyclotomic>> generator_list(const SeamCtx& ctx) {
  auto g = seam_generators(ctx);
  std::vector<Element<Cyclotomic>> out;
  for (int i = 1; i <= ctx.n(); ++i) out.push_back(g.e[static_cast<size_t>(i)]);
  return out;
}

// Stack rows and keep only the nonzero rows of the reduced form.
ExactMatrix<Cyclotomic> append_reduce(const ExactMatrix<Cyclotomic>& acc, const ExactMatrix<Cyclotomic>& rows) {
  ExactMatrix<Cyclotomic> m(acc.rows() + rows.rows(), rows.cols());
  for (Eigen::Index i = 0; i < acc.rows(); ++i) m.row(i) = acc.row(i);
  for (Eigen::Index i = 0; i < rows.rows(); ++i) m.row(acc.rows() + i) = rows.row(i);
  auto rr = rref(m);
  return rr.reduced.topRows(static_cast<Eigen::Index>(rr.pivots.size()));
}

bool is_unit_sign(const Cyclotomic& x) { return x == Cyclotomic(1) || x == Cyclotomic(-1); }

}  // namespace

GLMorphism theta_restricted(const SeamCtx& ctx, int s, int t) {
  const auto order = *ctx.field().order();
  const int n = ctx.n(), k = ctx.k();
  if (!in_delta(n, k, s) || !in_delta(n, k, t) || !is_mirror_pair(t, s, order))
    throw NotMirrorPair("(t,s) = (" + std::to_string(t) + "," + std::to_string(s) + ") is not a mirror pair in Delta");
  CellBasis<RootOfUnity> bs(ctx, s), bt(ctx, t);

  GLMorphism out;
  out.s = s;
  out.t = t;
  out.ws = enumerate_monic(s, t);
  std::vector<ExactMatrix<Cyclotomic>> comps;
  std::vector<size_t> live;
  for (size_t i = 0; i < out.ws.size(); ++i) {
    out.H.push_back(stanley_H(link_forest(out.ws[i])));
    comps.push_back(theta_component(bs, bt, out.ws[i], specialize(out.H.back(), order)));
    out.contributes.push_back(!is_zero_matrix(comps.back()));
    if (out.contributes.back()) live.push_back(i);
  }
  out.signs.assign(out.ws.size(), 1);
  if (live.empty()) throw NoConsistentSigns("no monic diagram contributes to the morphism");

  // constraint rows: entries of A_t(g) C_w - C_w A_s(g), one column per live w
  const auto rt = static_cast<Eigen::Index>(bt.size()), cs = static_cast<Eigen::Index>(bs.size());
  const auto nl = static_cast<Eigen::Index>(live.size());
  ExactMatrix<Cyclotomic> R(0, nl);
  for (const auto& g : generator_list(ctx)) {
    auto At = action_matrix(bt, g), As = action_matrix(bs, g);
    auto block = zero_matrix<Cyclotomic>(rt * cs, nl);
    for (Eigen::Index c = 0; c < nl; ++c) {
      const auto& C = comps[live[static_cast<size_t>(c)]];
      ExactMatrix<Cyclotomic> d = mat_mul(At, C);
      d -= mat_mul(C, As);
      for (Eigen::Index i = 0; i < rt; ++i)
        for (Eigen::Index j = 0; j < cs; ++j) block(i * cs + j, c) = d(i, j);
    }
    R = append_reduce(R, block);
  }
  auto K = kernel(R);
  const auto m = K.cols();
  if (m == 0) throw NoConsistentSigns("only the zero combination intertwines");
  if (m > 20) throw AmbiguousSigns("sign solution space too large to enumerate");

  // kernel columns carry an identity on the free coordinates, so those must be +-1
  std::set<std::vector<int>> found;
  for (long mask = 0; mask < (1L << m); ++mask) {
    ExactVector<Cyclotomic> c(m);
    for (Eigen::Index j = 0; j < m; ++j) c(j) = Cyclotomic((mask >> j) & 1 ? -1 : 1);
    std::vector<int> sigma;
    bool ok = true;
    for (Eigen::Index i = 0; i < nl && ok; ++i) {
      Cyclotomic x(0);
      for (Eigen::Index j = 0; j < m; ++j)
        if (!K(i, j).is_zero()) x += K(i, j) * c(j);
      ok = is_unit_sign(x);
      sigma.push_back(x == Cyclotomic(1) ? 1 : -1);
    }
    if (!ok) continue;
    if (sigma[0] < 0)
      for (auto& v : sigma) v = -v;
    found.insert(sigma);
  }
  if (found.empty()) throw NoConsistentSigns("no +-1 assignment intertwines the generators");

  std::vector<ExactMatrix<Cyclotomic>> thetas;
  for (const auto& sigma : found) {
    auto th = zero_matrix<Cyclotomic>(rt, cs);
    for (size_t i = 0; i < live.size(); ++i) {
      if (sigma[i] > 0)
        th += comps[live[i]];
      else
        th -= comps[live[i]];
    }
    if (is_zero_matrix(th)) continue;
    bool seen = false;
    for (const auto& u : thetas) {
      ExactMatrix<Cyclotomic> neg = -u;
      if (equal(u, th) || equal(neg, th)) seen = true;
    }
    if (!seen) thetas.push_back(th);
    if (thetas.size() == 1 && !seen)
      for (size_t i = 0; i < live.size(); ++i) out.signs[live[i]] = sigma[i];
  }
  if (thetas.empty()) throw NoConsistentSigns("every +-1 assignment gives the zero map");
  if (thetas.size() > 1)
    throw AmbiguousSigns(std::to_string(thetas.size()) + " distinct morphisms up to sign");
  out.theta = thetas.front();
  return out;
}

MorphismCheck verify_image_is_radical(const SeamCtx& ctx, const GLMorphism& m) {
  CellBasis<RootOfUnity> bs(ctx, m.s), bt(ctx, m.t);
  MorphismCheck rep;
  rep.nonzero = !is_zero_matrix(m.theta);
  rep.in_radical = is_zero_matrix(mat_mul(gram_matrix(bt), m.theta));
  rep.rank = static_cast<long long>(rank(m.theta));
  rep.dim_rad = radical_dimension(ctx.n(), ctx.k(), m.t, ctx.field().order());
  rep.rank_matches = rep.rank == rep.dim_rad;
  rep.intertwines = true;
  for (const auto& g : generator_list(ctx))
    if (!equal(mat_mul(action_matrix(bt, g), m.theta), mat_mul(m.theta, action_matrix(bs, g))))
      rep.intertwines = false;
  return rep;
}

}  // namespace seamrep
