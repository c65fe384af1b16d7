#pragma once

#include <algorithm>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <thread>
#include <unordered_map>
#include <vector>

#include "seamrep/exact_matrix.hpp"
#include "seamrep/seam.hpp"

namespace seamrep {

// Ordered basis of the cellular module Cell^d over B(n,k). Each basis vector is
// P_k w for a monic (n+k,d)-diagram w without boundary-boundary arcs.
template <class F>
class CellBasis {
 public:
  using Scalar = typename F::Scalar;

  CellBasis(SeamContext<F> ctx, int d) : CellBasis(ctx, d, seam_basis_diagrams(ctx.n(), ctx.k(), d)) {
    if (!in_delta(ctx.n(), ctx.k(), d))
      throw NotInDelta("d=" + std::to_string(d) + " not in Delta_{" + std::to_string(ctx.n()) + "," +
                       std::to_string(ctx.k()) + "}");
  }

  // Explicit order; every diagram must belong to the canonical basis.
  CellBasis(SeamContext<F> ctx, int d, std::vector<Diagram> diagrams)
      : ctx_(std::move(ctx)), d_(d), diagrams_(std::move(diagrams)) {
    const auto& f = ctx_.field();
    for (size_t i = 0; i < diagrams_.size(); ++i) {
      const auto& w = diagrams_[i];
      if (w.left() != ctx_.size() || w.right() != d || !w.is_monic() || has_boundary_arc(w, ctx_.n()))
        throw ShapeMismatch("not a basis diagram: " + w.to_string());
      if (!index_.emplace(w, i).second) throw ShapeMismatch("repeated basis diagram: " + w.to_string());
      projected_.push_back(mul(f, ctx_.projector(), w).filtered([](const Diagram& x) { return x.is_monic(); }));
    }
  }

  const SeamContext<F>& context() const { return ctx_; }
  const F& field() const { return ctx_.field(); }
  int d() const { return d_; }
  size_t size() const { return diagrams_.size(); }
  const std::vector<Diagram>& diagrams() const { return diagrams_; }
  const Diagram& diagram(size_t i) const { return diagrams_[i]; }
  std::optional<size_t> index_of(const Diagram& w) const {
    auto it = index_.find(w);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  // Monic part of P_k w_i.
  const Element<Scalar>& projected(size_t i) const { return projected_[i]; }

  // Coordinates of P_k x for an (n+k,d) element x; non-monic terms drop out.
  ExactVector<Scalar> coordinates(const Element<Scalar>& x) const {
    if (x.left() != ctx_.size() || x.right() != d_) throw ShapeMismatch("coordinates: element shape");
    ExactVector<Scalar> v(static_cast<Eigen::Index>(size()));
    for (size_t i = 0; i < size(); ++i) v(static_cast<Eigen::Index>(i)) = Scalar(0);
    for (const auto& [w, c] : x.terms()) {
      auto i = index_of(w);
      if (i) v(static_cast<Eigen::Index>(*i)) = c;
    }
    return v;
  }

  // Element P_k sum_i v_i w_i.
  Element<Scalar> to_element(const ExactVector<Scalar>& v) const {
    Element<Scalar> x(ctx_.size(), d_);
    for (size_t i = 0; i < size(); ++i)
      if (!is_zero(v(static_cast<Eigen::Index>(i)))) x += projected_[i] * v(static_cast<Eigen::Index>(i));
    return x;
  }

 private:
  SeamContext<F> ctx_;
  int d_;
  std::vector<Diagram> diagrams_;
  std::unordered_map<Diagram, size_t> index_;
  std::vector<Element<Scalar>> projected_;
};

// g acting on v; g is an (n+k,n+k) element, normally in P_k TL P_k.
template <class F>
ExactVector<typename F::Scalar> act(const CellBasis<F>& b, const Element<typename F::Scalar>& g,
                                    const ExactVector<typename F::Scalar>& v) {
  using S = typename F::Scalar;
  if (g.left() != b.context().size() || g.right() != b.context().size()) throw ShapeMismatch("act: element shape");
  if (v.size() != static_cast<Eigen::Index>(b.size())) throw ShapeMismatch("act: vector length");
  Element<S> acc(b.context().size(), b.d());
  for (size_t j = 0; j < b.size(); ++j) {
    const auto& c = v(static_cast<Eigen::Index>(j));
    if (is_zero(c)) continue;
    acc += mul(b.field(), g, b.projected(j)) * c;
  }
  return b.coordinates(acc.filtered([](const Diagram& x) { return x.is_monic(); }));
}

// Matrix of g on the basis (column j = image of basis vector j).
template <class F>
ExactMatrix<typename F::Scalar> action_matrix(const CellBasis<F>& b, const Element<typename F::Scalar>& g) {
  using S = typename F::Scalar;
  const auto n = static_cast<Eigen::Index>(b.size());
  ExactMatrix<S> m = zero_matrix<S>(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    auto col = b.coordinates(mul(b.field(), g, b.projected(static_cast<size_t>(j)))
                                 .filtered([](const Diagram& x) { return x.is_monic(); }));
    m.col(j) = col;
  }
  return m;
}

// <P v, P w>: coefficient of the (d,d) identity in v* P_k w, by projector expansion.
template <class F>
typename F::Scalar gram_entry(const CellBasis<F>& b, size_t i, size_t j) {
  using S = typename F::Scalar;
  const auto& f = b.field();
  const Diagram vs = reflect(b.diagram(i));
  const Diagram id = identity(b.d());
  S r = f.constant(0);
  std::vector<S> bp = beta_powers(f, 1);
  for (const auto& [t, c] : b.projected(j).terms()) {
    auto [dg, loops] = compose(vs, t);
    if (dg != id) continue;
    while (static_cast<int>(bp.size()) <= loops) bp.push_back(bp.back() * bp[1]);
    r += c * bp[static_cast<size_t>(loops)];
  }
  return r;
}

// Closed form beta^i [k+1]/[k-j+1] for v* w when it applies: v* w must be the
// identity and every loop or through line may meet at most one boundary point of
// the interface. Returns nullopt otherwise.
template <class F>
std::optional<typename F::Scalar> gram_entry_fast(const CellBasis<F>& b, size_t i, size_t j) {
  const auto& ctx = b.context();
  const int N = ctx.size(), n = ctx.n(), k = ctx.k(), d = b.d();
  const Diagram& v = b.diagram(i);
  const Diagram& w = b.diagram(j);
  std::vector<bool> seen(static_cast<size_t>(N), false);
  // Through lines: start from each right point r of v, walk across.
  for (int r = 0; r < d; ++r) {
    int x = v.partner(N + r);
    int visits = 0;
    while (true) {
      seen[static_cast<size_t>(x)] = true;
      if (x >= n) ++visits;
      int y = w.partner(x);
      if (y >= N) {
        if (y - N != r) return std::nullopt;
        break;
      }
      seen[static_cast<size_t>(y)] = true;
      if (y >= n) ++visits;
      int z = v.partner(y);
      if (z >= N) return std::nullopt;
      x = z;
    }
    if (visits > 1) return std::nullopt;
  }
  int free_loops = 0, through_projector = 0;
  for (int s = 0; s < N; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    int visits = 0, x = s;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      if (x >= n) ++visits;
      int y = w.partner(x);
      seen[static_cast<size_t>(y)] = true;
      if (y >= n) ++visits;
      x = v.partner(y);
    }
    if (visits == 0) ++free_loops;
    else if (visits == 1) ++through_projector;
    else return std::nullopt;
  }
  const auto& f = b.field();
  // [k+1]/[k+1] is 0/0 when ell = k+1
  auto r = through_projector == 0 ? f.constant(1) : f.qnum(k + 1) / f.qnum(k - through_projector + 1);
  for (int t = 0; t < free_loops; ++t) r *= beta(f);
  return r;
}

enum class GramMethod { Expansion, FastWhereApplicable };

// Gram matrix over the basis order; rows are split across jobs threads.
template <class F>
ExactMatrix<typename F::Scalar> gram_matrix(const CellBasis<F>& b, int jobs = 1,
                                            GramMethod method = GramMethod::Expansion) {
  using S = typename F::Scalar;
  const auto n = static_cast<Eigen::Index>(b.size());
  ExactMatrix<S> g = zero_matrix<S>(n, n);
  auto work = [&](Eigen::Index row) {
    for (Eigen::Index c = row; c < n; ++c) {
      std::optional<S> x;
      if (method == GramMethod::FastWhereApplicable)
        x = gram_entry_fast(b, static_cast<size_t>(row), static_cast<size_t>(c));
      if (!x) x = gram_entry(b, static_cast<size_t>(row), static_cast<size_t>(c));
      g(row, c) = *x;
    }
  };
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(n)));
  if (jobs == 1) {
    for (Eigen::Index r = 0; r < n; ++r) work(r);
  } else {
    std::vector<std::exception_ptr> failures(static_cast<size_t>(jobs));
    auto stripe = [&work, &failures, n, jobs](int t) {
      try {
        for (Eigen::Index r = t; r < n; r += jobs) work(r);
      } catch (...) {
        failures[static_cast<size_t>(t)] = std::current_exception();
      }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(stripe, t);
    for (auto& th : pool) th.join();
    for (const auto& e : failures)
      if (e) std::rethrow_exception(e);
  }
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < r; ++c) g(r, c) = g(c, r);
  return g;
}

template <class F>
typename F::Scalar gram_det(const CellBasis<F>& b) {
  return determinant(gram_matrix(b));
}

// prod_{j=1}^{floor(k/2)} ([j]/[k-j+1])^{dim Cell_{n,k-2j}^d}
//   * prod_{j=1}^{(n+k-d)/2} ([d+j+1]/[j])^{dim Cell_{n,k}^{d+2j}}
RationalFunction det_formula(int n, int k, int d);

// Radical of the form: kernel of the Gram matrix, as coordinate columns.
template <class F>
ExactMatrix<typename F::Scalar> radical_basis(const CellBasis<F>& b) {
  return kernel(gram_matrix(b));
}

template <class F>
Eigen::Index gram_rank(const CellBasis<F>& b) {
  return rank(gram_matrix(b));
}

// Generic Gram divided entrywise by divisor, then specialized.
ExactMatrix<Cyclotomic> renormalized_gram(const CellBasis<GenericQ>& b, const RationalFunction& divisor,
                                          const UnityOrder& order);

// Helpers for the recursive form of the Gram matrix.
// Delete the top through line of a diagram whose left point 1 is a defect.
Diagram drop_top_defect(const Diagram& w);
// Delete left point 1 of a diagram with an arc (1,p); p becomes the top defect.
Diagram open_top_arc(const Diagram& w);

template <class F>
struct ChangeOfBasis {
  std::vector<Diagram> fam1;                 // top point is a defect
  std::vector<Diagram> fam2;                 // top point on an arc, unitriangular order
  std::vector<Diagram> opened;               // open_top_arc of fam2, same order
  ExactMatrix<typename F::Scalar> gram;      // original Gram in the order fam1, fam2
  ExactMatrix<typename F::Scalar> U;         // columns: new basis in old coordinates
  ExactMatrix<typename F::Scalar> transformed;  // U^T gram U
  ExactMatrix<typename F::Scalar> block1;    // Gram^{d-1}_{n-1,k} on drop_top_defect(fam1)
  ExactMatrix<typename F::Scalar> block2;    // ([d+2]/[d+1]) Gram^{d+1}_{n-1,k} on opened
  bool unitriangular = false;
  bool block_diagonal = false;  // transformed equals diag(block1, block2)
};

// psi(v) = (Id_1 x v)(Id_1 x P_{d+1}) closed by an arc joining the new top point
// to the top defect; v an (n+k-1, d+1)-diagram.
template <class F>
Element<typename F::Scalar> psi(const F& f, const Diagram& v) {
  using S = typename F::Scalar;
  const int d1 = v.right();  // d + 1
  const auto& P = wenzl_jones(f, d1, d1).expansion;
  Element<S> top = tensor(identity(1), Element<S>(v));
  Element<S> proj = tensor(identity(1), P);
  std::vector<std::pair<Point, Point>> cap{{{Side::Left, 1}, {Side::Left, 2}}};
  for (int i = 3; i <= d1 + 1; ++i) cap.push_back({{Side::Left, i}, {Side::Right, i - 2}});
  Diagram close = Diagram::from_pairs(d1 + 1, d1 - 1, cap);
  return mul(f, mul(f, top, proj), close);
}

template <class F>
ChangeOfBasis<F> change_of_basis(const CellBasis<F>& b) {
  using S = typename F::Scalar;
  const auto& f = b.field();
  const auto& ctx = b.context();
  const int n = ctx.n(), k = ctx.k(), d = b.d();
  if (f.qnum_vanishes(d + 1)) throw CriticalD("[d+1] = 0 for d=" + std::to_string(d));
  ChangeOfBasis<F> out;
  for (const auto& w : b.diagrams()) (w.partner(0) >= w.left() ? out.fam1 : out.fam2).push_back(w);

  // New vectors for Fam2 and their coordinates in the canonical basis.
  std::map<Diagram, ExactVector<S>> image;
  for (const auto& w : out.fam2) image[w] = b.coordinates(psi(f, open_top_arc(w)).filtered([](const Diagram& x) {
    return x.is_monic();
  }));
  // Order Fam2 so that psi(open(w)) only involves earlier Fam2 diagrams.
  std::vector<Diagram> order;
  std::set<Diagram> placed;
  while (order.size() < out.fam2.size()) {
    bool progress = false;
    for (const auto& w : out.fam2) {
      if (placed.count(w)) continue;
      bool ready = true;
      const auto& col = image[w];
      for (const auto& u : out.fam2) {
        if (u == w || placed.count(u)) continue;
        if (!is_zero(col(static_cast<Eigen::Index>(*b.index_of(u))))) ready = false;
      }
      if (ready) {
        order.push_back(w);
        placed.insert(w);
        progress = true;
      }
    }
    if (!progress) throw ConstructionFailed("no unitriangular order for the second family");
  }
  out.fam2 = order;
  for (const auto& w : out.fam2) out.opened.push_back(open_top_arc(w));

  std::vector<Diagram> all = out.fam1;
  all.insert(all.end(), out.fam2.begin(), out.fam2.end());
  CellBasis<F> ordered(ctx, d, all);
  out.gram = gram_matrix(ordered);
  const auto m = static_cast<Eigen::Index>(all.size());
  const auto m1 = static_cast<Eigen::Index>(out.fam1.size());
  out.U = identity_matrix<S>(m);
  for (Eigen::Index c = m1; c < m; ++c) {
    const auto& col = image[all[static_cast<size_t>(c)]];
    for (Eigen::Index r = 0; r < m; ++r)
      out.U(r, c) = col(static_cast<Eigen::Index>(*b.index_of(all[static_cast<size_t>(r)])));
  }
  out.unitriangular = true;
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c <= r; ++c)
      if (out.U(r, c) != (r == c ? S(1) : S(0))) out.unitriangular = false;
  out.transformed = mat_mul(transpose(out.U), mat_mul(out.gram, out.U));

  SeamContext<F> sub(f, n - 1, k);
  std::vector<Diagram> dropped;
  for (const auto& w : out.fam1) dropped.push_back(drop_top_defect(w));
  out.block1 = dropped.empty() ? ExactMatrix<S>(0, 0) : gram_matrix(CellBasis<F>(sub, d - 1, dropped));
  out.block2 = out.opened.empty() ? ExactMatrix<S>(0, 0) : gram_matrix(CellBasis<F>(sub, d + 1, out.opened));
  const S alpha = f.qnum(d + 2) / f.qnum(d + 1);
  for (Eigen::Index r = 0; r < out.block2.rows(); ++r)
    for (Eigen::Index c = 0; c < out.block2.cols(); ++c) out.block2(r, c) *= alpha;

  ExactMatrix<S> expect = zero_matrix<S>(m, m);
  expect.topLeftCorner(m1, m1) = out.block1;
  expect.bottomRightCorner(m - m1, m - m1) = out.block2;
  out.block_diagonal = equal(out.transformed, expect);
  return out;
}

// The generic change of basis specialized to q of the given order. Covers noncritical d
// for which P_{d+1} itself does not exist at that q.
ChangeOfBasis<RootOfUnity> change_of_basis_at(const CellBasis<GenericQ>& b, const UnityOrder& order);

}  // namespace seamrep
