#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "seamrep/projector.hpp"

namespace seamrep {

// n >= 1, k >= 2, and ell > k at a root of unity.
void validate_rest_para(int n, int k, const std::optional<UnityOrder>& order);

// { d : 0 <= d <= n+k, d = n+k mod 2, n+d >= k }, increasing.
std::vector<int> delta(int n, int k);
bool in_delta(int n, int k, int d);
// binom(n,(n+k-d)/2) - binom(n,(n-k-d-2)/2); 0 when d is out of range or of the wrong parity.
long long cell_dimension(int n, int k, int d);
long long seam_dimension(int n, int k);

// Left points n..n+k-1 are boundary points.
bool has_boundary_arc(const Diagram& w, int n);
// Monic (n+k,d)-diagrams with no boundary-boundary arc, sorted.
std::vector<Diagram> seam_basis_diagrams(int n, int k, int d);

struct CellDatum {
  int n = 0;
  int k = 0;
  std::vector<int> delta;
  std::map<int, std::vector<Diagram>> bases;
};
CellDatum cell_datum(int n, int k);

// B(n,k) inside TL(n+k). Construction does not validate; use make_seam_context.
template <class F>
class SeamContext {
 public:
  using Scalar = typename F::Scalar;
  SeamContext(F f, int n, int k) : f_(std::move(f)), n_(n), k_(k), pc_(&wenzl_jones(f_, n + k, k)) {}

  const F& field() const { return f_; }
  int n() const { return n_; }
  int k() const { return k_; }
  int size() const { return n_ + k_; }
  const Element<Scalar>& projector() const { return pc_->expansion; }
  const ProjectorCache<F>& projector_cache() const { return *pc_; }

 private:
  F f_;
  int n_;
  int k_;
  const ProjectorCache<F>* pc_;
};

template <class F>
SeamContext<F> make_seam_context(F f, int n, int k) {
  validate_rest_para(n, k, f.order());
  return SeamContext<F>(std::move(f), n, k);
}

// id = P_k, e_j = P_k E_j P_k (j < n), e_n = [k] P_k E_n P_k.
template <class F>
struct SeamGenerators {
  Element<typename F::Scalar> id;
  std::vector<Element<typename F::Scalar>> e;  // e[0] unused, e[1..n]
};

template <class F>
SeamGenerators<F> seam_generators(const SeamContext<F>& ctx) {
  using S = typename F::Scalar;
  const auto& f = ctx.field();
  const auto& P = ctx.projector();
  const int N = ctx.size();
  SeamGenerators<F> g;
  g.id = P;
  g.e.resize(static_cast<size_t>(ctx.n()) + 1);
  for (int j = 1; j <= ctx.n() && j < N; ++j) {
    Element<S> E(generator(N, j));
    if (j < ctx.n()) {
      g.e[static_cast<size_t>(j)] = mul(f, E, P);  // P commutes with E_j here
    } else {
      g.e[static_cast<size_t>(j)] = mul(f, mul(f, P, E), P) * f.qnum(ctx.k());
    }
  }
  return g;
}

// Sign convention for the sum in the y_t recursion: the literal "(-1)" or (-1)^{i+1}.
enum class YSign { Literal, Alternating };

// prod_{j=a}^{b} e_{n-j}, left to right; identity when a > b.
template <class F>
Element<typename F::Scalar> seam_chain(const SeamContext<F>& ctx, const SeamGenerators<F>& g, int a, int b) {
  Element<typename F::Scalar> r = g.id;
  for (int j = a; j <= b; ++j) r = mul(ctx.field(), r, g.e[static_cast<size_t>(ctx.n() - j)]);
  return r;
}

// y_0 .. y_k.
template <class F>
std::vector<Element<typename F::Scalar>> seam_y(const SeamContext<F>& ctx, const SeamGenerators<F>& g, YSign sign) {
  using S = typename F::Scalar;
  const auto& f = ctx.field();
  const int k = ctx.k();
  std::vector<Element<S>> y{g.id * f.qnum(k), g.e[static_cast<size_t>(ctx.n())]};
  for (int t = 1; t + 1 <= k; ++t) {
    const auto& yt = y[static_cast<size_t>(t)];
    Element<S> rhs = mul(f, seam_chain(ctx, g, 0, t), yt);
    for (int i = 0; i <= t - 1; ++i) {
      S c = f.qnum(k - i);
      if (sign == YSign::Literal || i % 2 == 0) c = -c;
      rhs += mul(f, seam_chain(ctx, g, i + 2, t), yt) * c;
    }
    S scale = f.constant(1) / f.qnum(k - t);
    if (t % 2 == 1) scale = -scale;
    y.push_back(rhs * scale);
  }
  return y;
}

// (prod_{j=0}^k e_{n-j}) y_k = sum_i (-1)^i [k-i] (prod_{j=i+2}^k e_{n-j}) y_k
template <class F>
bool seam_y_relation_holds(const SeamContext<F>& ctx, const SeamGenerators<F>& g, YSign sign) {
  using S = typename F::Scalar;
  const auto& f = ctx.field();
  const int k = ctx.k();
  auto y = seam_y(ctx, g, sign);
  const auto& yk = y[static_cast<size_t>(k)];
  Element<S> lhs = mul(f, seam_chain(ctx, g, 0, k), yk);
  Element<S> rhs(ctx.size(), ctx.size());
  for (int i = 0; i <= k - 1; ++i) {
    S c = f.qnum(k - i);
    if (i % 2 == 1) c = -c;
    rhs += mul(f, seam_chain(ctx, g, i + 2, k), yk) * c;
  }
  return lhs == rhs;
}

template <class F>
CheckReport check_relations(const SeamContext<F>& ctx) {
  using S = typename F::Scalar;
  const auto& f = ctx.field();
  const int n = ctx.n(), k = ctx.k();
  auto g = seam_generators(ctx);
  auto e = [&](int i) -> const Element<S>& { return g.e[static_cast<size_t>(i)]; };
  auto m = [&](const Element<S>& a, const Element<S>& b) { return mul(f, a, b); };
  auto name = [](std::string s, int i, int j = -1) {
    s += " i=" + std::to_string(i);
    if (j >= 0) s += " j=" + std::to_string(j);
    return s;
  };
  CheckReport rep;
  rep.add("id id = id", m(g.id, g.id) == g.id);
  for (int i = 1; i <= n; ++i) {
    rep.add(name("id e = e id = e", i), m(g.id, e(i)) == e(i) && m(e(i), g.id) == e(i));
    if (i < n) rep.add(name("e_i^2 = beta e_i", i), m(e(i), e(i)) == e(i) * beta(f));
    for (int j = i + 2; j <= n; ++j) rep.add(name("e_i e_j = e_j e_i", i, j), m(e(i), e(j)) == m(e(j), e(i)));
    if (i < n - 1) rep.add(name("e_i e_{i+1} e_i = e_i", i), m(m(e(i), e(i + 1)), e(i)) == e(i));
    if (i >= 2 && i <= n - 1) rep.add(name("e_i e_{i-1} e_i = e_i", i), m(m(e(i), e(i - 1)), e(i)) == e(i));
  }
  rep.add("e_n^2 = [k+1] e_n", m(e(n), e(n)) == e(n) * f.qnum(k + 1));
  if (n >= 2) rep.add("e_{n-1} e_n e_{n-1} = [k] e_{n-1}", m(m(e(n - 1), e(n)), e(n - 1)) == e(n - 1) * f.qnum(k));
  if (n > k) rep.add("y_k relation", seam_y_relation_holds(ctx, g, YSign::Alternating));
  return rep;
}

// P_k C(s,t) P_k = P_k s t* P_k.
template <class F>
Element<typename F::Scalar> seam_cell_element(const SeamContext<F>& ctx, const Diagram& s, const Diagram& t) {
  const auto& f = ctx.field();
  Diagram st = compose(s, reflect(t)).diagram;
  return mul(f, mul(f, ctx.projector(), st), ctx.projector());
}

struct SpanCheck {
  long long expected = 0;  // closed form
  long long count = 0;     // spanning elements P C(s,t) P
  long long rank = 0;      // rank of the spanning set
  bool boundary_arcs_vanish = true;
  bool ok() const { return expected == count && count == rank && boundary_arcs_vanish; }
};

// Generic-q spanning-set check. The rank is taken after specializing q to an
// integer modulo a large prime, which can only lower it.
SpanCheck span_check(int n, int k);

}  // namespace seamrep
