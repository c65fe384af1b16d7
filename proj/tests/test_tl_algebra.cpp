#include <doctest.h>

#include <queue>
#include <set>

#include "helpers.hpp"
#include "seamrep/projector.hpp"

using namespace seamrep;
using testing_helpers::Q;

namespace {

// Number of loops in the right closure of an (n,n) diagram.
int closure_loops(const Diagram& d) {
  const int n = d.left();
  std::vector<bool> seen(static_cast<size_t>(2 * n), false);
  int loops = 0;
  for (int s = 0; s < 2 * n; ++s) {
    if (seen[static_cast<size_t>(s)]) continue;
    ++loops;
    int x = s;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      int y = d.partner(x);
      seen[static_cast<size_t>(y)] = true;
      x = y < n ? y + n : y - n;
    }
  }
  return loops;
}

template <class F>
typename F::Scalar markov_trace(const F& f, const Element<typename F::Scalar>& x) {
  typename F::Scalar t = f.constant(0);
  for (const auto& [d, c] : x.terms()) {
    typename F::Scalar b = f.constant(1);
    for (int i = 0; i < closure_loops(d); ++i) b *= beta(f);
    t += c * b;
  }
  return t;
}

}  // namespace

TEST_SUITE("tl_algebra") {

TEST_CASE("P_2 expansion") {
  GenericQ g;
  auto P = wenzl_jones(g, 3, 2).expansion;
  Element<RationalFunction> expect(identity(3));
  expect -= Element<RationalFunction>(generator(3, 2), RationalFunction(1) / Q(2));
  CHECK(P == expect);
  CHECK(wenzl_jones(g, 4, 1).expansion == Element<RationalFunction>(identity(4)));
  CHECK(wenzl_jones(g, 3, 3).expansion.size() == 5);
}

TEST_CASE("projector identities at generic q") {
  GenericQ g;
  for (int N = 1; N <= 6; ++N)
    for (int k = 0; k <= N; ++k) {
      auto rep = verify_projector(g, wenzl_jones(g, N, k));
      CHECK_MESSAGE(rep.ok(), "N=" << N << " k=" << k);
      CHECK(wj_decomposition_check(g, N, k));
    }
}

TEST_CASE("markov trace of P_k is [k+1]") {
  GenericQ g;
  for (int k = 1; k <= 5; ++k) CHECK(markov_trace(g, wenzl_jones(g, k, k).expansion) == Q(k + 1));
  RootOfUnity r(10);  // ell = 5
  for (int k = 1; k <= 4; ++k) CHECK(markov_trace(r, wenzl_jones(r, k, k).expansion) == r.qnum(k + 1));
}

TEST_CASE("projectors at roots of unity") {
  RootOfUnity r6(6);
  CHECK(verify_projector(r6, wenzl_jones(r6, 4, 2)).ok());
  CHECK_THROWS_AS(wenzl_jones(r6, 4, 3), QNumberVanishes);
  RootOfUnity r8(8);
  for (int N = 3; N <= 5; ++N) {
    const auto& Pr = wenzl_jones(r8, N, 3).expansion;
    const auto& Pg = wenzl_jones(GenericQ{}, N, 3).expansion;
    CHECK(Pr.size() == Pg.size());
    for (const auto& [d, c] : Pg.terms()) CHECK(Pr.coeff(d) == specialize(c, r8.unity));
    CHECK(verify_projector(r8, wenzl_jones(r8, N, 3)).ok());
    CHECK(wj_decomposition_check(r8, N, 3));
  }
}

TEST_CASE("generators span TL_n") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Diagram> seen{identity(n)};
    std::queue<Diagram> todo;
    todo.push(identity(n));
    while (!todo.empty()) {
      Diagram d = todo.front();
      todo.pop();
      for (int i = 1; i < n; ++i) {
        Diagram e = compose(d, generator(n, i)).diagram;
        if (seen.insert(e).second) todo.push(e);
      }
    }
    CHECK(static_cast<long long>(seen.size()) == catalan(n));
  }
}

TEST_CASE("element multiplication is associative and bilinear") {
  GenericQ g;
  std::mt19937 rng(9);
  auto all = enumerate_all(4);
  auto rnd = [&] {
    Element<RationalFunction> x(4, 4);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 4; ++t) x.add(all[pick(rng)], RationalFunction(c(rng)) * g.q_power(c(rng)));
    return x;
  };
  for (int it = 0; it < 30; ++it) {
    auto a = rnd(), b = rnd(), c = rnd();
    CHECK(mul(g, mul(g, a, b), c) == mul(g, a, mul(g, b, c)));
    CHECK(mul(g, a + b, c) == mul(g, a, c) + mul(g, b, c));
    CHECK(reflect(mul(g, a, b)) == mul(g, reflect(b), reflect(a)));
  }
}

TEST_CASE("shape errors") {
  GenericQ g;
  Element<RationalFunction> a(identity(3)), b(identity(4));
  CHECK_THROWS_AS(mul(g, a, b), ShapeMismatch);
  CHECK_THROWS_AS(a += b, ShapeMismatch);
  CHECK_THROWS_AS(wenzl_jones(g, 2, 3), IndexOutOfRange);
}

}  // TEST_SUITE
