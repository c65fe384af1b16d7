#include <doctest.h>

#include "helpers.hpp"
#include "seamrep/cell_module.hpp"
#include "seamrep/pretty.hpp"

using namespace seamrep;
using testing_helpers::monic_from;
using testing_helpers::Q;

namespace {

using RF = RationalFunction;
using Mat = ExactMatrix<RF>;

Mat mat(std::initializer_list<std::initializer_list<RF>> rows) {
  Mat m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& r : rows) {
    Eigen::Index j = 0;
    for (const auto& x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Fixture bases, in the order the matrices are printed.
std::vector<Diagram> basis_3_2_d3() {
  return {monic_from(5, {{1, 2}}, {3, 4, 5}), monic_from(5, {{2, 3}}, {1, 4, 5}), monic_from(5, {{3, 4}}, {1, 2, 5})};
}
std::vector<Diagram> basis_3_2_d1() {
  return {monic_from(5, {{1, 2}, {3, 4}}, {5}), monic_from(5, {{1, 4}, {2, 3}}, {5}), monic_from(5, {{2, 5}, {3, 4}}, {1})};
}
std::vector<Diagram> basis_4_2_d2() {
  return {monic_from(6, {{3, 6}, {4, 5}}, {1, 2}), monic_from(6, {{2, 3}, {4, 5}}, {1, 6}),
          monic_from(6, {{2, 5}, {3, 4}}, {1, 6}), monic_from(6, {{1, 2}, {4, 5}}, {3, 6}),
          monic_from(6, {{1, 2}, {3, 4}}, {5, 6}), monic_from(6, {{1, 4}, {2, 3}}, {5, 6})};
}
std::vector<Diagram> basis_4_2_d0() {
  return {monic_from(6, {{1, 2}, {3, 6}, {4, 5}}, {}), monic_from(6, {{1, 6}, {2, 3}, {4, 5}}, {}),
          monic_from(6, {{1, 6}, {2, 5}, {3, 4}}, {})};
}

ExactVector<RF> unit(size_t n, size_t i) {
  ExactVector<RF> v(static_cast<Eigen::Index>(n));
  for (size_t j = 0; j < n; ++j) v(static_cast<Eigen::Index>(j)) = RF(j == i ? 1 : 0);
  return v;
}

}  // namespace

TEST_SUITE("cell_modules") {

TEST_CASE("basis sizes and dimension additivity") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n + k <= 9; ++n)
      for (int d : delta(n, k)) {
        auto ctx = SeamContext<GenericQ>(GenericQ{}, n, k);
        CHECK(static_cast<long long>(CellBasis<GenericQ>(ctx, d).size()) == cell_dimension(n, k, d));
        if (n >= 2) CHECK(cell_dimension(n, k, d) == cell_dimension(n - 1, k, d - 1) + cell_dimension(n - 1, k, d + 1));
      }
  auto ctx = make_seam_context(GenericQ{}, 2, 4);
  CHECK_THROWS_AS(CellBasis<GenericQ>(ctx, 0), NotInDelta);
}

TEST_CASE("Gram matrices of B(3,2)") {
  auto ctx = make_seam_context(GenericQ{}, 3, 2);
  CellBasis<GenericQ> b3(ctx, 3, basis_3_2_d3()), b1(ctx, 1, basis_3_2_d1()), b5(ctx, 5);
  RF r = Q(3) / Q(2);
  CHECK(equal(gram_matrix(b3), mat({{Q(2), 1, 0}, {1, Q(2), 1}, {0, 1, r}})));
  CHECK(equal(gram_matrix(b1), mat({{Q(3), r, r}, {r, Q(3), 0}, {r, 0, Q(3)}})));
  CHECK(equal(gram_matrix(b5), mat({{1}})));
  CHECK(gram_entry(b1, 0, 2) == r);
  CHECK(gram_entry(b1, 1, 2).is_zero());
  CHECK(gram_det(b5) == RF(1));
}

TEST_CASE("module action examples on B(3,2)") {
  auto ctx = make_seam_context(GenericQ{}, 3, 2);
  const auto& f = ctx.field();
  const auto& P = ctx.projector();
  auto gens = seam_generators(ctx);
  CellBasis<GenericQ> b3(ctx, 3, basis_3_2_d3()), b1(ctx, 1, basis_3_2_d1());
  auto v = act(b3, gens.e[1], unit(3, 2));
  for (Eigen::Index i = 0; i < v.size(); ++i) CHECK(v(i).is_zero());

  Element<RF> e13 = mul(f, Element<RF>(generator(5, 1)), Element<RF>(generator(5, 3)));
  auto x = act(b1, mul(f, mul(f, P, e13), P), unit(3, 2));
  CHECK(x(0) == Q(3) / Q(2));
  CHECK(x(1).is_zero());
  CHECK(x(2).is_zero());
  auto y = act(b1, mul(f, mul(f, P, Element<RF>(generator(5, 2))), P), unit(3, 2));
  for (Eigen::Index i = 0; i < y.size(); ++i) CHECK(y(i).is_zero());
}

TEST_CASE("Gram matrix of B(4,2), d = 2, and its recursive form") {
  auto ctx = make_seam_context(GenericQ{}, 4, 2);
  auto bs = basis_4_2_d2();
  CellBasis<GenericQ> b(ctx, 2, bs);
  RF r = Q(3) / Q(2), q2 = Q(2), q3 = Q(3), q22 = Q(2) * Q(2);
  Mat g = mat({{q3, r, 0, 0, 0, 1},
               {r, q3, r, r, 1, q2},
               {0, r, q3, 1, q2, 1},
               {0, r, 1, q3, q2, 1},
               {0, 1, q2, q2, q22, q2},
               {1, q2, 1, 1, q2, q22}});
  CHECK(equal(gram_matrix(b), g));
  RF det = gram_det(b);
  CHECK(det == Q(5) * Q(4) * Q(4) * Q(4) * Q(4) / (Q(2) * Q(2) * Q(2) * Q(2)));
  CHECK(pretty(det) == "[5][4]^4/[2]^4");
  CHECK(det == det_formula(4, 2, 2));

  CellBasis<GenericQ> canon(ctx, 2);
  auto cb = change_of_basis(canon);
  CHECK(cb.fam1.size() == 3);
  CHECK(cb.fam2.size() == 3);
  CHECK(cb.unitriangular);
  CHECK(cb.block_diagonal);
  // the printed block form, in the order d, e, f for the second family
  RF a = Q(4) / Q(3);
  Mat second = mat({{r * a, a, 0}, {a, q2 * a, a}, {0, a, q2 * a}});
  std::vector<Diagram> printed_fam2{bs[3], bs[4], bs[5]};
  std::vector<Diagram> printed_fam1{bs[0], bs[1], bs[2]};
  std::vector<Eigen::Index> perm2, perm1;
  for (const auto& w : printed_fam2)
    perm2.push_back(std::find(cb.fam2.begin(), cb.fam2.end(), w) - cb.fam2.begin());
  for (const auto& w : printed_fam1)
    perm1.push_back(std::find(cb.fam1.begin(), cb.fam1.end(), w) - cb.fam1.begin());
  Mat first = mat({{q3, r, 0}, {r, q3, r}, {0, r, q3}});
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      CHECK(cb.transformed(3 + perm2[static_cast<size_t>(i)], 3 + perm2[static_cast<size_t>(j)]) == second(i, j));
      CHECK(cb.transformed(perm1[static_cast<size_t>(i)], perm1[static_cast<size_t>(j)]) == first(i, j));
    }
  // opening the arcs of d, e, f gives the B(3,2) basis for d = 3 in reverse order
  auto b33 = basis_3_2_d3();
  CHECK(open_top_arc(bs[3]) == b33[2]);
  CHECK(open_top_arc(bs[4]) == b33[1]);
  CHECK(open_top_arc(bs[5]) == b33[0]);
}

TEST_CASE("change of basis at the top and at d = 0") {
  auto ctx = make_seam_context(GenericQ{}, 3, 2);
  auto top = change_of_basis(CellBasis<GenericQ>(ctx, 5));
  CHECK(top.U.rows() == 1);
  CHECK(top.U(0, 0) == RF(1));
  CHECK(top.block_diagonal);
  auto ctx2 = make_seam_context(GenericQ{}, 4, 2);
  auto zero = change_of_basis(CellBasis<GenericQ>(ctx2, 0));
  CHECK(zero.fam1.empty());
  CHECK(zero.unitriangular);
  CHECK(zero.block_diagonal);
}

TEST_CASE("change of basis refuses critical d") {
  auto ctx = make_seam_context(RootOfUnity(6), 4, 2);
  CHECK_THROWS_AS(change_of_basis(CellBasis<RootOfUnity>(ctx, 2)), CriticalD);
}

TEST_CASE("change of basis carried to a root of unity") {
  // ell = 3, d = 3: noncritical, but P_4 does not exist at q
  auto ctx = make_seam_context(GenericQ{}, 5, 2);
  auto o3 = UnityOrder::from_ell(3);
  CHECK_THROWS_AS(change_of_basis(CellBasis<RootOfUnity>(make_seam_context(RootOfUnity(o3), 5, 2), 3)),
                  QNumberVanishes);
  auto cb = change_of_basis_at(CellBasis<GenericQ>(ctx, 3), o3);
  CHECK(cb.unitriangular);
  CHECK(cb.block_diagonal);
  CHECK(equal(cb.gram, specialize(change_of_basis(CellBasis<GenericQ>(ctx, 3)).gram, o3)));
  CHECK_THROWS_AS(change_of_basis_at(CellBasis<GenericQ>(ctx, 5), o3), CriticalD);
}

TEST_CASE("fast pairing agrees with the expansion wherever it applies") {
  int applied = 0;
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n + k <= 8; ++n) {
      auto ctx = make_seam_context(GenericQ{}, n, k);
      for (int d : delta(n, k)) {
        CellBasis<GenericQ> b(ctx, d);
        for (size_t i = 0; i < b.size(); ++i)
          for (size_t j = 0; j < b.size(); ++j) {
            auto fast = gram_entry_fast(b, i, j);
            if (!fast) continue;
            ++applied;
            CHECK(*fast == gram_entry(b, i, j));
          }
      }
    }
  CHECK(applied > 500);
}

TEST_CASE("fast pairing at ell = k+1, threaded") {
  // the closed form must not divide [k+1] by itself there
  for (int k = 2; k <= 3; ++k)
    for (int n = 1; n + k <= 7; ++n) {
      auto ctx = make_seam_context(RootOfUnity(UnityOrder::from_ell(k + 1)), n, k);
      for (int d : delta(n, k)) {
        CellBasis<RootOfUnity> b(ctx, d);
        CHECK(equal(gram_matrix(b, 3, GramMethod::FastWhereApplicable), gram_matrix(b)));
      }
    }
}

TEST_CASE("form is symmetric and invariant") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {5, 2}, {2, 3}, {4, 3}, {3, 4}}) {
    auto ctx = make_seam_context(GenericQ{}, n, k);
    auto gens = seam_generators(ctx);
    for (int d : delta(n, k)) {
      CellBasis<GenericQ> b(ctx, d);
      auto G = gram_matrix(b);
      CHECK(equal(G, transpose(G)));
      for (int i = 1; i <= n; ++i) {
        // <a* x, y> = <x, a y>; the generators are self-adjoint
        const auto& a = gens.e[static_cast<size_t>(i)];
        CHECK(reflect(a) == a);
        auto A = action_matrix(b, a);
        CHECK(equal(mat_mul(transpose(A), G), mat_mul(G, A)));
      }
    }
  }
}

TEST_CASE("product rule C(s,t) x = <v_t, x> v_s") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    auto ctx = make_seam_context(GenericQ{}, n, k);
    for (int d : delta(n, k)) {
      CellBasis<GenericQ> b(ctx, d);
      auto G = gram_matrix(b);
      for (size_t s = 0; s < b.size(); ++s)
        for (size_t t = 0; t < b.size(); ++t) {
          auto C = seam_cell_element(ctx, b.diagram(s), b.diagram(t));
          auto A = action_matrix(b, C);
          for (size_t x = 0; x < b.size(); ++x)
            for (size_t r = 0; r < b.size(); ++r)
              CHECK(A(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(x)) ==
                    (r == s ? G(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(x)) : RF(0)));
        }
    }
  }
}

TEST_CASE("determinant formula, small cases") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}}) {
    auto ctx = make_seam_context(GenericQ{}, n, k);
    for (int d : delta(n, k)) CHECK_MESSAGE(gram_det(CellBasis<GenericQ>(ctx, d)) == det_formula(n, k, d), n << k << d);
  }
}

TEST_CASE("roots of unity: specialized Gram equals the Gram computed in Q(zeta)") {
  for (int N : {6, 8, 10}) {
    auto rc = make_seam_context(RootOfUnity(N), 4, 2);
    auto gc = make_seam_context(GenericQ{}, 4, 2);
    for (int d : delta(4, 2)) {
      auto direct = gram_matrix(CellBasis<RootOfUnity>(rc, d));
      auto spec = specialize(gram_matrix(CellBasis<GenericQ>(gc, d)), UnityOrder(N));
      CHECK(equal(direct, spec));
    }
  }
}

TEST_CASE("renormalized Gram at q = exp(2 pi i / 3)") {
  auto ctx = make_seam_context(GenericQ{}, 4, 2);
  CellBasis<GenericQ> b0(ctx, 0, basis_4_2_d0());
  auto m = renormalized_gram(b0, Q(3), UnityOrder(3));
  ExactMatrix<Cyclotomic> expect(3, 3);
  int vals[3][3] = {{-1, 1, 0}, {1, -1, 1}, {0, 1, -1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) expect(i, j) = Cyclotomic(vals[i][j]);
  CHECK(equal(m, expect));
  CHECK(determinant(m) == Cyclotomic(1));
  auto plain = renormalized_gram(b0, RF(1), UnityOrder(3));
  CHECK(is_zero_matrix(plain));
  CHECK(equal(specialize(gram_matrix(b0), UnityOrder(3)), plain));
}

TEST_CASE("radical and rank at roots of unity") {
  // B(4,2) at N = 6: Rad^4 has dimension 1
  auto ctx = make_seam_context(RootOfUnity(6), 4, 2);
  CellBasis<RootOfUnity> b4(ctx, 4);
  auto K = radical_basis(b4);
  CHECK(K.cols() == 1);
  CHECK(gram_rank(b4) == 3);
  // critical d = 2: nondegenerate
  CHECK(radical_basis(CellBasis<RootOfUnity>(ctx, 2)).cols() == 0);
  // d = 0 < k with ell = k + 1: the form vanishes identically
  CellBasis<RootOfUnity> b0(ctx, 0);
  CHECK(is_zero_matrix(gram_matrix(b0)));
  CHECK(radical_basis(b0).cols() == static_cast<Eigen::Index>(b0.size()));
}

TEST_CASE("exact linear algebra") {
  Mat m = mat({{1, 2, 3}, {2, 4, 6}, {Q(2), 0, 1}});
  CHECK(rank(m) == 2);
  auto K = kernel(m);
  CHECK(K.cols() == 1);
  CHECK(determinant(m).is_zero());
  Mat inv = mat({{Q(2), 1}, {1, Q(2)}});
  CHECK(determinant(inv) == Q(2) * Q(2) - RF(1));
  CHECK(determinant(inv) == det_field(inv));
  CHECK(determinant(inv) == Q(3));
}

TEST_CASE("parallel Gram evaluation matches the serial one") {
  auto ctx = make_seam_context(GenericQ{}, 5, 2);
  CellBasis<GenericQ> b(ctx, 1);
  CHECK(equal(gram_matrix(b, 1), gram_matrix(b, 3)));
  CHECK(equal(gram_matrix(b, 1), gram_matrix(b, 2, GramMethod::FastWhereApplicable)));
}

}  // TEST_SUITE
