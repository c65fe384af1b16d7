#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "seamrep/cell_module.hpp"
#include "seamrep/seam.hpp"
#include "seamrep/structure.hpp"

using namespace seamrep;

namespace {

using Classes = std::set<std::vector<int>>;

Classes classes_of(int n, int k, const Order& order) {
  Classes out;
  for (const auto& o : orbits(n, k, order)) out.insert(o.orbit);
  return out;
}

const CellStructure& cell(const StructureReport& r, int d) {
  for (const auto& c : r.cells)
    if (c.d == d) return c;
  throw std::out_of_range("no such d");
}

}  // namespace

TEST_SUITE("structure_theory") {

TEST_CASE("Delta0") {
  CHECK(delta0(4, 2, UnityOrder::from_ell(3)) == std::vector<int>{2, 4, 6});
  CHECK(delta0(3, 2, UnityOrder::from_ell(4)) == delta(3, 2));
  CHECK(delta0(4, 2, std::nullopt) == delta(4, 2));
  CHECK(delta0(2, 3, UnityOrder::from_ell(4)) == std::vector<int>{3, 5});
}

TEST_CASE("Gram identically zero exactly outside Delta0") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n + k <= 6; ++n) {
      auto ctx = make_seam_context(GenericQ{}, n, k);
      for (int d : delta(n, k)) {
        auto G = gram_matrix(CellBasis<GenericQ>(ctx, d));
        for (int ell = k + 1; ell <= 6; ++ell) {
          auto order = UnityOrder::from_ell(ell);
          CHECK_MESSAGE(is_zero_matrix(specialize(G, order)) == !in_delta0(n, k, d, order),
                        "n=" << n << " k=" << k << " d=" << d << " ell=" << ell);
        }
      }
    }
}

TEST_CASE("orbit partitions") {
  CHECK(classes_of(6, 8, UnityOrder::from_ell(4)) == Classes{{2, 4, 10, 12}, {6, 8, 14}});
  CHECK(classes_of(9, 0, UnityOrder::from_ell(4)) == Classes{{3}, {7}, {1, 5, 9}});
  CHECK(classes_of(2, 4, UnityOrder::from_ell(5)) == Classes{{2, 6}, {4}});
  for (const auto& o : orbits(6, 8, std::nullopt)) {
    CHECK(o.orbit == std::vector<int>{o.d});
    CHECK_FALSE(o.critical);
  }
  auto obs = orbits(4, 2, UnityOrder::from_ell(3));
  CHECK(obs[0].d == 0);
  CHECK(obs[0].d_plus == 4);
  CHECK_FALSE(obs[0].d_minus);
  CHECK(obs[1].critical);
  CHECK(obs[2].d_minus == 0);
  CHECK(obs[2].d_plus == 6);
  CHECK(obs[3].d_minus == 4);
}

TEST_CASE("orbit invariants") {
  for (int ell = 3; ell <= 6; ++ell)
    for (int k = 0; k <= 8; ++k)
      for (int n = 1; n <= 10; ++n) {
        auto order = UnityOrder::from_ell(ell);
        std::set<int> seen;
        for (const auto& o : orbits(n, k, order)) {
          if (o.critical) CHECK(o.orbit.size() == 1);
          // closed under reflection through every mirror, within Delta
          for (int d : o.orbit)
            for (int c = ell - 1; c <= n + k; c += ell) {
              int r = 2 * c - d;
              if (in_delta(n, k, r) && !o.critical)
                CHECK(std::find(o.orbit.begin(), o.orbit.end(), r) != o.orbit.end());
            }
          if (o.d_plus) CHECK(std::find(o.orbit.begin(), o.orbit.end(), *o.d_plus) != o.orbit.end());
          if (o.d_minus) CHECK(*o.d_minus < o.d);
          seen.insert(o.orbit.begin(), o.orbit.end());
        }
        CHECK(seen.size() == delta(n, k).size());
      }
}

TEST_CASE("radical recursion examples") {
  auto o5 = UnityOrder::from_ell(5);
  CHECK(cell_dimension(1, 3, 4) == 1);
  CHECK(radical_dimension(4, 3, 1, o5) ==
        radical_dimension(3, 3, 0, o5) + radical_dimension(2, 3, 1, o5) + radical_dimension(1, 3, 2, o5) +
            cell_dimension(1, 3, 4));
  auto o3 = UnityOrder::from_ell(3);
  CHECK(radical_dimension(4, 2, 4, o3) == 1);
  CHECK(radical_dimension(4, 2, 2, o3) == 0);
  CHECK(radical_dimension(4, 2, 0, o3) == cell_dimension(4, 2, 0));
  for (const auto& c : dims(5, 3, std::nullopt)) CHECK(c.rad == 0);
}

TEST_CASE("recursion matches Gram rank") {
  for (int k = 2; k <= 5; ++k)
    for (int n = 1; n + k <= 7; ++n) {
      auto ctx = make_seam_context(GenericQ{}, n, k);
      for (int d : delta(n, k)) {
        auto G = gram_matrix(CellBasis<GenericQ>(ctx, d));
        for (int ell = k + 1; ell <= 6; ++ell) {
          auto order = UnityOrder::from_ell(ell);
          auto r = rank(specialize(G, order));
          auto rad = radical_dimension(n, k, d, order);
          CHECK_MESSAGE(rad == G.rows() - r, "n=" << n << " k=" << k << " d=" << d << " ell=" << ell);
          if (in_delta0(n, k, d, order)) CHECK(cell_dimension(n, k, d) - rad == r);
        }
      }
    }
}

TEST_CASE("radical of B(4,2) at N=6 via the kernel") {
  auto ctx = make_seam_context(RootOfUnity(6), 4, 2);
  CHECK(radical_basis(CellBasis<RootOfUnity>(ctx, 4)).cols() == 1);
}

TEST_CASE("structure report for B(4,2) at ell = 3") {
  auto r = structure_report(4, 2, UnityOrder::from_ell(3));
  CHECK(r.D == std::vector<std::vector<int>>{{0, 1, 0}, {1, 0, 0}, {0, 1, 1}, {0, 0, 1}});
  CHECK(r.C == std::vector<std::vector<int>>{{1, 0, 0}, {0, 2, 1}, {0, 1, 2}});
  CHECK(cell(r, 6).proj_sequence == "0 -> C4 -> P6 -> C6 -> 0");
  CHECK(cell(r, 4).proj_sequence == "0 -> C0 -> P4 -> C4 -> 0");
  CHECK(cell(r, 2).proj_sequence == "P2 = C2");
  CHECK(cell(r, 4).cell_sequence == "0 -> I6 -> C4 -> I4 -> 0");
  CHECK(cell(r, 0).cell_sequence == "C0 = I4");
  CHECK(cell(r, 2).cell_sequence == "C2 = I2");
  CHECK(cell(r, 0).dim_irre == 0);
  CHECK(cell(r, 4).dim_irre == 3);
  CHECK(cell(r, 6).dim_proj == 5);
}

TEST_CASE("generic reports: every cell module irreducible and principal") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {3, 3}, {6, 2}}) {
    auto r = structure_report(n, k, std::nullopt);
    for (const auto& c : r.cells) {
      CHECK(c.cell_sequence == "C" + std::to_string(c.d) + " = I" + std::to_string(c.d));
      CHECK(c.proj_sequence == "P" + std::to_string(c.d) + " = C" + std::to_string(c.d));
    }
    for (size_t i = 0; i < r.C.size(); ++i)
      for (size_t j = 0; j < r.C.size(); ++j) {
        CHECK(r.C[i][j] == (i == j ? 1 : 0));
        CHECK(r.D[i][j] == (i == j ? 1 : 0));
      }
  }
}

TEST_CASE("decomposition and Cartan matrix properties") {
  for (int ell = 3; ell <= 6; ++ell)
    for (int k = 2; k < ell; ++k)
      for (int n = 1; n + k <= 10; ++n) {
        auto order = UnityOrder::from_ell(ell);
        auto r = structure_report(n, k, order);
        std::map<int, size_t> row;
        for (size_t i = 0; i < r.delta.size(); ++i) row[r.delta[i]] = i;
        // square part on Delta0 rows is upper unitriangular
        for (size_t a = 0; a < r.delta0.size(); ++a) {
          const auto& dr = r.D[row[r.delta0[a]]];
          CHECK(dr[a] == 1);
          for (size_t b = 0; b < a; ++b) CHECK(dr[b] == 0);
        }
        for (const auto& dr : r.D) CHECK(std::accumulate(dr.begin(), dr.end(), 0) <= 2);
        long long regular = 0;
        for (size_t a = 0; a < r.delta0.size(); ++a) {
          const auto& c = cell(r, r.delta0[a]);
          regular += c.dim_irre * c.dim_proj;
          for (size_t b = 0; b < r.delta0.size(); ++b) CHECK(r.C[a][b] == r.C[b][a]);
          // unit diagonal exactly when nothing sits below d in its orbit
          CHECK((r.C[a][a] == 1) == (c.critical || !c.d_minus));
        }
        CHECK_MESSAGE(regular == r.dim_algebra, "n=" << n << " k=" << k << " ell=" << ell);
      }
}

TEST_CASE("unit Cartan diagonal does not single out singleton orbits") {
  auto order = UnityOrder::from_ell(4);
  auto r = structure_report(3, 2, order);
  CHECK(classes_of(3, 2, order) == Classes{{1, 5}, {3}});
  CHECK(r.C[0][0] == 1);
  CHECK(r.C[2][2] == 2);
}

TEST_CASE("cyclic generator shapes") {
  auto z = cyclic_generator(5, 4, 3);  // m = 3 <= k: nested at the junction
  for (int i = 1; i <= 3; ++i) {
    int a = z.index_of({Side::Left, 6 - i}), b = z.index_of({Side::Left, 5 + i});
    CHECK(z.partner(a) == b);
  }
  auto z2 = cyclic_generator(5, 2, 1);  // m = 3 > k: nested in the lowest 6 points
  for (int i = 1; i <= 3; ++i) {
    int a = z2.index_of({Side::Left, 1 + i}), b = z2.index_of({Side::Left, 8 - i});
    CHECK(z2.partner(a) == b);
  }
  CHECK(z2.partner(z2.index_of({Side::Left, 1})) == z2.index_of({Side::Right, 1}));
  CHECK_THROWS_AS(cyclic_generator(2, 4, 0), ConstructionFailed);
}

TEST_CASE("lift carries the generator to every basis diagram") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 1; n + k <= 7; ++n) {
      auto ctx = make_seam_context(GenericQ{}, n, k);
      for (int d : delta(n, k)) {
        CellBasis<GenericQ> b(ctx, d);
        auto z = cyclic_generator(n, k, d);
        auto zi = b.index_of(z);
        REQUIRE(zi);
        auto ez = zero_matrix<RationalFunction>(static_cast<Eigen::Index>(b.size()), 1);
        ez(static_cast<Eigen::Index>(*zi), 0) = RationalFunction(1);
        for (size_t i = 0; i < b.size(); ++i) {
          auto a = lift(n, k, b.diagram(i), z);
          auto pa = mul(ctx.field(), ctx.projector(), a);
          auto img = act(b, pa, ExactVector<RationalFunction>(ez.col(0)));
          for (size_t j = 0; j < b.size(); ++j)
            CHECK_MESSAGE(img(static_cast<Eigen::Index>(j)) == RationalFunction(i == j ? 1 : 0),
                          "n=" << n << " k=" << k << " d=" << d << " v=" << b.diagram(i).to_string());
        }
      }
    }
}

TEST_CASE("Bratteli data") {
  auto b = bratteli(7, 8, UnityOrder::from_ell(4));
  const auto& row6 = b.rows[5];
  CHECK(row6.n == 6);
  CHECK(row6.nodes == std::vector<int>{2, 4, 6, 8, 10, 12, 14});
  CHECK(row6.excluded == std::vector<int>{0});
  CHECK(b.critical_columns == std::vector<int>{3, 7, 11, 15});
  CHECK(row6.classes == std::vector<std::vector<int>>{{2, 4, 10, 12}, {6, 8, 14}});
  auto dot = bratteli_dot(b);
  CHECK(dot.find("\"6_14\"") != std::string::npos);
  CHECK(dot.find("\"7_7\" [label=\"7\", pos=\"7,-7!\", style=dashed]") != std::string::npos);

  auto tl = bratteli(9, 0, UnityOrder::from_ell(4));
  CHECK(tl.rows[8].nodes == std::vector<int>{1, 3, 5, 7, 9});
  CHECK(tl.rows[8].critical == std::vector<int>{3, 7});
  CHECK(tl.rows[8].excluded.empty());
  CHECK(tl.rows[8].classes == std::vector<std::vector<int>>{{1, 5, 9}, {3}, {7}});

  auto g = bratteli(5, 2, std::nullopt);
  CHECK(g.critical_columns.empty());
  for (const auto& r : g.rows) CHECK(r.critical.empty());
  CHECK(bratteli_text(g).find("n=5 nodes: 1 3 5 7") != std::string::npos);
}

}  // TEST_SUITE
