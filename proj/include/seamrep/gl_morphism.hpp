#pragma once

#include <utility>
#include <vector>

#include "seamrep/cell_module.hpp"
#include "seamrep/diagram.hpp"
#include "seamrep/exact_matrix.hpp"
#include "seamrep/laurent.hpp"

namespace seamrep {

struct ForestLink {
  Point a, b;
  int lo = 0, hi = 0;  // interval on the boundary unrolled from the bottom corner
  int h = 0;           // links x with x <= this one, itself included
};

// Links of a diagram under "x <= y iff x lies in the convex hull of y". The
// boundary is read left bottom to top, then right top to bottom; a link is the
// interval between its ends and the order is interval containment.
struct LinkForest {
  std::vector<ForestLink> links;
  bool leq(size_t x, size_t y) const { return links[y].lo <= links[x].lo && links[x].hi <= links[y].hi; }
  size_t size() const { return links.size(); }
};

LinkForest link_forest(const Diagram& w);
// [|F|]! / prod [h_y]; throws NotDivisible if the quotient is not a Laurent polynomial.
LaurentPoly stanley_H(const LinkForest& f);

// t < s < t + 2 ell and s + t = -2 mod 2 ell.
bool is_mirror_pair(int t, int s, const UnityOrder& order);
// All (t,s) with both ends in Delta_{n,k}.
std::vector<std::pair<int, int>> mirror_pairs(int n, int k, const UnityOrder& order);

using SeamCtx = SeamContext<RootOfUnity>;

struct GLMorphism {
  int s = 0, t = 0;
  std::vector<Diagram> ws;      // monic (s,t)-diagrams
  std::vector<LaurentPoly> H;   // Stanley polynomial of each
  std::vector<int> signs;       // solved; +1 on diagrams that contribute nothing
  std::vector<bool> contributes;
  ExactMatrix<Cyclotomic> theta;  // columns: basis of Cell^s, rows: basis of Cell^t
};

// Matrix of v -> H(w) P_k v w for one w, before any sign.
ExactMatrix<Cyclotomic> theta_component(const CellBasis<RootOfUnity>& bs, const CellBasis<RootOfUnity>& bt,
                                        const Diagram& w, const Cyclotomic& h);

// Signs fixed by requiring the sum to intertwine every generator; unique up to a
// global flip, normalized to + on the first contributing w.
GLMorphism theta_restricted(const SeamCtx& ctx, int s, int t);

struct MorphismCheck {
  bool in_radical = false;  // G_t theta = 0
  bool rank_matches = false;
  bool intertwines = false;
  bool nonzero = false;
  long long rank = 0;
  long long dim_rad = 0;
  bool ok() const { return in_radical && rank_matches && intertwines && nonzero; }
};

MorphismCheck verify_image_is_radical(const SeamCtx& ctx, const GLMorphism& m);

}  // namespace seamrep
