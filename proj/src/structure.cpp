#include "seamrep/structure.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <tuple>

#include "seamrep/errors.hpp"
#include "seamrep/seam.hpp"

namespace seamrep {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Mirrors c with ell | c+1 on either side of a non-critical d.
std::pair<int, int> mirrors(int d, int ell) {
  int below = d - mod(d + 1, ell);
  return {below, below + ell};
}

std::string join(const std::vector<int>& xs, const char* sep) {
  std::ostringstream os;
  for (size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

}  // namespace

bool is_critical(int d, const Order& order) { return order && mod(d + 1, order->ell) == 0; }

std::vector<int> delta0(int n, int k, const Order& order) {
  auto ds = delta(n, k);
  if (order && mod(k + 1, order->ell) == 0) std::erase_if(ds, [k](int d) { return d < k; });
  return ds;
}

bool in_delta0(int n, int k, int d, const Order& order) {
  if (!in_delta(n, k, d)) return false;
  return !(order && mod(k + 1, order->ell) == 0 && d < k);
}

std::vector<OrbitInfo> orbits(int n, int k, const Order& order) {
  auto ds = delta(n, k);
  std::vector<OrbitInfo> out;
  for (int d : ds) {
    OrbitInfo o;
    o.d = d;
    o.critical = is_critical(d, order);
    if (!order || o.critical) {
      o.orbit = {d};
    } else {
      const int ell = order->ell;
      for (int e : ds)
        if (mod(e - d, 2 * ell) == 0 || mod(e + 2 + d, 2 * ell) == 0) o.orbit.push_back(e);
      auto [lo, hi] = mirrors(d, ell);
      if (in_delta(n, k, 2 * lo - d)) o.d_minus = 2 * lo - d;
      if (in_delta(n, k, 2 * hi - d)) o.d_plus = 2 * hi - d;
    }
    out.push_back(std::move(o));
  }
  return out;
}

long long radical_dimension(int n, int k, int d, const Order& order) {
  static std::map<std::tuple<int, int, int, int>, long long> memo;
  static std::mutex memo_mutex;
  if (n < 0 || !in_delta(n, k, d)) return 0;
  if (!in_delta0(n, k, d, order)) return cell_dimension(n, k, d);
  if (!order || n == 0 || d == n + k || is_critical(d, order)) return 0;
  auto key = std::make_tuple(n, k, d, order->N);
  {
    std::lock_guard lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  long long r = radical_dimension(n - 1, k, d - 1, order);
  if (is_critical(d + 1, order))
    r += cell_dimension(n - 1, k, d + 1);
  else
    r += radical_dimension(n - 1, k, d + 1, order);
  std::lock_guard lock(memo_mutex);
  memo.emplace(key, r);
  return r;
}

std::vector<CellDims> dims(int n, int k, const Order& order) {
  std::vector<CellDims> out;
  for (int d : delta(n, k)) {
    CellDims c;
    c.d = d;
    c.cell = cell_dimension(n, k, d);
    c.rad = radical_dimension(n, k, d, order);
    c.irre = in_delta0(n, k, d, order) ? c.cell - c.rad : 0;
    out.push_back(c);
  }
  return out;
}

StructureReport structure_report(int n, int k, const Order& order) {
  validate_rest_para(n, k, order);
  StructureReport rep;
  rep.n = n;
  rep.k = k;
  rep.order = order;
  rep.delta = delta(n, k);
  rep.delta0 = delta0(n, k, order);
  rep.dim_algebra = seam_dimension(n, k);

  auto obs = orbits(n, k, order);
  std::set<std::vector<int>> classes;
  for (const auto& o : obs) classes.insert(o.orbit);
  rep.orbit_classes.assign(classes.begin(), classes.end());

  auto ds = dims(n, k, order);
  std::map<int, long long> irre;
  for (const auto& c : ds) irre[c.d] = c.irre;

  std::map<int, size_t> col;
  for (size_t j = 0; j < rep.delta0.size(); ++j) col[rep.delta0[j]] = j;
  rep.D.assign(rep.delta.size(), std::vector<int>(rep.delta0.size(), 0));

  for (size_t i = 0; i < rep.delta.size(); ++i) {
    const int d = rep.delta[i];
    CellStructure cs;
    cs.d = d;
    cs.critical = obs[i].critical;
    cs.in_delta0 = col.count(d) > 0;
    cs.dim_cell = ds[i].cell;
    cs.dim_rad = ds[i].rad;
    cs.dim_irre = ds[i].irre;
    cs.d_minus = obs[i].d_minus;
    cs.d_plus = obs[i].d_plus;
    const std::string C = "C" + std::to_string(d), I = "I" + std::to_string(d);

    if (!cs.in_delta0) {
      // Rad = Cell, which is irreducible of type d+
      if (!cs.d_plus) throw VerificationFailed("cell module outside Delta0 without a partner above");
      rep.D[i][col.at(*cs.d_plus)] = 1;
      cs.cell_sequence = C + " = I" + std::to_string(*cs.d_plus);
      rep.cells.push_back(std::move(cs));
      continue;
    }
    rep.D[i][col.at(d)] = 1;
    if (cs.dim_rad > 0) {
      if (!cs.d_plus || irre[*cs.d_plus] != cs.dim_rad)
        throw VerificationFailed("radical of Cell" + std::to_string(d) + " does not match Irre of its partner");
      rep.D[i][col.at(*cs.d_plus)] = 1;
      cs.cell_sequence = "0 -> I" + std::to_string(*cs.d_plus) + " -> " + C + " -> " + I + " -> 0";
    } else {
      cs.cell_sequence = C + " = " + I;
    }
    const std::string P = "P" + std::to_string(d);
    if (!cs.critical && cs.d_minus) {
      cs.dim_proj = cs.dim_cell + cell_dimension(n, k, *cs.d_minus);
      cs.proj_sequence = "0 -> C" + std::to_string(*cs.d_minus) + " -> " + P + " -> " + C + " -> 0";
    } else {
      cs.dim_proj = cs.dim_cell;
      cs.proj_sequence = P + " = " + C;
    }
    rep.cells.push_back(std::move(cs));
  }

  const size_t m = rep.delta0.size();
  rep.C.assign(m, std::vector<int>(m, 0));
  for (size_t a = 0; a < m; ++a)
    for (size_t b = 0; b < m; ++b)
      for (size_t i = 0; i < rep.delta.size(); ++i) rep.C[a][b] += rep.D[i][a] * rep.D[i][b];
  return rep;
}

// ---- cyclicity ----

namespace {

// (n+k, d) -> (n, d+k): the k boundary points are carried round the bottom
// corner and appended below the right column, the lowest boundary point first.
Diagram bend(const Diagram& w, int n) {
  const int N = w.left(), d = w.right(), k = N - n;
  auto map = [&](int idx) { return idx < n ? idx : idx < N ? n + d + (N - 1 - idx) : n + (idx - N); };
  std::vector<std::uint8_t> p(static_cast<size_t>(n + d + k));
  for (int i = 0; i < w.size(); ++i) p[static_cast<size_t>(map(i))] = static_cast<std::uint8_t>(map(w.partner(i)));
  return Diagram(n, d + k, std::move(p));
}

}  // namespace

Diagram cyclic_generator(int n, int k, int d) {
  if (!in_delta(n, k, d)) throw ConstructionFailed("d = " + std::to_string(d) + " is not in Delta");
  const int N = n + k, m = (N - d) / 2;
  std::vector<std::pair<Point, Point>> pairs;
  std::vector<bool> used(static_cast<size_t>(N + 1), false);
  auto arc = [&](int a, int b) {
    pairs.push_back({{Side::Left, a}, {Side::Left, b}});
    used[static_cast<size_t>(a)] = used[static_cast<size_t>(b)] = true;
  };
  if (m <= k) {
    for (int i = 1; i <= m; ++i) arc(n + 1 - i, n + i);
  } else {
    for (int i = 1; i <= m; ++i) arc(N - 2 * m + i, N + 1 - i);
  }
  int r = 1;
  for (int a = 1; a <= N; ++a)
    if (!used[static_cast<size_t>(a)]) pairs.push_back({{Side::Left, a}, {Side::Right, r++}});
  return Diagram::from_pairs(N, d, pairs);
}

Diagram lift(int n, int k, const Diagram& v, const Diagram& z) {
  const int N = n + k, d = v.right(), m = (N - d) / 2;
  if (v.left() != N || z.left() != N || z.right() != d || !v.is_monic() || has_boundary_arc(v, n))
    throw ConstructionFailed("lift expects a basis diagram of the same cell module as the generator");
  if (z != cyclic_generator(n, k, d)) throw ConstructionFailed("lift expects the nested-arc generator");
  const Diagram vb = bend(v, n);
  const int R = d + k;  // right points of the bent diagrams, 0-based indices n..n+R-1
  Diagram B;
  if (m <= k) {
    // bent generator: epic, with a nested cap block on right positions n-m+1..R-m;
    // v has the same block since its lowest k-m boundary points are defects
    const int lo = n - m, hi = R - m;  // block is right positions lo+1..hi (1-based)
    for (int p = lo + 1; p <= hi; ++p) {
      int q = vb.partner(n + p - 1) - n + 1;
      if (q != lo + hi + 1 - p) throw ConstructionFailed("bent basis diagram lacks the generator's cap block");
    }
    auto rmap = [&](int idx) { return idx < n ? idx : (idx - n + 1 <= lo ? idx : idx - (hi - lo)); };
    std::vector<std::uint8_t> p(static_cast<size_t>(2 * n));
    for (int i = 0; i < n + R; ++i) {
      if (i >= n && i - n + 1 > lo && i - n + 1 <= hi) continue;
      p[static_cast<size_t>(rmap(i))] = static_cast<std::uint8_t>(rmap(vb.partner(i)));
    }
    B = Diagram(n, n, std::move(p));
  } else {
    // bent generator is Id_R over nested cups on the lowest n-R points; Y* undoes it
    // as a snake: Y has defects at 1..R-1 and n, nested arcs on R..n-1
    std::vector<std::pair<Point, Point>> ys;
    for (int i = 1; i < R; ++i) ys.push_back({{Side::Left, i}, {Side::Right, i}});
    ys.push_back({{Side::Left, n}, {Side::Right, R}});
    for (int i = 0; R + i < n - 1 - i; ++i) ys.push_back({{Side::Left, R + i}, {Side::Left, n - 1 - i}});
    auto c = compose(vb, reflect(Diagram::from_pairs(n, R, ys)));
    if (c.loops != 0) throw ConstructionFailed("snake closed a loop");
    B = c.diagram;
  }
  Diagram a = tensor(B, identity(k));
  auto check = compose(a, z);
  if (check.loops != 0 || check.diagram != v) throw ConstructionFailed("lifted diagram does not carry z to v");
  return a;
}

// ---- Bratteli ----

Bratteli bratteli(int n_max, int k, const Order& order) {
  Bratteli b;
  b.k = k;
  b.order = order;
  if (order)
    for (int d = 0; d <= n_max + k; ++d)
      if (is_critical(d, order)) b.critical_columns.push_back(d);
  for (int n = 1; n <= n_max; ++n) {
    BratteliRow row;
    row.n = n;
    row.nodes = delta(n, k);
    for (int d = (n + k) % 2; d <= n + k; d += 2)
      if (n + d < k) row.excluded.push_back(d);
    for (int d : row.nodes)
      if (is_critical(d, order)) row.critical.push_back(d);
    std::set<std::vector<int>> cls;
    for (const auto& o : orbits(n, k, order)) cls.insert(o.orbit);
    row.classes.assign(cls.begin(), cls.end());
    b.rows.push_back(std::move(row));
  }
  return b;
}

std::string bratteli_text(const Bratteli& b) {
  std::ostringstream os;
  os << "k=" << b.k;
  if (b.order) os << " ell=" << b.order->ell;
  os << " critical columns: [" << join(b.critical_columns, ",") << "]\n";
  for (const auto& r : b.rows) {
    os << "n=" << r.n << " nodes: " << join(r.nodes, " ");
    if (!r.excluded.empty()) os << " | excluded: " << join(r.excluded, " ");
    if (!r.critical.empty()) os << " | critical: " << join(r.critical, " ");
    os << " | classes:";
    for (const auto& c : r.classes) os << " {" << join(c, ",") << "}";
    os << "\n";
  }
  return os.str();
}

std::string bratteli_dot(const Bratteli& b) {
  std::ostringstream os;
  os << "digraph bratteli {\n  rankdir=TB;\n  node [shape=circle];\n";
  std::set<int> crit(b.critical_columns.begin(), b.critical_columns.end());
  for (const auto& r : b.rows) {
    os << "  { rank=same;";
    for (int d : r.nodes) os << " \"" << r.n << "_" << d << "\";";
    for (int d : r.excluded) os << " \"" << r.n << "_" << d << "\";";
    os << " }\n";
    for (int d : r.nodes) {
      os << "  \"" << r.n << "_" << d << "\" [label=\"" << d << "\", pos=\"" << d << "," << -r.n << "!\"";
      if (crit.count(d)) os << ", style=dashed";
      os << "];\n";
    }
    for (int d : r.excluded)
      os << "  \"" << r.n << "_" << d << "\" [label=\"" << d << "\", pos=\"" << d << "," << -r.n
         << "!\", style=filled, fillcolor=gray85, color=gray60];\n";
  }
  for (size_t i = 0; i + 1 < b.rows.size(); ++i) {
    const auto& r = b.rows[i];
    const auto& next = b.rows[i + 1];
    for (int d : r.nodes)
      for (int e : {d - 1, d + 1})
        if (std::find(next.nodes.begin(), next.nodes.end(), e) != next.nodes.end())
          os << "  \"" << r.n << "_" << d << "\" -> \"" << next.n << "_" << e << "\";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace seamrep
