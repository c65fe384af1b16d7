#include "seamrep/seam.hpp"

#include <unordered_map>

#include "seamrep/modrank.hpp"

namespace seamrep {

void validate_rest_para(int n, int k, const std::optional<UnityOrder>& order) {
  if (n < 1 || k < 2)
    throw ParameterConstraint("need n >= 1 and k >= 2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  if (order && order->ell <= k)
    throw ParameterConstraint("need ell > k at a root of unity, got ell=" + std::to_string(order->ell) +
                              " (N=" + std::to_string(order->N) + ") k=" + std::to_string(k));
}

std::vector<int> delta(int n, int k) {
  std::vector<int> out;
  for (int d = (n + k) % 2; d <= n + k; d += 2)
    if (n + d >= k) out.push_back(d);
  return out;
}

bool in_delta(int n, int k, int d) { return d >= 0 && d <= n + k && (n + k - d) % 2 == 0 && n + d >= k; }

long long cell_dimension(int n, int k, int d) {
  if (n < 0 || !in_delta(n, k, d)) return 0;
  long long a = binomial(n, (n + k - d) / 2);
  long long b = (n - k - d - 2) >= 0 ? binomial(n, (n - k - d - 2) / 2) : 0;
  return a - b;
}

long long seam_dimension(int n, int k) { return binomial(2 * n, n) - binomial(2 * n, n - k - 1); }

bool has_boundary_arc(const Diagram& w, int n) {
  for (int i = n; i < w.left(); ++i) {
    int j = w.partner(i);
    if (j < w.left() && j >= n) return true;
  }
  return false;
}

std::vector<Diagram> seam_basis_diagrams(int n, int k, int d) {
  std::vector<Diagram> out;
  if (d < 0 || d > n + k || (n + k - d) % 2 != 0) return out;
  for (auto& w : enumerate_monic(n + k, d))
    if (!has_boundary_arc(w, n)) out.push_back(std::move(w));
  return out;
}

CellDatum cell_datum(int n, int k) {
  CellDatum c;
  c.n = n;
  c.k = k;
  c.delta = delta(n, k);
  for (int d : c.delta) c.bases[d] = seam_basis_diagrams(n, k, d);
  return c;
}

SpanCheck span_check(int n, int k) {
  SpanCheck out;
  out.expected = seam_dimension(n, k);
  SeamContext<GenericQ> ctx(GenericQ{}, n, k);
  const int N = n + k;
  std::unordered_map<Diagram, size_t> col;
  for (const auto& d : enumerate_all(N)) col.emplace(d, col.size());

  for (int d = N % 2; d <= N; d += 2)
    for (const auto& w : enumerate_monic(N, d))
      if (has_boundary_arc(w, n) && !mul(ctx.field(), ctx.projector(), w).is_zero()) out.boundary_arcs_vanish = false;

  // P C(s,t) P is formed directly mod p: the exact coefficients of P_k are large
  std::vector<std::pair<Diagram, Diagram>> pairs;
  for (int d : delta(n, k)) {
    auto basis = seam_basis_diagrams(n, k, d);
    for (const auto& s : basis)
      for (const auto& t : basis) pairs.emplace_back(s, t);
  }
  out.count = static_cast<long long>(pairs.size());
  const std::uint64_t p = modp::kPrime;
  for (std::uint64_t qv : {7919ULL, 104729ULL, 1299709ULL}) {
    try {
      std::vector<std::pair<Diagram, std::uint64_t>> P;
      for (const auto& [dg, c] : ctx.projector().terms()) P.emplace_back(dg, modp::eval_mod(c, qv));
      const std::uint64_t beta = (qv + modp::inv_mod(qv)) % p;
      std::vector<std::uint64_t> bp{1};
      auto beta_pow = [&](int e) {
        while (static_cast<int>(bp.size()) <= e) bp.push_back(bp.back() * beta % p);
        return bp[static_cast<size_t>(e)];
      };
      std::vector<std::vector<std::uint64_t>> rows;
      for (const auto& [s, t] : pairs) {
        Diagram st = compose(s, reflect(t)).diagram;
        std::unordered_map<Diagram, std::uint64_t> left;
        for (const auto& [dp, c] : P) {
          auto [x, loops] = compose(dp, st);
          auto& v = left[x];
          v = (v + c * beta_pow(loops)) % p;
        }
        std::vector<std::uint64_t> row(col.size(), 0);
        for (const auto& [x, cx] : left) {
          if (cx == 0) continue;
          for (const auto& [dp, c] : P) {
            auto [y, loops] = compose(x, dp);
            auto& v = row[col.at(y)];
            v = (v + cx * c % p * beta_pow(loops)) % p;
          }
        }
        rows.push_back(std::move(row));
      }
      out.rank = modp::rank(std::move(rows));
      break;
    } catch (const DenominatorVanishes&) {
      continue;
    }
  }
  return out;
}

}  // namespace seamrep
