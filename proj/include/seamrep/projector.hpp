#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <vector>

#include "seamrep/element.hpp"

namespace seamrep {

struct CheckReport {
  std::vector<std::pair<std::string, bool>> items;
  void add(std::string name, bool ok) { items.emplace_back(std::move(name), ok); }
  bool ok() const {
    for (const auto& [n, v] : items)
      if (!v) return false;
    return true;
  }
  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& [n, v] : items)
      if (!v) out.push_back(n);
    return out;
  }
};

template <class F>
struct ProjectorCache {
  int N = 0;
  int k = 0;
  Element<typename F::Scalar> expansion;
};

// Wenzl-Jones projector on the bottom k of N strands. Built once per
// (backend, N, k) and shared read-only afterwards.
template <class F>
const ProjectorCache<F>& wenzl_jones(const F& f, int N, int k) {
  using S = typename F::Scalar;
  if (k < 0 || k > N) throw IndexOutOfRange("projector P_" + std::to_string(k) + " on " + std::to_string(N));
  for (int j = 2; j <= k; ++j)
    if (f.qnum_vanishes(j))
      throw QNumberVanishes("[" + std::to_string(j) + "] = 0, so P_" + std::to_string(k) + " does not exist (need ell > k)");

  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, std::unique_ptr<ProjectorCache<F>>> cache;
  const auto key = std::make_tuple(f.order_N(), N, k);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
  }
  auto built = std::make_unique<ProjectorCache<F>>();
  built->N = N;
  built->k = k;
  if (k <= 1) {
    built->expansion = Element<S>(identity(N));
  } else {
    const auto& prev = wenzl_jones(f, N, k - 1).expansion;
    Element<S> e(generator(N, N - k + 1));
    Element<S> pep = mul(f, mul(f, prev, e), prev);
    S c = f.qnum(k - 1) / f.qnum(k);
    built->expansion = prev - pep * c;
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[key];
  if (!slot) slot = std::move(built);
  return *slot;
}

template <class F>
CheckReport verify_projector(const F& f, const ProjectorCache<F>& pc) {
  using S = typename F::Scalar;
  CheckReport rep;
  const int N = pc.N, k = pc.k;
  const auto& P = pc.expansion;
  rep.add("P^2 = P", mul(f, P, P) == P);
  for (int i = 1; i <= N - 1; ++i) {
    Element<S> E(generator(N, i));
    Element<S> PE = mul(f, P, E), EP = mul(f, E, P);
    if (i <= N - k - 1) {
      rep.add("P E_" + std::to_string(i) + " = E_" + std::to_string(i) + " P", PE == EP);
    } else if (i >= N - k + 1) {
      rep.add("P E_" + std::to_string(i) + " = 0", PE.is_zero());
      rep.add("E_" + std::to_string(i) + " P = 0", EP.is_zero());
    }
  }
  if (k >= 1 && N - k >= 1) {
    Element<S> E(generator(N, N - k));
    Element<S> lhs = mul(f, mul(f, E, P), E);
    const auto& Pm = wenzl_jones(f, N, k - 1).expansion;
    Element<S> rhs = mul(f, E, Pm) * (f.qnum(k + 1) / f.qnum(k));
    rep.add("absorption E P_k E = [k+1]/[k] E P_{k-1}", lhs == rhs);
  }
  return rep;
}

// P_k = (1/[k]) sum_i (-1)^i [k-i] P_{k-1} E_{N-k+1} ... E_{N-k+i}.
template <class F>
bool wj_decomposition_check(const F& f, int N, int k) {
  using S = typename F::Scalar;
  if (k <= 1) return wenzl_jones(f, N, k).expansion == Element<S>(identity(N));
  const auto& Pk = wenzl_jones(f, N, k).expansion;
  const auto& Pm = wenzl_jones(f, N, k - 1).expansion;
  Element<S> sum(N, N);
  Element<S> chain = Pm;
  for (int i = 0; i < k; ++i) {
    if (i > 0) chain = mul(f, chain, Element<S>(generator(N, N - k + i)));
    S c = f.qnum(k - i);
    if (i % 2 == 1) c = -c;
    sum += chain * c;
  }
  sum *= f.constant(1) / f.qnum(k);
  return sum == Pk;
}

}  // namespace seamrep
