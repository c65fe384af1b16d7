#pragma once

#include <Eigen/Core>

#include <optional>
#include <string>
#include <vector>

#include "seamrep/cyclotomic.hpp"
#include "seamrep/errors.hpp"
#include "seamrep/ratfunc.hpp"

namespace seamrep {

inline bool is_zero(const RationalFunction& x) { return x.is_zero(); }
inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

// Generic q: scalars are rational functions in q.
struct GenericQ {
  using Scalar = RationalFunction;
  static constexpr const char* name = "generic";

  std::optional<UnityOrder> order() const { return std::nullopt; }
  int order_N() const { return 0; }
  Scalar constant(long c) const { return Scalar(c); }
  Scalar q_power(long e) const { return Scalar(LaurentPoly::monomial(static_cast<int>(e))); }
  Scalar qnum(long m) const { return Scalar(qnum_poly(m)); }
  bool qnum_vanishes(long m) const { return m == 0; }
  Scalar from_generic(const RationalFunction& x) const { return x; }
  friend bool operator==(const GenericQ&, const GenericQ&) { return true; }
};

// q a primitive N-th root of unity: scalars live in Q(zeta_N).
struct RootOfUnity {
  using Scalar = Cyclotomic;
  static constexpr const char* name = "root";

  UnityOrder unity;
  explicit RootOfUnity(UnityOrder u) : unity(u) {}
  explicit RootOfUnity(int N) : unity(N) {}

  std::optional<UnityOrder> order() const { return unity; }
  int order_N() const { return unity.N; }
  int ell() const { return unity.ell; }
  Scalar constant(long c) const { return Scalar(c); }
  Scalar q_power(long e) const { return Cyclotomic::zeta_power(unity.N, e); }
  Scalar qnum(long m) const;
  // q = +-1 gives [m] = +-m, which only vanishes at m = 0.
  bool qnum_vanishes(long m) const { return unity.N <= 2 ? m == 0 : m % unity.ell == 0; }
  Scalar from_generic(const RationalFunction& x) const;
  friend bool operator==(const RootOfUnity& a, const RootOfUnity& b) { return a.unity == b.unity; }
};

template <class F>
typename F::Scalar qnum(long m, const F& f) {
  return f.qnum(m);
}

template <class F>
typename F::Scalar qfact(long m, const F& f) {
  typename F::Scalar r = f.constant(1);
  for (long j = 2; j <= m; ++j) r *= f.qnum(j);
  return r;
}

template <class F>
typename F::Scalar beta(const F& f) {
  return f.qnum(2);
}

// Image of a generic-q scalar under q -> zeta_N.
Cyclotomic specialize(const RationalFunction& s, const UnityOrder& order);
Cyclotomic specialize(const LaurentPoly& p, const UnityOrder& order);

// beta^0 .. beta^emax.
template <class F>
std::vector<typename F::Scalar> beta_powers(const F& f, int emax) {
  std::vector<typename F::Scalar> p{f.constant(1)};
  const auto b = f.qnum(2);
  for (int e = 1; e <= emax; ++e) p.push_back(p.back() * b);
  return p;
}

}  // namespace seamrep

namespace Eigen {

template <>
struct NumTraits<seamrep::RationalFunction> : GenericNumTraits<seamrep::RationalFunction> {
  using Real = seamrep::RationalFunction;
  using NonInteger = seamrep::RationalFunction;
  using Nested = seamrep::RationalFunction;
  using Literal = seamrep::RationalFunction;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 20,
    AddCost = 200,
    MulCost = 400
  };
};

template <>
struct NumTraits<seamrep::Cyclotomic> : GenericNumTraits<seamrep::Cyclotomic> {
  using Real = seamrep::Cyclotomic;
  using NonInteger = seamrep::Cyclotomic;
  using Nested = seamrep::Cyclotomic;
  using Literal = seamrep::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 10,
    AddCost = 50,
    MulCost = 100
  };
};

}  // namespace Eigen
