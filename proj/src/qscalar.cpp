#include "seamrep/qscalar.hpp"

namespace seamrep {

Cyclotomic RootOfUnity::qnum(long m) const {
  if (m == 0) return Cyclotomic();
  if (m < 0) return -qnum(-m);
  Cyclotomic r;
  for (long j = 0; j < m; ++j) r += Cyclotomic::zeta_power(unity.N, m - 1 - 2 * j);
  return r;
}

Cyclotomic RootOfUnity::from_generic(const RationalFunction& x) const { return specialize(x, unity); }

Cyclotomic specialize(const LaurentPoly& p, const UnityOrder& order) {
  const int N = order.N;
  std::vector<mpq_class> c(static_cast<size_t>(N), mpq_class(0));
  for (const auto& [e, v] : p.terms()) {
    long r = e % N;
    if (r < 0) r += N;
    c[static_cast<size_t>(r)] += v;
  }
  return Cyclotomic::from_coeffs(N, std::move(c));
}

Cyclotomic specialize(const RationalFunction& s, const UnityOrder& order) {
  Cyclotomic den = specialize(s.den(), order);
  if (den.is_zero())
    throw DenominatorVanishes("denominator " + s.den().to_string() + " vanishes at q of order " +
                              std::to_string(order.N));
  Cyclotomic num = specialize(s.num(), order);
  if (den.is_rational() && den.rational_value() == 1) return num;
  return num / den;
}

}  // namespace seamrep
