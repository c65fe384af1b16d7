#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace seamrep {

// q of multiplicative order N. ell is the least positive integer with q^{2 ell} = 1.
struct UnityOrder {
  int N = 0;
  int ell = 0;
  explicit UnityOrder(int order);
  UnityOrder() = default;
  static UnityOrder from_ell(int ell) { return UnityOrder(2 * ell); }
  friend bool operator==(const UnityOrder& a, const UnityOrder& b) { return a.N == b.N; }
};

// Element of Q(zeta_N), stored as a polynomial in zeta of degree < phi(N)
// reduced modulo the N-th cyclotomic polynomial. N == 0 marks a plain rational
// constant that adopts the order of whatever it is combined with; this is what
// lets Eigen build Scalar(0) and Scalar(1).
class Cyclotomic {
 public:
  Cyclotomic() = default;
  Cyclotomic(long c);  // NOLINT(google-explicit-constructor)
  Cyclotomic(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static Cyclotomic zeta_power(int N, long e);
  static Cyclotomic from_coeffs(int N, std::vector<mpq_class> coeffs);

  int order() const { return N_; }
  bool is_zero() const { return c_.empty(); }
  bool is_rational() const { return c_.size() <= 1; }
  mpq_class rational_value() const;  // requires is_rational()
  const std::vector<mpq_class>& coeffs() const { return c_; }

  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o);
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

  // Polynomial in q = zeta_N, highest power first.
  std::string to_string() const;

 private:
  int join(const Cyclotomic& o) const;
  void reduce();
  int N_ = 0;
  std::vector<mpq_class> c_;
};

// Integer coefficients of the N-th cyclotomic polynomial, low degree first.
const std::vector<mpq_class>& cyclotomic_polynomial(int N);
int euler_phi(int N);

}  // namespace seamrep
