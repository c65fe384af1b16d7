#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace seamrep {

// Dense Laurent polynomial in q with rational coefficients.
// Stored as q^low * (c[0] + c[1] q + ...); c is empty for zero, otherwise
// both ends are nonzero.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor)
  LaurentPoly(const mpq_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(int exp, const mpq_class& c = 1);
  static LaurentPoly from_terms(const std::map<int, mpq_class>& terms);
  static LaurentPoly from_dense(int low, std::vector<mpq_class> coeffs);

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.empty() || (c_.size() == 1 && low_ == 0); }
  bool is_monomial() const { return c_.size() == 1; }
  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(c_.size()) - 1; }
  // Width of the support, i.e. the degree once shifted to start at q^0.
  int span() const { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  const std::vector<mpq_class>& dense() const { return c_; }
  mpq_class coeff(int exp) const;
  std::vector<std::pair<int, mpq_class>> terms() const;

  LaurentPoly shifted(int s) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpq_class& s);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const mpq_class& s) { return a *= s; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.c_ == b.c_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  // Exact quotient a/b as Laurent polynomials, or nullopt if b does not divide a.
  std::optional<LaurentPoly> exact_div(const LaurentPoly& b) const;
  // Monic gcd of the ordinary polynomials obtained by shifting both to q^0.
  static LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);
  // Multiply so that all coefficients are integers with content 1; returns the factor used.
  mpq_class make_primitive();

  std::string to_string(const char* var = "q") const;

 private:
  void trim();
  int low_ = 0;
  std::vector<mpq_class> c_;
};

// q-number [m] as a Laurent polynomial: q^{m-1} + q^{m-3} + ... + q^{1-m}.
LaurentPoly qnum_poly(long m);

namespace poly {
// Helpers on dense low-first coefficient vectors (ordinary polynomials).
using Vec = std::vector<mpq_class>;
void trim(Vec& a);
Vec mul(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
// Remainder of a modulo b (b nonzero).
Vec rem(Vec a, const Vec& b);
// Quotient and remainder.
std::pair<Vec, Vec> divmod(Vec a, const Vec& b);
Vec gcd(Vec a, Vec b);
}  // namespace poly

}  // namespace seamrep
