#pragma once

#include "seamrep/laurent.hpp"

#include <string>

namespace seamrep {

// Element of Q(q) kept in lowest terms. The denominator is an ordinary
// polynomial with constant term 1, so equal values have identical storage.
class RationalFunction {
 public:
  RationalFunction() = default;
  RationalFunction(long c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(const mpq_class& c) : num_(c) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly p) : num_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  RationalFunction(LaurentPoly num, LaurentPoly den);

  static RationalFunction q() { return LaurentPoly::monomial(1); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }

  RationalFunction operator-() const;
  RationalFunction inverse() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  // Raw text "num / (den)" in q; see pretty.hpp for q-number notation.
  std::string to_string() const;

 private:
  void normalize();
  LaurentPoly num_;
  LaurentPoly den_ = LaurentPoly(1);
};

}  // namespace seamrep
