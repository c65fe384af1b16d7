#include "seamrep/ratfunc.hpp"

#include "seamrep/errors.hpp"

namespace seamrep {

RationalFunction::RationalFunction(LaurentPoly num, LaurentPoly den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DenominatorVanishes("zero denominator in rational function");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  const int s = den_.low();
  den_ = den_.shifted(-s);
  num_ = num_.shifted(-s);
  if (den_.span() > 0) {
    LaurentPoly g = LaurentPoly::poly_gcd(num_, den_);
    if (g.span() > 0) {
      num_ = *num_.exact_div(g);
      den_ = *den_.exact_div(g);
    }
  }
  const mpq_class c = den_.coeff(0);
  if (c != 1) {
    const mpq_class inv = 1 / c;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction RationalFunction::inverse() const {
  if (num_.is_zero()) throw DenominatorVanishes("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = LaurentPoly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = RationalFunction();
  const bool poly = den_.is_constant() && o.den_.is_constant();
  num_ = num_ * o.num_;
  if (poly) return *this;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace seamrep
