#include "seamrep/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace seamrep {

LaurentPoly::LaurentPoly(long c) : LaurentPoly(mpq_class(c)) {}

LaurentPoly::LaurentPoly(const mpq_class& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(int exp, const mpq_class& c) {
  LaurentPoly p(c);
  p.low_ = p.c_.empty() ? 0 : exp;
  return p;
}

LaurentPoly LaurentPoly::from_terms(const std::map<int, mpq_class>& terms) {
  LaurentPoly p;
  if (terms.empty()) return p;
  int lo = terms.begin()->first;
  int hi = terms.rbegin()->first;
  p.low_ = lo;
  p.c_.assign(hi - lo + 1, mpq_class(0));
  for (const auto& [e, c] : terms) p.c_[e - lo] += c;
  p.trim();
  return p;
}

LaurentPoly LaurentPoly::from_dense(int low, std::vector<mpq_class> coeffs) {
  LaurentPoly p;
  p.low_ = low;
  p.c_ = std::move(coeffs);
  p.trim();
  return p;
}

void LaurentPoly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
  size_t lead = 0;
  while (lead < c_.size() && sgn(c_[lead]) == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    low_ = 0;
    return;
  }
  if (lead > 0) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    low_ += static_cast<int>(lead);
  }
}

mpq_class LaurentPoly::coeff(int exp) const {
  if (c_.empty() || exp < low_ || exp > high()) return 0;
  return c_[exp - low_];
}

std::vector<std::pair<int, mpq_class>> LaurentPoly::terms() const {
  std::vector<std::pair<int, mpq_class>> out;
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) out.emplace_back(low_ + static_cast<int>(i), c_[i]);
  return out;
}

LaurentPoly LaurentPoly::shifted(int s) const {
  LaurentPoly p = *this;
  if (!p.c_.empty()) p.low_ += s;
  return p;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  for (auto& c : p.c_) c = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.c_.empty()) return *this;
  if (c_.empty()) return *this = o;
  int lo = std::min(low_, o.low_);
  int hi = std::max(high(), o.high());
  if (lo < low_) {
    c_.insert(c_.begin(), static_cast<size_t>(low_ - lo), mpq_class(0));
    low_ = lo;
  }
  if (static_cast<int>(c_.size()) < hi - lo + 1) c_.resize(hi - lo + 1, mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[o.low_ - low_ + i] += o.c_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly& LaurentPoly::operator*=(const mpq_class& s) {
  if (sgn(s) == 0) {
    c_.clear();
    low_ = 0;
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  LaurentPoly p;
  p.low_ = a.low_ + b.low_;
  p.c_ = poly::mul(a.c_, b.c_);
  p.trim();
  return p;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& b) const {
  if (b.c_.empty()) return std::nullopt;
  if (c_.empty()) return LaurentPoly();
  if (c_.size() < b.c_.size()) return std::nullopt;
  // Power-series division from the low end, then check the remainder vanishes.
  const size_t nq = c_.size() - b.c_.size() + 1;
  std::vector<mpq_class> r = c_;
  std::vector<mpq_class> quo(nq);
  const mpq_class inv0 = 1 / b.c_[0];
  mpq_class t;
  for (size_t i = 0; i < nq; ++i) {
    if (sgn(r[i]) == 0) continue;
    quo[i] = r[i] * inv0;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      t = quo[i] * b.c_[j];
      r[i + j] -= t;
    }
  }
  for (size_t i = nq; i < r.size(); ++i)
    if (sgn(r[i]) != 0) return std::nullopt;
  return from_dense(low_ - b.low_, std::move(quo));
}

LaurentPoly LaurentPoly::poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  return from_dense(0, poly::gcd(a.c_, b.c_));
}

mpq_class LaurentPoly::make_primitive() {
  if (c_.empty()) return 1;
  mpz_class l = 1, g = 0;
  for (const auto& c : c_) {
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  }
  for (const auto& c : c_) {
    mpz_class v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  mpq_class f(l, g);
  f.canonicalize();
  for (auto& c : c_) c *= f;
  return f;
}

std::string LaurentPoly::to_string(const char* var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t idx = c_.size(); idx-- > 0;) {
    const mpq_class& c = c_[idx];
    if (sgn(c) == 0) continue;
    int e = low_ + static_cast<int>(idx);
    mpq_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (a == 1);
    if (!unit || e == 0) os << a.get_str();
    if (e != 0) {
      if (!unit) os << "*";
      os << var;
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

LaurentPoly qnum_poly(long m) {
  if (m == 0) return {};
  if (m < 0) return -qnum_poly(-m);
  std::vector<mpq_class> c(static_cast<size_t>(2 * m - 1), mpq_class(0));
  for (long j = 0; j < m; ++j) c[static_cast<size_t>(2 * j)] = 1;
  return LaurentPoly::from_dense(static_cast<int>(1 - m), std::move(c));
}

namespace poly {

void trim(Vec& a) {
  while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}

Vec mul(const Vec& a, const Vec& b) {
  if (a.empty() || b.empty()) return {};
  Vec r(a.size() + b.size() - 1, mpq_class(0));
  mpq_class t;
  for (size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (sgn(b[j]) == 0) continue;
      t = a[i] * b[j];
      r[i + j] += t;
    }
  }
  trim(r);
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec r = a;
  if (r.size() < b.size()) r.resize(b.size(), mpq_class(0));
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

std::pair<Vec, Vec> divmod(Vec a, const Vec& b) {
  trim(a);
  Vec q;
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, mpq_class(0));
  const mpq_class inv = 1 / b.back();
  mpq_class t;
  for (size_t i = a.size(); i-- >= b.size();) {
    if (sgn(a[i]) == 0) {
      if (i == 0) break;
      continue;
    }
    mpq_class f = a[i] * inv;
    size_t shift = i - (b.size() - 1);
    q[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) {
      t = f * b[j];
      a[shift + j] -= t;
    }
    if (i == 0) break;
  }
  trim(a);
  trim(q);
  return {q, a};
}

Vec rem(Vec a, const Vec& b) { return divmod(std::move(a), b).second; }

Vec gcd(Vec a, Vec b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Vec r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  mpq_class inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

}  // namespace poly

}  // namespace seamrep
