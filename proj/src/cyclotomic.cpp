#include "seamrep/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "seamrep/errors.hpp"
#include "seamrep/laurent.hpp"

namespace seamrep {

UnityOrder::UnityOrder(int order) : N(order), ell(order % 2 == 1 ? order : order / 2) {
  if (order < 1) throw ParameterConstraint("order of q must be positive");
}

int euler_phi(int N) {
  int r = N;
  int m = N;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    r -= r / p;
  }
  if (m > 1) r -= r / m;
  return r;
}

const std::vector<mpq_class>& cyclotomic_polynomial(int N) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<std::vector<mpq_class>>> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(N);
    if (it != cache.end()) return *it->second;
  }
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<mpq_class> p(static_cast<size_t>(N + 1), mpq_class(0));
  p[0] = -1;
  p[static_cast<size_t>(N)] = 1;
  for (int d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    auto [q, r] = poly::divmod(p, cyclotomic_polynomial(d));
    p = std::move(q);
  }
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[N];
  if (!slot) slot = std::make_unique<std::vector<mpq_class>>(std::move(p));
  return *slot;
}

Cyclotomic::Cyclotomic(long c) : Cyclotomic(mpq_class(c)) {}

Cyclotomic::Cyclotomic(const mpq_class& c) {
  if (sgn(c) != 0) c_.push_back(c);
}

Cyclotomic Cyclotomic::zeta_power(int N, long e) {
  long r = e % N;
  if (r < 0) r += N;
  Cyclotomic z;
  z.N_ = N;
  z.c_.assign(static_cast<size_t>(r + 1), mpq_class(0));
  z.c_[static_cast<size_t>(r)] = 1;
  z.reduce();
  return z;
}

Cyclotomic Cyclotomic::from_coeffs(int N, std::vector<mpq_class> coeffs) {
  Cyclotomic z;
  z.N_ = N;
  z.c_ = std::move(coeffs);
  z.reduce();
  return z;
}

mpq_class Cyclotomic::rational_value() const {
  if (c_.empty()) return 0;
  if (c_.size() != 1) throw Error("NotRational", "cyclotomic value is not rational");
  return c_[0];
}

void Cyclotomic::reduce() {
  if (N_ > 0) {
    const auto& phi = cyclotomic_polynomial(N_);
    if (c_.size() >= phi.size()) c_ = poly::rem(std::move(c_), phi);
  }
  poly::trim(c_);
}

int Cyclotomic::join(const Cyclotomic& o) const {
  if (N_ == 0) return o.N_;
  if (o.N_ == 0 || o.N_ == N_) return N_;
  throw BackendMismatch("cyclotomic orders " + std::to_string(N_) + " and " + std::to_string(o.N_));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  N_ = join(o);
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), mpq_class(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  poly::trim(c_);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  N_ = join(o);
  c_ = poly::mul(c_, o.c_);
  reduce();
  return *this;
}

Cyclotomic Cyclotomic::inverse() const {
  if (c_.empty()) throw DenominatorVanishes("inverse of zero in cyclotomic field");
  if (c_.size() == 1) {
    Cyclotomic r = *this;
    r.c_[0] = 1 / r.c_[0];
    return r;
  }
  // Extended Euclid: find u with u*a + v*phi = 1.
  const auto& phi = cyclotomic_polynomial(N_);
  poly::Vec r0 = phi, r1 = c_;
  poly::Vec s0, s1{mpq_class(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly::divmod(r0, r1);
    poly::Vec s = poly::sub(s0, poly::mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw DenominatorVanishes("non-invertible cyclotomic element");
  }
  mpq_class inv = 1 / r1[0];
  for (auto& c : s1) c *= inv;
  return from_coeffs(N_, std::move(s1));
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.c_ != b.c_) return false;
  if (a.c_.size() <= 1) return true;
  return a.N_ == b.N_ || a.N_ == 0 || b.N_ == 0;
}

std::string Cyclotomic::to_string() const {
  if (c_.empty()) return "0";
  return LaurentPoly::from_dense(0, c_).to_string("q");
}

}  // namespace seamrep
