#include "seamrep/modrank.hpp"

#include "seamrep/errors.hpp"

namespace seamrep::modp {

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DenominatorVanishes("inverse of 0 mod p");
  return pow_mod(a, p - 2, p);
}

std::uint64_t rational_mod(const mpq_class& c, std::uint64_t p) {
  mpz_class n = c.get_num() % static_cast<unsigned long>(p);
  if (n < 0) n += static_cast<unsigned long>(p);
  mpz_class d = c.get_den() % static_cast<unsigned long>(p);
  return n.get_ui() * inv_mod(d.get_ui(), p) % p;
}

namespace {

std::uint64_t eval_poly(const LaurentPoly& x, std::uint64_t qv, std::uint64_t p) {
  if (x.is_zero()) return 0;
  std::uint64_t acc = 0;
  const auto& c = x.dense();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * qv + rational_mod(*it, p)) % p;
  const int low = x.low();
  std::uint64_t shift = low >= 0 ? pow_mod(qv, static_cast<std::uint64_t>(low), p)
                                 : inv_mod(pow_mod(qv, static_cast<std::uint64_t>(-low), p), p);
  return acc * shift % p;
}

}  // namespace

std::uint64_t eval_mod(const RationalFunction& x, std::uint64_t qv, std::uint64_t p) {
  std::uint64_t d = eval_poly(x.den(), qv, p);
  if (d == 0) throw DenominatorVanishes("denominator vanishes mod p");
  return eval_poly(x.num(), qv, p) * inv_mod(d, p) % p;
}

int rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const size_t ncols = rows[0].size();
  size_t r = 0;
  for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
    size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t inv = inv_mod(rows[r][c], p);
    for (size_t j = c; j < ncols; ++j) rows[r][j] = rows[r][j] * inv % p;
    for (size_t i = r + 1; i < rows.size(); ++i) {
      std::uint64_t f = rows[i][c];
      if (f == 0) continue;
      for (size_t j = c; j < ncols; ++j) rows[i][j] = (rows[i][j] + (p - f) * rows[r][j]) % p;
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace seamrep::modp
