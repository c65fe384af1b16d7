#include "seamrep/pretty.hpp"

#include <numeric>
#include <sstream>
#include <vector>

namespace seamrep {

namespace {

// Multiplicity of Phi_d (d > 2) in p, with p divided out in place.
std::map<int, int> cyclotomic_multiplicities(LaurentPoly& p) {
  std::map<int, int> mult;
  if (p.is_zero()) return mult;
  for (int d = 3; d <= 2 * (p.span() + 2); ++d) {
    const auto& phi = cyclotomic_polynomial(d);
    if (static_cast<int>(phi.size()) - 1 > p.span()) continue;
    LaurentPoly f = LaurentPoly::from_dense(0, phi);
    while (true) {
      auto qt = p.exact_div(f);
      if (!qt) break;
      p = *qt;
      ++mult[d];
    }
  }
  return mult;
}

}  // namespace

std::optional<QNumberProduct> as_qnumber_product(const RationalFunction& x) {
  QNumberProduct out;
  if (x.is_zero()) {
    out.constant = 0;
    return out;
  }
  LaurentPoly num = x.num(), den = x.den();
  auto mn = cyclotomic_multiplicities(num);
  auto md = cyclotomic_multiplicities(den);
  if (!num.is_monomial() || !den.is_monomial()) return std::nullopt;
  std::map<int, int> mult = mn;
  for (auto [d, e] : md) mult[d] -= e;
  // [m] carries Phi_d for each d | 2m with d > 2, and 2m is the largest such d.
  while (true) {
    while (!mult.empty() && mult.rbegin()->second == 0) mult.erase(std::prev(mult.end()));
    if (mult.empty()) break;
    auto [d, e] = *mult.rbegin();
    if (d % 2 != 0) return std::nullopt;
    const int m = d / 2;
    out.exponents[m] += e;
    for (int dd = 3; dd <= d; ++dd)
      if (d % dd == 0) mult[dd] -= e;
  }
  out.constant = num.coeff(num.low()) / den.coeff(den.low());
  for (auto it = out.exponents.begin(); it != out.exponents.end();)
    it = it->second == 0 ? out.exponents.erase(it) : std::next(it);
  RationalFunction back(out.constant);
  for (auto [m, e] : out.exponents)
    for (int i = 0; i < std::abs(e); ++i) back = e > 0 ? back * RationalFunction(qnum_poly(m)) : back / RationalFunction(qnum_poly(m));
  if (back != x) return std::nullopt;
  return out;
}

std::string pretty(const QNumberProduct& p) {
  if (p.constant == 0) return "0";
  std::string num, den;
  auto factor = [](int m, int e) {
    std::string s = "[" + std::to_string(m) + "]";
    if (e > 1) s += "^" + std::to_string(e);
    return s;
  };
  for (auto it = p.exponents.rbegin(); it != p.exponents.rend(); ++it) {
    if (it->second > 0) num += factor(it->first, it->second);
    if (it->second < 0) den += factor(it->first, -it->second);
  }
  mpq_class c = p.constant;
  std::string sign = c < 0 ? "-" : "";
  c = abs(c);
  mpz_class cn = c.get_num(), cd = c.get_den();
  std::string head;
  if (cn != 1 || num.empty()) head = cn.get_str();
  head += num;
  if (cd != 1) den = cd.get_str() + den;
  if (den.empty()) return sign + head;
  return sign + head + "/" + den;
}

std::string pretty(const RationalFunction& x) {
  auto p = as_qnumber_product(x);
  if (!p) return x.to_string();
  return pretty(*p);
}

std::string pretty(const Cyclotomic& x) { return x.to_string(); }

}  // namespace seamrep
