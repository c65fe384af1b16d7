#pragma once

#include <complex>
#include <random>
#include <string>
#include <vector>

#include "seamrep/diagram.hpp"
#include "seamrep/qscalar.hpp"

namespace testing_helpers {

using namespace seamrep;

inline RationalFunction Q(long m) { return GenericQ{}.qnum(m); }

inline LaurentPoly random_laurent(std::mt19937& rng, int max_terms = 4) {
  std::uniform_int_distribution<int> nterms(0, max_terms), exp(-4, 4), num(-5, 5), den(1, 3);
  std::map<int, mpq_class> t;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    mpq_class c(num(rng), den(rng));
    c.canonicalize();
    t[exp(rng)] += c;
  }
  return LaurentPoly::from_terms(t);
}

inline RationalFunction random_ratfunc(std::mt19937& rng) {
  LaurentPoly d;
  while (d.is_zero()) d = random_laurent(rng, 3);
  return RationalFunction(random_laurent(rng), d);
}

// Floating evaluation at q = exp(2 pi i / N); test-side oracle only.
inline std::complex<double> eval(const Cyclotomic& x, int N) {
  std::complex<double> z = std::polar(1.0, 2 * M_PI / N), r = 0, p = 1;
  for (const auto& c : x.coeffs()) {
    r += c.get_d() * p;
    p *= z;
  }
  return r;
}

inline std::complex<double> eval(const LaurentPoly& x, std::complex<double> q) {
  std::complex<double> r = 0;
  for (const auto& [e, c] : x.terms()) r += c.get_d() * std::pow(q, e);
  return r;
}

inline std::complex<double> eval(const RationalFunction& x, std::complex<double> q) {
  return eval(x.num(), q) / eval(x.den(), q);
}

// Diagram from top-indexed arcs on the left and a list of left points that are defects
// (joined to right points in order). Indices are 1-based.
inline Diagram monic_from(int n, const std::vector<std::pair<int, int>>& arcs, const std::vector<int>& defects) {
  std::vector<std::pair<Point, Point>> pairs;
  for (auto [a, b] : arcs) pairs.push_back({{Side::Left, a}, {Side::Left, b}});
  int r = 1;
  for (int dft : defects) pairs.push_back({{Side::Left, dft}, {Side::Right, r++}});
  return Diagram::from_pairs(n, static_cast<int>(defects.size()), pairs);
}

}  // namespace testing_helpers
