#pragma once

#include <map>
#include <optional>
#include <string>

#include "seamrep/qscalar.hpp"

namespace seamrep {

// c * prod [m]^e_m with e_m possibly negative.
struct QNumberProduct {
  mpq_class constant = 1;
  std::map<int, int> exponents;
};

// Writes x as a signed product of q-numbers when possible.
std::optional<QNumberProduct> as_qnumber_product(const RationalFunction& x);

// "[5][4]^4/[2]^4" style when x is a q-number product, otherwise the plain form.
std::string pretty(const RationalFunction& x);
std::string pretty(const Cyclotomic& x);
std::string pretty(const QNumberProduct& p);

}  // namespace seamrep
