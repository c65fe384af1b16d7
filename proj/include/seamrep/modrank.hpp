#pragma once

#include <cstdint>
#include <vector>

#include "seamrep/ratfunc.hpp"

namespace seamrep::modp {

// Arithmetic in Z/p for a prime p < 2^32.
constexpr std::uint64_t kPrime = 4294967291ULL;

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p = kPrime);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p = kPrime);
std::uint64_t rational_mod(const mpq_class& c, std::uint64_t p = kPrime);
// Value of x at q = qv in Z/p; throws DenominatorVanishes if the denominator dies.
std::uint64_t eval_mod(const RationalFunction& x, std::uint64_t qv, std::uint64_t p = kPrime);
// Rank of a dense matrix over Z/p (rows consumed).
int rank(std::vector<std::vector<std::uint64_t>> rows, std::uint64_t p = kPrime);

}  // namespace seamrep::modp
