#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace chainsaw {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& x) { return x.get_str(10); }

/// binom(n, k) for signed arguments; 0 when k < 0, n < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace chainsaw
