#pragma once

#include <cstdint>
#include <vector>

namespace zfr {

// Ascending list of all primes <= limit (sieve of Eratosthenes).
// Requires 2 <= limit; limits above 10^8 are rejected (std::length_error).
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

}  // namespace zfr
