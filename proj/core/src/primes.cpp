#include "zfr/primes.hpp"

#include <stdexcept>

namespace zfr {

std::vector<std::int64_t> primes_up_to(std::int64_t limit) {
    if (limit < 2) {
        throw std::invalid_argument("primes_up_to: limit must be >= 2");
    }
    if (limit > 100'000'000) {
        throw std::length_error("primes_up_to: limit capped at 1e8");
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= limit; ++p) {
        if (composite[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (std::int64_t q = p * p; q <= limit; q += p) {
            composite[static_cast<std::size_t>(q)] = true;
        }
    }
    return primes;
}

}  // namespace zfr
