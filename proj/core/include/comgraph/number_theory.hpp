#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace comgraph {

bool is_prime(std::uint64_t n);

/// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);

/// Number of prime factors counted with multiplicity.
unsigned omega_with_multiplicity(std::uint64_t n);

std::uint32_t pow_mod(std::uint32_t base, std::uint64_t exp, std::uint32_t p);

/// Inverse of a modulo prime p; a must be nonzero mod p.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);

}  // namespace comgraph
