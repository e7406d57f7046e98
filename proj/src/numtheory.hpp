#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace brc {
namespace nt {

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(uint64_t n);

// Factorization by trial division up to 10^6 followed by Pollard rho
// with a fixed seed. Returns prime factors with multiplicity, sorted.
std::vector<uint64_t> factor(uint64_t n);
std::vector<uint64_t> distinct_prime_factors(uint64_t n);

uint64_t p_part(uint64_t n, uint64_t p);
uint64_t p_prime_part(uint64_t n, uint64_t p);
bool is_power_of(uint64_t n, uint64_t p);

// x = r^j with r prime and j >= 1; returns (r, j) or false.
bool prime_power_split(uint64_t x, uint64_t* base, uint32_t* exp);

// Primes of the shape 2^(2^j) + 1 resp. 2^r - 1 with r prime.
bool is_fermat_prime(uint64_t p);
bool is_mersenne_prime(uint64_t q);

// Primitive prime divisors of q^n - 1: primes dividing q^n - 1 but no
// q^j - 1 with j < n. The list is empty exactly in the known exceptional
// cases, which the report flags.
struct PpdReport {
    uint64_t q = 0;
    uint32_t n = 0;
    std::vector<uint64_t> primes;
    bool exceptional = false;
    std::string reason;  // "n=2, q Mersenne" | "q^n = 2^6" | "q^n = 2"
};

PpdReport primitive_prime_divisors(uint64_t q, uint32_t n);

// Solutions of p^a = 1 + q^b with p, q prime, classified:
//   case 1: q^b = 2^3, p^a = 3^2
//   case 2: q = 2, a = 1, b a power of 2, p a Fermat prime
//   case 3: p = 2, b = 1, a prime, q a Mersenne prime
// A solution matching none of the cases throws std::logic_error.
struct CatalanSolution {
    uint64_t p, q;
    uint32_t a, b;
    int tagged_case;  // 1, 2 or 3
};

std::vector<CatalanSolution> catalan_cases(uint64_t bound);

// Solutions of 3^k = 2 p^s + 1 with k >= 2 and p an odd prime; every
// solution with s >= 2 must be (3^5, 11, 2), asserted.
struct SpecialTriple {
    uint64_t three_k;  // 3^k
    uint32_t k;
    uint64_t p;
    uint32_t s;
};

std::vector<SpecialTriple> special_triples(uint64_t bound);

}  // namespace nt
}  // namespace brc
