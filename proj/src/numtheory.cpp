#include "numtheory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace brc {
namespace nt {

namespace {

using u128 = unsigned __int128;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) { return uint64_t(u128(a) * b % m); }

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent-style rho with fixed constants; deterministic.
uint64_t pollard_rho(uint64_t n) {
    if (n % 2 == 0) return 2;
    for (uint64_t c = 1; c < 64; ++c) {
        uint64_t x = 2, y = 2, d = 1;
        uint64_t count = 0;
        while (d == 1) {
            x = (mulmod(x, x, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            y = (mulmod(y, y, n) + c) % n;
            d = gcd64(x > y ? x - y : y - x, n);
            if (++count > 10'000'000) break;  // iteration budget per constant
        }
        if (d != n && d != 1) return d;
    }
    throw std::runtime_error("factorization budget exceeded for " + std::to_string(n));
}

void factor_rec(uint64_t n, std::vector<uint64_t>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        out.push_back(n);
        return;
    }
    uint64_t d = pollard_rho(n);
    factor_rec(d, out);
    factor_rec(n / d, out);
}

}  // namespace

bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // proven witness set for all n < 3.3 * 10^24
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<uint64_t> factor(uint64_t n) {
    std::vector<uint64_t> out;
    for (uint64_t d = 2; d <= 1'000'000 && d * d <= n; ++d) {
        while (n % d == 0) {
            out.push_back(d);
            n /= d;
        }
    }
    if (n > 1) factor_rec(n, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<uint64_t> distinct_prime_factors(uint64_t n) {
    auto f = factor(n);
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

uint64_t p_part(uint64_t n, uint64_t p) {
    uint64_t out = 1;
    while (n % p == 0) {
        n /= p;
        out *= p;
    }
    return out;
}

uint64_t p_prime_part(uint64_t n, uint64_t p) { return n / p_part(n, p); }

bool is_power_of(uint64_t n, uint64_t p) {
    if (n == 0) return false;
    while (n % p == 0) n /= p;
    return n == 1;
}

bool prime_power_split(uint64_t x, uint64_t* base, uint32_t* exp) {
    if (x < 2) return false;
    for (uint32_t j = 63; j >= 1; --j) {
        // integer j-th root of x
        uint64_t r = uint64_t(std::llround(std::pow(double(x), 1.0 / j)));
        for (uint64_t cand = (r > 2 ? r - 2 : 1); cand <= r + 2; ++cand) {
            u128 acc = 1;
            for (uint32_t i = 0; i < j && acc <= x; ++i) acc *= cand;
            if (acc == x && is_prime(cand)) {
                *base = cand;
                *exp = j;
                return true;
            }
        }
        if (j == 1) break;
    }
    return false;
}

bool is_fermat_prime(uint64_t p) {
    if (!is_prime(p)) return false;
    uint64_t m = p - 1;
    if (m == 0 || (m & (m - 1)) != 0) return false;  // not a power of 2
    uint32_t e = 0;
    while (m > 1) {
        m >>= 1;
        ++e;
    }
    return (e & (e - 1)) == 0;  // exponent itself a power of 2
}

bool is_mersenne_prime(uint64_t q) {
    if (!is_prime(q)) return false;
    uint64_t m = q + 1;
    if ((m & (m - 1)) != 0) return false;
    uint32_t r = 0;
    while (m > 1) {
        m >>= 1;
        ++r;
    }
    return is_prime(r);
}

PpdReport primitive_prime_divisors(uint64_t q, uint32_t n) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");
    if (n == 0) throw std::invalid_argument("n must be positive");
    u128 qn = 1;
    for (uint32_t i = 0; i < n; ++i) {
        qn *= q;
        if (qn > u128(1) << 63) throw std::invalid_argument("q^n exceeds 2^63");
    }
    PpdReport rep;
    rep.q = q;
    rep.n = n;
    uint64_t target = uint64_t(qn) - 1;
    if (target == 1) {
        rep.exceptional = true;
        rep.reason = "q^n = 2";
        return rep;
    }
    for (uint64_t ell : distinct_prime_factors(target)) {
        // ell is primitive iff the order of q mod ell is exactly n
        bool primitive = true;
        uint64_t acc = q % ell;
        for (uint32_t j = 1; j < n; ++j) {
            if (acc == 1) {
                primitive = false;
                break;
            }
            acc = mulmod(acc, q, ell);
        }
        if (primitive) rep.primes.push_back(ell);
    }
    if (rep.primes.empty()) {
        rep.exceptional = true;
        if (q == 2 && n == 6)
            rep.reason = "q^n = 2^6";
        else if (n == 2 && is_mersenne_prime(q))
            rep.reason = "n=2, q Mersenne";
        else
            rep.reason = "unexpected";
    }
    return rep;
}

std::vector<CatalanSolution> catalan_cases(uint64_t bound) {
    if (bound > 1'000'000'000ull) throw std::invalid_argument("catalan bound exceeds 10^9");
    std::vector<CatalanSolution> out;
    auto classify = [](CatalanSolution& s) {
        if (s.q == 2 && s.b == 3 && s.p == 3 && s.a == 2) {
            s.tagged_case = 1;
        } else if (s.q == 2 && s.a == 1 && (s.b & (s.b - 1)) == 0 && is_fermat_prime(s.p)) {
            s.tagged_case = 2;
        } else if (s.p == 2 && s.b == 1 && is_prime(s.a) && is_mersenne_prime(s.q)) {
            s.tagged_case = 3;
        } else {
            throw std::logic_error("catalan solution escapes the three cases: " +
                                   std::to_string(s.p) + "^" + std::to_string(s.a) + " = 1 + " +
                                   std::to_string(s.q) + "^" + std::to_string(s.b));
        }
    };
    // Enumerate p^a <= bound and test p^a - 1 for prime-power shape.
    // a = 1, q = 2: candidates p = 2^b + 1.
    for (uint32_t b = 1; (1ull << b) + 1 <= bound && b < 63; ++b) {
        uint64_t p = (1ull << b) + 1;
        if (is_prime(p)) {
            CatalanSolution s{p, 2, 1, b, 0};
            classify(s);
            out.push_back(s);
        }
    }
    // a = 1, q odd prime, b >= 2
    for (uint64_t q = 3; q * q <= bound; q += 2) {
        if (!is_prime(q)) continue;
        u128 qb = q * q;
        for (uint32_t b = 2; qb + 1 <= bound; ++b, qb *= q) {
            uint64_t p = uint64_t(qb) + 1;
            if (is_prime(p)) {
                CatalanSolution s{p, q, 1, b, 0};
                classify(s);
                out.push_back(s);
            }
        }
    }
    // a >= 2
    for (uint64_t p = 2; p * p <= bound; ++p) {
        if (!is_prime(p)) continue;
        u128 pa = p * p;
        for (uint32_t a = 2; pa <= bound; ++a, pa *= p) {
            uint64_t base;
            uint32_t e;
            if (prime_power_split(uint64_t(pa) - 1, &base, &e)) {
                CatalanSolution s{p, base, a, e, 0};
                classify(s);
                out.push_back(s);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const CatalanSolution& x, const CatalanSolution& y) {
        u128 lx = 1, ly = 1;
        for (uint32_t i = 0; i < x.a; ++i) lx *= x.p;
        for (uint32_t i = 0; i < y.a; ++i) ly *= y.p;
        return lx < ly;
    });
    return out;
}

std::vector<SpecialTriple> special_triples(uint64_t bound) {
    std::vector<SpecialTriple> out;
    uint64_t three_k = 9;
    for (uint32_t k = 2; three_k <= bound; ++k, three_k *= 3) {
        uint64_t m = (three_k - 1) / 2;
        uint64_t p;
        uint32_t s;
        if (prime_power_split(m, &p, &s) && p % 2 == 1) {
            if (s >= 2 && !(three_k == 243 && p == 11 && s == 2))
                throw std::logic_error("unexpected s >= 2 solution of 3^k = 2p^s + 1");
            out.push_back({three_k, k, p, s});
        }
    }
    return out;
}

}  // namespace nt
}  // namespace brc
