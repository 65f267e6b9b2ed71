#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace lmodl {

using Int = mpz_class;
using Rat = mpq_class;

/// mpq_class(num, den) does not canonicalize on its own; this does.
inline Rat make_rat(const Int& num, const Int& den) {
    Rat r(num, den);
    r.canonicalize();
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Int binomial(unsigned long n, unsigned long k) {
    Int r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Int factorial(unsigned long n) {
    Int r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, const Int& exp, std::uint64_t m);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m); // m prime or gcd(a,m)=1

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b);

bool is_prime(std::uint64_t n); // trial division; fine at the scales used here
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);
std::uint64_t euler_phi(std::uint64_t n);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Smallest primitive root modulo p^e (p odd prime) or modulo 4.
std::uint64_t smallest_primitive_root(std::uint64_t prime_power);

/// Deterministic 64-bit LCG used wherever tests or self-checks need
/// "random" inputs. No std::random anywhere: identical streams on every
/// platform.
class Lcg {
public:
    explicit Lcg(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
        return state_ >> 16;
    }
    std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
    std::uint64_t state_;
};

} // namespace lmodl
