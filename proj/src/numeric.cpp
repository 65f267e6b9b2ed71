#include "lmodl/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace lmodl {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return r;
}

std::uint64_t pow_mod(std::uint64_t base, const Int& exp, std::uint64_t m) {
    if (m == 1) return 0;
    std::uint64_t r = 1;
    base %= m;
    const std::size_t bits = mpz_sizeinbase(exp.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = mul_mod(r, r, m);
        if (mpz_tstbit(exp.get_mpz_t(), i)) r = mul_mod(r, base, m);
    }
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m) {
    // extended Euclid on signed 128-bit intermediates
    __int128 t = 0, new_t = 1;
    __int128 r = m, new_r = a % m;
    while (new_r != 0) {
        __int128 q = r / new_r;
        t -= q * new_t;
        std::swap(t, new_t);
        r -= q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    return a / gcd_u64(a, b) * b;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            unsigned e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t sz = out.size();
        std::uint64_t pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < sz; ++j) out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t k = 2; k <= n; ++k)
        if (is_prime(k)) out.push_back(k);
    return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        r -= r / p;
    }
    return r;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
    if (m == 1) return 1;
    a %= m;
    if (gcd_u64(a, m) != 1) throw std::invalid_argument("multiplicative_order: gcd != 1");
    const std::uint64_t group = euler_phi(m);
    std::uint64_t order = group;
    for (const auto& [p, e] : factorize(group)) {
        (void)e;
        while (order % p == 0 && pow_mod(a, order / p, m) == 1) order /= p;
    }
    return order;
}

std::uint64_t smallest_primitive_root(std::uint64_t prime_power) {
    if (prime_power == 4) return 3;
    const std::uint64_t phi = euler_phi(prime_power);
    const auto fac = factorize(phi);
    for (std::uint64_t g = 2; g < prime_power; ++g) {
        if (gcd_u64(g, prime_power) != 1) continue;
        bool primitive = true;
        for (const auto& [q, e] : fac) {
            (void)e;
            if (pow_mod(g, phi / q, prime_power) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::invalid_argument("smallest_primitive_root: modulus has no primitive root");
}

} // namespace lmodl
