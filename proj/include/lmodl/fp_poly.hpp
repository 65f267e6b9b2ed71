#pragma once

#include "lmodl/numeric.hpp"

#include <cstdint>
#include <vector>

namespace lmodl {

/// Dense polynomial over the prime field F_p. Coefficients are reduced
/// residues, c[i] is the coefficient of x^i, trailing zeros trimmed
/// (the zero polynomial has an empty coefficient vector).
struct FpPoly {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> c;

    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_zero() const { return c.empty(); }
    bool operator==(const FpPoly& o) const { return p == o.p && c == o.c; }
};

namespace fp {

FpPoly make(std::uint64_t p, std::vector<std::uint64_t> coeffs);
FpPoly zero(std::uint64_t p);
FpPoly one(std::uint64_t p);
FpPoly x(std::uint64_t p);

FpPoly add(const FpPoly& a, const FpPoly& b);
FpPoly sub(const FpPoly& a, const FpPoly& b);
FpPoly mul(const FpPoly& a, const FpPoly& b);
FpPoly scale(const FpPoly& a, std::uint64_t s);
std::pair<FpPoly, FpPoly> divmod(const FpPoly& a, const FpPoly& b);
FpPoly rem(const FpPoly& a, const FpPoly& b);
FpPoly monic(const FpPoly& a);
FpPoly gcd(FpPoly a, FpPoly b); // monic
FpPoly derivative(const FpPoly& a);
std::uint64_t eval(const FpPoly& a, std::uint64_t x);
FpPoly pow_mod(const FpPoly& base, const Int& e, const FpPoly& mod);

/// Canonical total order: by degree, then by coefficients compared from the
/// highest-degree one down. "First" factors and "smallest" moduli throughout
/// the library refer to this order.
bool less(const FpPoly& a, const FpPoly& b);

/// Monic degree-d polynomial number `v`: x^d + sum c_i x^i where c_i is the
/// i-th base-p digit of v. Enumerating v = 0, 1, 2, ... walks the canonical
/// order above.
FpPoly monic_by_counter(std::uint64_t p, unsigned d, const Int& v);

bool is_irreducible(const FpPoly& f);

/// Deterministically smallest monic irreducible of given degree.
FpPoly smallest_irreducible(std::uint64_t p, unsigned degree);

/// All monic irreducible factors of a squarefree polynomial, sorted in the
/// canonical order. Throws DomainError("NotSquarefree") when gcd(f, f') != 1.
/// Fully deterministic: equal-degree splitting enumerates trial elements by
/// counter instead of sampling.
std::vector<FpPoly> factor_squarefree(const FpPoly& f);

} // namespace fp

} // namespace lmodl
