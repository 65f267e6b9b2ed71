#pragma once

#include "lmodl/cyclotomic.hpp"
#include "lmodl/numeric.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace lmodl {

/// Character of (Z/f)^x with values stored as root-of-unity exponents:
/// chi(a) = zeta_order^{exponent(a)}. Extended by zero to non-units
/// (exponent slot -1). Immutable.
class DirichletCharacter {
public:
    /// exponents[a] for a in [0, modulus), -1 at non-units; order must be the
    /// exact order of the homomorphism.
    DirichletCharacter(std::uint64_t modulus, std::uint64_t order,
                       std::vector<std::int64_t> exponents);

    std::uint64_t modulus() const { return modulus_; }
    std::uint64_t order() const { return order_; }
    std::uint64_t conductor() const { return conductor_; }
    bool is_trivial() const { return order_ == 1; }
    bool is_even() const;
    bool is_primitive() const { return conductor_ == modulus_; }

    /// Exponent e with chi(a) = zeta_order^e, or -1 when gcd(a, f) > 1.
    std::int64_t exponent(std::uint64_t a) const { return exp_[a % modulus_]; }
    bool is_unit_at(std::uint64_t a) const { return exp_[a % modulus_] >= 0; }

    /// chi(a) as an element of Q(zeta_order); zero for non-units.
    CycloElement value(std::uint64_t a) const;

    DirichletCharacter inverse() const;

    bool operator==(const DirichletCharacter& o) const {
        return modulus_ == o.modulus_ && order_ == o.order_ && exp_ == o.exp_;
    }

private:
    std::uint64_t modulus_;
    std::uint64_t order_;
    std::uint64_t conductor_;
    std::vector<std::int64_t> exp_;
};

/// Cyclic decomposition of (Z/f)^x with the fixed generator conventions the
/// CLI addressing scheme relies on (see README): prime powers ascending; odd
/// p^e contributes its smallest primitive root; 4 contributes 3; 2^e with
/// e >= 3 contributes 5 then -1.
struct UnitGroupFactor {
    std::uint64_t generator;
    std::uint64_t order;
};
std::vector<UnitGroupFactor> unit_group_decomposition(std::uint64_t f);

/// All phi(f) characters mod f in the deterministic mixed-radix index order
/// (the first factor of the decomposition varies fastest).
std::vector<DirichletCharacter> enumerate_characters(std::uint64_t f);

/// Single character by its index in enumerate_characters(f).
DirichletCharacter character_by_index(std::uint64_t f, std::uint64_t index);

/// Index of chi within enumerate_characters(chi.modulus()).
std::uint64_t character_index(const DirichletCharacter& chi);

enum class Parity { even, odd };
Parity parity(const DirichletCharacter& chi);

/// The primitive character of conductor f_chi inducing chi.
DirichletCharacter primitivize(const DirichletCharacter& chi);

/// Primitive character inducing a -> chi1(a) chi2(a).
DirichletCharacter product(const DirichletCharacter& chi1, const DirichletCharacter& chi2);

/// Even character of order p^m and conductor q p^m (q = p odd, q = 4 for
/// p = 2), the j-th power of the canonical generator (the character sending
/// 1 + q to zeta_{p^m}). Requires 1 <= j < p^m with p not dividing j.
DirichletCharacter wild_character(std::uint64_t p, unsigned m, std::uint64_t j);

/// Closure of the given characters under product, primitivized, sorted.
struct CharacterGroup {
    std::uint64_t modulus = 1; // lcm of member conductors
    std::vector<DirichletCharacter> members;
};
CharacterGroup field_character_group(const std::vector<DirichletCharacter>& gens);

/// CLI addressing "f:index".
DirichletCharacter character_from_address(const std::string& address);
std::string address_of(const DirichletCharacter& chi);

} // namespace lmodl
