#pragma once

#include "lmodl/fp_poly.hpp"
#include "lmodl/numeric.hpp"
#include "lmodl/poly.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace lmodl {

/// F_{ell^D} = F_ell[x]/(modulus). Immutable; elements hold a shared handle.
class FiniteField {
public:
    /// Field with the deterministically smallest monic irreducible modulus
    /// of the requested degree.
    static std::shared_ptr<const FiniteField> make(std::uint64_t ell, unsigned degree);
    /// Field with a caller-chosen irreducible modulus (e.g. a factor of a
    /// cyclotomic polynomial).
    static std::shared_ptr<const FiniteField> with_modulus(FpPoly modulus);

    std::uint64_t ell() const { return mod_.p; }
    unsigned degree() const { return static_cast<unsigned>(mod_.degree()); }
    const FpPoly& modulus() const { return mod_; }
    Int order() const { return int_pow(Int(static_cast<unsigned long>(ell())), degree()); }

private:
    explicit FiniteField(FpPoly m) : mod_(std::move(m)) {}
    FpPoly mod_;
};

class FFElement {
public:
    FFElement() = default; // empty sentinel; assign before use

    static FFElement zero(std::shared_ptr<const FiniteField> F);
    static FFElement one(std::shared_ptr<const FiniteField> F);
    static FFElement from_int(std::shared_ptr<const FiniteField> F, const Int& v);
    /// Residue class of x (the canonical generator when the modulus is a
    /// factor of a cyclotomic polynomial).
    static FFElement generator(std::shared_ptr<const FiniteField> F);
    /// v-th element in the canonical enumeration: coordinates are the base-ell
    /// digits of v.
    static FFElement by_index(std::shared_ptr<const FiniteField> F, const Int& v);
    static FFElement from_coords(std::shared_ptr<const FiniteField> F,
                                 std::vector<std::uint64_t> coords);

    const std::shared_ptr<const FiniteField>& field() const { return field_; }
    const std::vector<std::uint64_t>& coords() const { return c_; }

    bool is_zero() const;
    bool operator==(const FFElement& o) const;
    bool operator!=(const FFElement& o) const { return !(*this == o); }

    FFElement operator+(const FFElement& o) const;
    FFElement operator-(const FFElement& o) const;
    FFElement operator-() const;
    FFElement operator*(const FFElement& o) const;
    FFElement operator/(const FFElement& o) const;
    FFElement inverse() const;
    FFElement pow(const Int& e) const;

    /// Exact multiplicative order given a multiple `bound` of it.
    Int order_dividing(const Int& bound) const;

private:
    FFElement(std::shared_ptr<const FiniteField> F, std::vector<std::uint64_t> c)
        : field_(std::move(F)), c_(std::move(c)) {}
    std::shared_ptr<const FiniteField> field_;
    std::vector<std::uint64_t> c_;
};

// Poly<FFElement> coefficient hooks.
inline bool is_zero_coeff(const FFElement& x) { return x.is_zero(); }
inline FFElement zero_like(const FFElement& x) { return FFElement::zero(x.field()); }
inline FFElement one_like(const FFElement& x) { return FFElement::one(x.field()); }
inline FFElement inv_coeff(const FFElement& x) { return x.inverse(); }
inline FFElement mul_by_uint(const FFElement& x, unsigned long n) {
    return x * FFElement::from_int(x.field(), Int(n));
}

} // namespace lmodl
