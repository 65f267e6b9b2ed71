#pragma once

#include "lmodl/numeric.hpp"
#include "lmodl/poly.hpp"

#include <memory>
#include <vector>

namespace lmodl {

/// The M-th cyclotomic polynomial, monic of degree phi(M), over Q.
Poly<Rat> cyclotomic_polynomial(unsigned long M);

/// Q(zeta_M) presented as Q[Z]/(Phi_M). Instances are immutable and shared
/// through a registry so elements can carry a cheap handle.
class CyclotomicField {
public:
    static std::shared_ptr<const CyclotomicField> get(unsigned long M);

    unsigned long order() const { return M_; }
    std::size_t degree() const { return static_cast<std::size_t>(minpoly_.degree()); }
    const Poly<Rat>& minpoly() const { return minpoly_; }

private:
    CyclotomicField(unsigned long M, Poly<Rat> phi) : M_(M), minpoly_(std::move(phi)) {}
    unsigned long M_;
    Poly<Rat> minpoly_;
};

/// Element of Q(zeta_M) in the power basis 1, zeta, ..., zeta^{phi(M)-1}.
class CycloElement {
public:
    CycloElement() = default; // empty sentinel; assign before use

    static CycloElement zero(std::shared_ptr<const CyclotomicField> F);
    static CycloElement one(std::shared_ptr<const CyclotomicField> F);
    static CycloElement from_rat(std::shared_ptr<const CyclotomicField> F, const Rat& r);
    /// zeta_M^e reduced into the power basis.
    static CycloElement root_power(std::shared_ptr<const CyclotomicField> F, unsigned long e);
    /// Reduce an arbitrary polynomial in zeta.
    static CycloElement from_poly(std::shared_ptr<const CyclotomicField> F, const Poly<Rat>& p);

    unsigned long order() const { return field_->order(); }
    const std::shared_ptr<const CyclotomicField>& field() const { return field_; }
    const std::vector<Rat>& coords() const { return coords_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Constant coordinate; only meaningful when is_rational().
    Rat rational_value() const;

    /// Image under zeta_M -> zeta_M2^{M2/M}; requires M | M2.
    CycloElement embedded(unsigned long M2) const;

    CycloElement operator+(const CycloElement& o) const;
    CycloElement operator-(const CycloElement& o) const;
    CycloElement operator-() const;
    CycloElement operator*(const CycloElement& o) const;
    CycloElement operator*(const Rat& s) const;
    CycloElement inverse() const;
    CycloElement operator/(const CycloElement& o) const;
    bool operator==(const CycloElement& o) const;
    bool operator!=(const CycloElement& o) const { return !(*this == o); }

private:
    CycloElement(std::shared_ptr<const CyclotomicField> F, std::vector<Rat> c)
        : field_(std::move(F)), coords_(std::move(c)) {}
    std::shared_ptr<const CyclotomicField> field_;
    std::vector<Rat> coords_;
};

// Poly<CycloElement> coefficient hooks.
inline bool is_zero_coeff(const CycloElement& x) { return x.is_zero(); }
inline CycloElement zero_like(const CycloElement& x) { return CycloElement::zero(x.field()); }
inline CycloElement one_like(const CycloElement& x) { return CycloElement::one(x.field()); }
inline CycloElement inv_coeff(const CycloElement& x) { return x.inverse(); }
inline CycloElement mul_by_uint(const CycloElement& x, unsigned long n) { return x * Rat(n); }

} // namespace lmodl
